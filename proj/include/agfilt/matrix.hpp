#ifndef AGFILT_MATRIX_HPP
#define AGFILT_MATRIX_HPP

#include <vector>

#include "agfilt/gf.hpp"

namespace agfilt::linalg {

using Row = std::vector<FieldElement>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form; zero rows dropped. Rows must share one length.
Matrix rref(Matrix rows);

int rank(Matrix rows);

/// Determinant of a square matrix by Gaussian elimination.
FieldElement det(Matrix m, const FieldSpecPtr& field);

/// True iff v lies in the span of `rref_rows` (which must be in RREF).
bool in_row_space(const Matrix& rref_rows, Row v);

}  // namespace agfilt::linalg

#endif
