#include "agfilt/matrix.hpp"

#include <cstddef>

namespace agfilt::linalg {

Matrix rref(Matrix rows) {
    if (rows.empty()) return rows;
    const std::size_t n = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);

        const FieldElement inv = rows[pivot_row][col].inv();
        for (auto& e : rows[pivot_row]) e = e * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            const FieldElement f = rows[r][col];
            for (std::size_t c = 0; c < n; ++c) rows[r][c] = rows[r][c] - f * rows[pivot_row][c];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

int rank(Matrix rows) { return static_cast<int>(rref(std::move(rows)).size()); }

FieldElement det(Matrix m, const FieldSpecPtr& field) {
    const std::size_t n = m.size();
    FieldElement result = field->one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) return field->zero();
        if (sel != col) {
            std::swap(m[sel], m[col]);
            result = -result;
        }
        result = result * m[col][col];
        const FieldElement inv = m[col][col].inv();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const FieldElement f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    return result;
}

bool in_row_space(const Matrix& rref_rows, Row v) {
    for (const auto& row : rref_rows) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead == row.size()) continue;
        if (v[lead].is_zero()) continue;
        const FieldElement f = v[lead];
        for (std::size_t c = 0; c < v.size(); ++c) v[c] = v[c] - f * row[c];
    }
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace agfilt::linalg
