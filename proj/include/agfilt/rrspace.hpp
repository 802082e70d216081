#ifndef AGFILT_RRSPACE_HPP
#define AGFILT_RRSPACE_HPP

#include <vector>

#include "agfilt/curve.hpp"

namespace agfilt {

/// A basis function x^i y^j. On the projective line j is always 0; on an
/// elliptic curve j is 0 or 1 with y^2 rewritten through the curve equation.
struct BasisMonomial {
    int i = 0;
    int j = 0;
    friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

/// An explicit basis of L(m * P_inf): functions with pole order at most m at
/// the point at infinity and regular everywhere else, ordered by pole order
/// (i on the line, 2i + 3j on an elliptic curve). Bases nest by prefix:
/// rr_basis(m) is a prefix of rr_basis(m + 1).
class RRBasis {
  public:
    const CurveSpecPtr& curve() const { return curve_; }
    int pole_bound() const { return m_; }
    int dim() const { return static_cast<int>(monomials_.size()); }
    const std::vector<BasisMonomial>& monomials() const { return monomials_; }

    int pole_order(const BasisMonomial& mon) const;

    FieldElement evaluate_monomial(const BasisMonomial& mon, const CurvePoint& pt) const;

  private:
    friend RRBasis rr_basis(const CurveSpecPtr&, int);
    RRBasis(CurveSpecPtr curve, int m, std::vector<BasisMonomial> monomials)
        : curve_(std::move(curve)), m_(m), monomials_(std::move(monomials)) {}

    CurveSpecPtr curve_;
    int m_;
    std::vector<BasisMonomial> monomials_;
};

RRBasis rr_basis(const CurveSpecPtr& curve, int m);

/// Evaluates sum_i coeffs[i] * basis_i at an affine point of the curve.
FieldElement evaluate(const RRBasis& basis, const std::vector<FieldElement>& coeffs,
                      const CurvePoint& pt);

}  // namespace agfilt

#endif
