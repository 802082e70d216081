#include "agfilt/rrspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "agfilt/errors.hpp"

namespace agfilt {

int RRBasis::pole_order(const BasisMonomial& mon) const {
    return curve_->kind() == CurveKind::Elliptic ? 2 * mon.i + 3 * mon.j : mon.i;
}

FieldElement RRBasis::evaluate_monomial(const BasisMonomial& mon, const CurvePoint& pt) const {
    FieldElement acc = curve_->field()->one();
    for (int c = 0; c < mon.i; ++c) acc = acc * pt.x();
    for (int c = 0; c < mon.j; ++c) acc = acc * pt.y();
    return acc;
}

RRBasis rr_basis(const CurveSpecPtr& curve, int m) {
    if (m < 0) throw NegativeDegree("pole order must be >= 0");
    std::vector<BasisMonomial> mons;
    if (curve->kind() == CurveKind::ProjectiveLine) {
        for (int i = 0; i <= m; ++i) mons.push_back({i, 0});
    } else {
        for (int j = 0; j <= 1; ++j)
            for (int i = 0; 2 * i + 3 * j <= m; ++i) mons.push_back({i, j});
        std::sort(mons.begin(), mons.end(),
                  [](const BasisMonomial& a, const BasisMonomial& b) {
                      return 2 * a.i + 3 * a.j < 2 * b.i + 3 * b.j;  // pole orders never tie
                  });
    }
    return RRBasis(curve, m, std::move(mons));
}

FieldElement evaluate(const RRBasis& basis, const std::vector<FieldElement>& coeffs,
                      const CurvePoint& pt) {
    if (pt.is_infinity()) throw EvaluationAtPole("basis functions have poles only at infinity");
    if (!basis.curve()->on_curve(pt)) throw PointNotOnCurve("evaluation point is off the curve");
    if (coeffs.size() != static_cast<std::size_t>(basis.dim()))
        throw std::invalid_argument("coefficient vector length differs from basis dimension");
    FieldElement acc = basis.curve()->field()->zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        acc = acc + coeffs[i] * basis.evaluate_monomial(basis.monomials()[i], pt);
    return acc;
}

}  // namespace agfilt
