#ifndef AGFILT_JETS_HPP
#define AGFILT_JETS_HPP

#include <optional>
#include <vector>

#include "agfilt/rrspace.hpp"

namespace agfilt {

/// Coefficients of a power series in t, truncated after t^(N-1).
using Series = std::vector<FieldElement>;

/// A formal arc through an affine point of the curve, truncated at order N:
/// x(t), y(t) with (x(0), y(0)) the center and the curve equation satisfied
/// modulo t^N. On the projective line the y series is identically zero.
struct TruncatedArc {
    CurveSpecPtr curve;
    CurvePoint center;
    int truncation;  // N >= 2
    Series x_series;
    Series y_series;
};

/// Lifts an arc through `center` with x as the local parameter: x(t) is the
/// supplied jet (x(0) = x0, nonzero t term) or x0 + t, and y(t) is the unique
/// Hensel lift with y(0) = y0, found coefficient by coefficient mod t^N.
/// Throws VerticalTangent at elliptic points with y0 = 0, where x fails to be
/// a local parameter.
TruncatedArc lift_arc(const CurveSpecPtr& curve, const CurvePoint& center, int N,
                      std::optional<Series> x_jet = std::nullopt);

struct VanishingOrder {
    int order;       // t-adic valuation; equals N when truncated
    bool truncated;  // all N coefficients vanish, so the true order is >= N
};

VanishingOrder ord_of_series(const Series& s);

/// Truncated product of two series of equal length.
Series series_product(const Series& a, const Series& b, const FieldSpecPtr& field);

/// Pullback of sum coeffs[i] * basis_i along the arc, as a series in t.
Series compose_along(const TruncatedArc& arc, const RRBasis& basis,
                     const std::vector<FieldElement>& coeffs);

/// Vanishing order of sum coeffs[i] * basis_i along the arc.
VanishingOrder ord_along(const TruncatedArc& arc, const RRBasis& basis,
                         const std::vector<FieldElement>& coeffs);

/// Vanishing order of the local equation of an affine point along the arc:
/// x - c on the line and on elliptic points with 2d != 0, else y - d.
VanishingOrder ord_along(const TruncatedArc& arc, const CurvePoint& divisor_point);

/// Number of divisor points whose local equation vanishes along the arc. For
/// degree-one divisors this is the multiplicity of the arc center in the list.
int contact_count(const TruncatedArc& arc, const std::vector<CurvePoint>& divisor_points);

struct MaxContact {
    int count = 0;
    std::optional<CurvePoint> witness;  // first center attaining the maximum
};

/// Maximum of contact_count over arcs centered at every affine rational point
/// (sufficient for first-order contact, which depends only on the center).
MaxContact max_contact(const CurveSpecPtr& curve, const std::vector<CurvePoint>& divisor_points,
                       int N);

}  // namespace agfilt

#endif
