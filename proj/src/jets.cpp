#include "agfilt/jets.hpp"

#include <stdexcept>

#include "agfilt/errors.hpp"

namespace agfilt {

namespace {

Series series_zero(const FieldSpecPtr& field, int N) {
    return Series(static_cast<std::size_t>(N), field->zero());
}

Series series_mul(const Series& a, const Series& b, const FieldSpecPtr& field) {
    const std::size_t N = a.size();
    Series out = series_zero(field, static_cast<int>(N));
    for (std::size_t i = 0; i < N; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < N; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

Series series_pow(const Series& base, int e, const FieldSpecPtr& field) {
    Series out = series_zero(field, static_cast<int>(base.size()));
    out[0] = field->one();
    for (int c = 0; c < e; ++c) out = series_mul(out, base, field);
    return out;
}

// x(t)^3 + a x(t) + b
Series curve_rhs(const Series& xs, const FieldElement& a, const FieldElement& b,
                 const FieldSpecPtr& field) {
    Series out = series_mul(series_mul(xs, xs, field), xs, field);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + a * xs[i];
    out[0] = out[0] + b;
    return out;
}

Series checked_jet(const FieldSpecPtr& field, const FieldElement& value0, int N,
                   std::optional<Series> jet) {
    if (!jet) {
        Series s = series_zero(field, N);
        s[0] = value0;
        s[1] = field->one();
        return s;
    }
    Series s = std::move(*jet);
    s.resize(static_cast<std::size_t>(N), field->zero());
    if (!(s[0] == value0)) throw std::invalid_argument("jet must start at the center coordinate");
    if (s[1].is_zero()) throw std::invalid_argument("degenerate jet: zero t coefficient");
    return s;
}

}  // namespace

TruncatedArc lift_arc(const CurveSpecPtr& curve, const CurvePoint& center, int N,
                      std::optional<Series> x_jet) {
    if (N < 2) throw std::invalid_argument("truncation order must be >= 2");
    if (center.is_infinity()) throw std::invalid_argument("arc centers must be affine");
    if (!curve->on_curve(center)) throw PointNotOnCurve("arc center is off the curve");
    const auto field = curve->field();

    Series xs = checked_jet(field, center.x(), N, std::move(x_jet));
    if (curve->kind() == CurveKind::ProjectiveLine)
        return TruncatedArc{curve, center, N, std::move(xs), series_zero(field, N)};

    const FieldElement two_y0 = field->from_int(2) * center.y();
    if (two_y0.is_zero())
        throw VerticalTangent("y0 = 0: x is not a local parameter; supply a y-led jet");

    // Solve y(t)^2 = x(t)^3 + a x(t) + b coefficient by coefficient:
    // 2 y0 y_n = F_n - sum_{0 < i < n} y_i y_{n-i}.
    const Series rhs = curve_rhs(xs, curve->a(), curve->b(), field);
    Series ys = series_zero(field, N);
    ys[0] = center.y();
    const FieldElement inv2y0 = two_y0.inv();
    for (int n = 1; n < N; ++n) {
        FieldElement conv = field->zero();
        for (int i = 1; i < n; ++i)
            conv = conv + ys[static_cast<std::size_t>(i)] * ys[static_cast<std::size_t>(n - i)];
        ys[static_cast<std::size_t>(n)] = (rhs[static_cast<std::size_t>(n)] - conv) * inv2y0;
    }
    return TruncatedArc{curve, center, N, std::move(xs), std::move(ys)};
}

namespace detail {

// y-led lift for 2-torsion centers: y(t) = y0 + t, x(t) solved from
// x^3 + a x + (b - y(t)^2) = 0 with x(0) = x0. Nonsingularity makes
// 3 x0^2 + a invertible exactly when 2 y0 = 0.
TruncatedArc lift_arc_y_led(const CurveSpecPtr& curve, const CurvePoint& center, int N) {
    const auto field = curve->field();
    Series ys = series_zero(field, N);
    ys[0] = center.y();
    ys[1] = field->one();
    const Series target = series_mul(ys, ys, field);  // x^3 + ax + b must equal this
    const FieldElement slope = field->from_int(3) * center.x() * center.x() + curve->a();
    const FieldElement inv_slope = slope.inv();
    Series xs = series_zero(field, N);
    xs[0] = center.x();
    for (int n = 1; n < N; ++n) {
        const Series cur = curve_rhs(xs, curve->a(), curve->b(), field);
        xs[static_cast<std::size_t>(n)] =
            (target[static_cast<std::size_t>(n)] - cur[static_cast<std::size_t>(n)]) * inv_slope;
    }
    return TruncatedArc{curve, center, N, std::move(xs), std::move(ys)};
}

TruncatedArc lift_any(const CurveSpecPtr& curve, const CurvePoint& center, int N) {
    if (curve->kind() == CurveKind::Elliptic &&
        (curve->field()->from_int(2) * center.y()).is_zero())
        return lift_arc_y_led(curve, center, N);
    return lift_arc(curve, center, N);
}

}  // namespace detail

VanishingOrder ord_of_series(const Series& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s[i].is_zero()) return {static_cast<int>(i), false};
    return {static_cast<int>(s.size()), true};
}

Series series_product(const Series& a, const Series& b, const FieldSpecPtr& field) {
    if (a.size() != b.size()) throw std::invalid_argument("series truncation orders differ");
    return series_mul(a, b, field);
}

Series compose_along(const TruncatedArc& arc, const RRBasis& basis,
                     const std::vector<FieldElement>& coeffs) {
    if (!(*basis.curve() == *arc.curve))
        throw std::invalid_argument("basis and arc live on different curves");
    if (coeffs.size() != static_cast<std::size_t>(basis.dim()))
        throw std::invalid_argument("coefficient vector length differs from basis dimension");
    const auto field = arc.curve->field();
    Series acc = series_zero(field, arc.truncation);
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
        if (coeffs[c].is_zero()) continue;
        const auto& mon = basis.monomials()[c];
        Series term = series_pow(arc.x_series, mon.i, field);
        if (mon.j > 0) term = series_mul(term, series_pow(arc.y_series, mon.j, field), field);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] + coeffs[c] * term[i];
    }
    return acc;
}

VanishingOrder ord_along(const TruncatedArc& arc, const RRBasis& basis,
                         const std::vector<FieldElement>& coeffs) {
    return ord_of_series(compose_along(arc, basis, coeffs));
}

VanishingOrder ord_along(const TruncatedArc& arc, const CurvePoint& divisor_point) {
    if (divisor_point.is_infinity())
        throw std::invalid_argument("local equations are only taken at affine points");
    // Vanishing order of the point's ideal (x - c, y - d): the minimum of the
    // two pullback orders. A single coordinate function will not do: x - c
    // also vanishes at the conjugate point (c, -d), which the arc may avoid.
    Series sx = arc.x_series;
    sx[0] = sx[0] - divisor_point.x();
    const auto ox = ord_of_series(sx);
    if (arc.curve->kind() == CurveKind::ProjectiveLine) return ox;
    Series sy = arc.y_series;
    sy[0] = sy[0] - divisor_point.y();
    const auto oy = ord_of_series(sy);
    return oy.order < ox.order ? oy : ox;
}

int contact_count(const TruncatedArc& arc, const std::vector<CurvePoint>& divisor_points) {
    int count = 0;
    for (const auto& pt : divisor_points)
        if (ord_along(arc, pt).order >= 1) ++count;
    return count;
}

MaxContact max_contact(const CurveSpecPtr& curve, const std::vector<CurvePoint>& divisor_points,
                       int N) {
    for (const auto& pt : divisor_points)
        if (pt.is_infinity()) throw std::invalid_argument("divisor points must be affine");
    MaxContact best;
    for (const auto& center : curve->affine_points()) {
        const TruncatedArc arc = detail::lift_any(curve, center, N);
        const int count = contact_count(arc, divisor_points);
        if (!best.witness || count > best.count) {
            best.count = count;
            best.witness = center;
        }
    }
    return best;
}

}  // namespace agfilt
