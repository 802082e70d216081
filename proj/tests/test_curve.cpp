#include <doctest.h>

#include <set>

#include "agfilt/curve.hpp"
#include "agfilt/errors.hpp"

using namespace agfilt;

namespace {

CurveSpecPtr paper_curve() {  // y^2 = x^3 + x + 1 over F_5
    auto f5 = field_new(5);
    return elliptic_curve(f5, f5->from_int(1), f5->from_int(1));
}

CurvePoint pt(const CurveSpecPtr& curve, std::int64_t x, std::int64_t y) {
    return CurvePoint::affine(curve->field()->from_int(x), curve->field()->from_int(y));
}

// brute-force oracle: sweep all (x, y) pairs
int double_loop_count(const CurveSpecPtr& curve) {
    int count = 1;  // infinity
    for (const auto& x : curve->field()->enumerate())
        for (const auto& y : curve->field()->enumerate())
            if (y * y == x * x * x + curve->a() * x + curve->b()) ++count;
    return count;
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("membership on the paper's curve") {
    auto curve = paper_curve();
    CHECK(curve->on_curve(pt(curve, 0, 1)));
    CHECK_FALSE(curve->on_curve(pt(curve, 1, 2)));  // x=1 gives y^2=3, not a square
    CHECK(curve->on_curve(CurvePoint::infinity(curve->field())));
}

TEST_CASE("rational point enumeration") {
    auto curve = paper_curve();
    const auto points = curve->rational_points();
    REQUIRE(points.size() == 9);
    CHECK(points[0].is_infinity());

    const std::vector<std::pair<int, int>> expected{
        {0, 1}, {0, 4}, {2, 1}, {2, 4}, {3, 1}, {3, 4}, {4, 2}, {4, 3}};
    REQUIRE(points.size() == expected.size() + 1);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(points[i + 1] == pt(curve, expected[i].first, expected[i].second));
    }

    CHECK(double_loop_count(curve) == 9);
    for (const auto& p : points) CHECK(curve->on_curve(p));
}

TEST_CASE("projective line has q + 1 points") {
    auto line = projective_line(field_new(5));
    CHECK(line->rational_points().size() == 6);
    CHECK(line->affine_points().size() == 5);
    CHECK(line->genus() == 0);
    CHECK(paper_curve()->genus() == 1);
}

TEST_CASE("group law basics") {
    auto curve = paper_curve();
    const auto inf = CurvePoint::infinity(curve->field());
    const auto p = pt(curve, 0, 1);

    CHECK(curve->ec_add(p, inf) == p);
    CHECK(curve->ec_add(inf, p) == p);
    CHECK(curve->ec_add(p, curve->ec_neg(p)).is_infinity());

    // tangent at (0,1): lambda = 1/2 = 3, x3 = 9 - 0 = 4, y3 = 3(0-4) - 1 = 2
    const auto dbl = curve->ec_add(p, p);
    CHECK(dbl == pt(curve, 4, 2));
    CHECK(curve->on_curve(dbl));
    // consistency: 3P = 2P + P = (2,1), and ord(P) divides 9
    const auto trip = curve->ec_add(dbl, p);
    CHECK(trip == pt(curve, 2, 1));
    auto acc = inf;
    for (int i = 0; i < 9; ++i) acc = curve->ec_add(acc, p);
    CHECK(acc.is_infinity());
}

TEST_CASE("group law errors") {
    auto curve = paper_curve();
    CHECK_THROWS_AS(curve->ec_add(pt(curve, 1, 2), pt(curve, 0, 1)), PointNotOnCurve);
    auto f5 = field_new(5);
    CHECK_THROWS_AS(elliptic_curve(f5, f5->zero(), f5->zero()), SingularCurve);
    auto f3 = field_new(3);
    CHECK_THROWS_AS(elliptic_curve(f3, f3->one(), f3->one()), UnsupportedCharacteristic);
}

TEST_CASE("group law is associative and commutative (exhaustive, q <= 25)") {
    std::vector<CurveSpecPtr> curves;
    curves.push_back(paper_curve());
    {
        auto f7 = field_new(7);
        curves.push_back(elliptic_curve(f7, f7->from_int(2), f7->from_int(3)));
    }
    {
        auto f13 = field_new(13);
        curves.push_back(elliptic_curve(f13, f13->from_int(1), f13->from_int(6)));
    }
    {
        auto f25 = field_new(5, 2);
        curves.push_back(elliptic_curve(f25, f25->zero(), f25->one()));
    }
    for (const auto& curve : curves) {
        const auto points = curve->rational_points();
        bool ok = true;
        for (const auto& a : points)
            for (const auto& b : points) {
                ok = ok && curve->ec_add(a, b) == curve->ec_add(b, a);
                for (const auto& c : points)
                    ok = ok &&
                         curve->ec_add(curve->ec_add(a, b), c) == curve->ec_add(a, curve->ec_add(b, c));
            }
        CHECK(ok);
    }
}

TEST_CASE("hasse bound and double-loop agreement over small curves") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        auto field = field_new(p);
        int curves_seen = 0;
        for (std::int64_t a = 0; a < 3 && curves_seen < 4; ++a) {
            for (std::int64_t b = 1; b < 4 && curves_seen < 4; ++b) {
                CurveSpecPtr curve;
                try {
                    curve = elliptic_curve(field, field->from_int(a), field->from_int(b));
                } catch (const SingularCurve&) {
                    continue;
                }
                ++curves_seen;
                const auto count = static_cast<long long>(curve->rational_points().size());
                CHECK(count == double_loop_count(curve));
                const long long diff = count - static_cast<long long>(p) - 1;
                CHECK(diff * diff <= 4LL * p);  // |#E - q - 1| <= 2 sqrt(q)
            }
        }
        CHECK(curves_seen > 0);
    }
}

TEST_CASE("point ordering: infinity first, then (x, y) lexicographic") {
    auto curve = paper_curve();
    const auto points = curve->rational_points();
    for (std::size_t i = 1; i < points.size(); ++i) CHECK(points[i - 1] < points[i]);
}

TEST_CASE("divisors") {
    auto curve = paper_curve();
    const auto p = pt(curve, 0, 1);
    const auto q = pt(curve, 2, 1);

    auto d = Divisor::of_point(p, 2);
    d.add(q, 1);
    CHECK(d.degree() == 3);
    CHECK(d.is_effective());
    CHECK(d.multiplicity(p) == 2);

    const auto smaller = Divisor::of_point(p, 1);
    CHECK(Divisor::precedes(smaller, d));
    CHECK_FALSE(Divisor::precedes(d, smaller));
    CHECK_FALSE(Divisor::precedes(d, d));

    const auto mixed = d - Divisor::of_point(q, 2);
    CHECK_FALSE(mixed.is_effective());
    CHECK(mixed.degree() == 1);
    CHECK((d - d).is_zero());
}

TEST_CASE("field mismatch is rejected") {
    auto curve = paper_curve();
    auto f7 = field_new(7);
    CHECK_THROWS_AS(curve->on_curve(CurvePoint::affine(f7->from_int(0), f7->from_int(1))),
                    FieldMismatch);
}

}  // TEST_SUITE
