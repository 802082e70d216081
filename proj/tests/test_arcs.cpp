#include <doctest.h>

#include <algorithm>
#include <set>

#include "agfilt/arcs.hpp"
#include "agfilt/errors.hpp"
#include "agfilt/filtration.hpp"

using namespace agfilt;

namespace {

CurveSpecPtr paper_curve() {
    auto f5 = field_new(5);
    return elliptic_curve(f5, f5->from_int(1), f5->from_int(1));
}

std::vector<ProjPoint> conic_arc(const FieldSpecPtr& f5) {
    std::vector<ProjPoint> pts;
    for (const auto& t : f5->enumerate()) pts.push_back(ProjPoint({f5->one(), t, t * t}));
    pts.push_back(ProjPoint({f5->zero(), f5->zero(), f5->one()}));
    return pts;
}

std::vector<ProjPoint> all_proj_points(const FieldSpecPtr& field, int r) {
    std::set<ProjPoint> seen;
    const auto elements = field->enumerate();
    std::vector<std::size_t> digits(static_cast<std::size_t>(r) + 1, 0);
    const std::uint64_t q = field->q();
    std::uint64_t total = 1;
    for (int i = 0; i <= r; ++i) total *= q;
    for (std::uint64_t it = 1; it < total; ++it) {  // skip the zero vector
        auto v = it;
        std::vector<FieldElement> coords;
        for (int i = 0; i <= r; ++i) {
            coords.push_back(field->from_index(v % q));
            v /= q;
        }
        seen.insert(ProjPoint(std::move(coords)));
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

TEST_SUITE("arcs") {

TEST_CASE("normalization") {
    auto f5 = field_new(5);
    const ProjPoint a({f5->from_int(2), f5->from_int(4)});
    CHECK(a.coords()[0] == f5->one());
    CHECK(a.coords()[1] == f5->from_int(2));

    // scaling by any nonzero constant leaves the point unchanged
    for (std::int64_t c = 1; c < 5; ++c) {
        const ProjPoint b({f5->from_int(2 * c), f5->from_int(4 * c)});
        CHECK(a == b);
    }
    // normalization is idempotent
    const ProjPoint again(a.coords());
    CHECK(again == a);

    CHECK_THROWS_AS(ProjPoint({f5->zero(), f5->zero()}), std::invalid_argument);
}

TEST_CASE("generator columns as projective points") {
    auto f5 = field_new(5);
    auto line = projective_line(f5);
    std::vector<CurvePoint> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(CurvePoint::affine(f5->from_int(i)));
    const auto code = eval_code(rr_basis(line, 1), EvaluationSet(line, pts));
    const auto cols = columns_as_points(code);
    REQUIRE(cols.size() == 4);
    // the generator is stored row-reduced, [[1,0,4,3],[0,1,2,3]]; its columns
    // are the x-line points in transformed coordinates and stay distinct
    CHECK(cols[0] == ProjPoint({f5->one(), f5->zero()}));
    CHECK(cols[1] == ProjPoint({f5->zero(), f5->one()}));
    CHECK(cols[2] == ProjPoint({f5->one(), f5->from_int(3)}));
    CHECK(cols[3] == ProjPoint({f5->one(), f5->from_int(1)}));
    CHECK(is_k_arc(cols, 1).is_arc);

    // k = 1: every column is the single point of P^0
    const auto rep = eval_code(rr_basis(line, 0), EvaluationSet(line, pts));
    for (const auto& pt : columns_as_points(rep)) CHECK(pt == ProjPoint({f5->one()}));

    // identity 2x2 generator
    const LinearCode id2(f5, 2,
                         {{f5->one(), f5->zero()}, {f5->zero(), f5->one()}});
    const auto id_cols = columns_as_points(id2);
    CHECK(id_cols[0] == ProjPoint({f5->one(), f5->zero()}));
    CHECK(id_cols[1] == ProjPoint({f5->zero(), f5->one()}));

    const LinearCode zero_col(f5, 3,
                              {{f5->zero(), f5->one(), f5->from_int(2)}});
    CHECK_THROWS_AS(columns_as_points(zero_col), ZeroColumn);
}

TEST_CASE("the conic plus its infinity point is a 6-arc in P^2(F_5)") {
    auto f5 = field_new(5);
    const auto pts = conic_arc(f5);
    const auto report = is_k_arc(pts, 2);
    CHECK(report.n == 6);
    CHECK(report.is_arc);
    CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("collinear points fail with a lexicographically-least witness") {
    auto f5 = field_new(5);
    // (1:0:0), (1:1:0), (1:2:0) lie on the line z = 0
    std::vector<ProjPoint> pts{ProjPoint({f5->one(), f5->zero(), f5->zero()}),
                               ProjPoint({f5->one(), f5->one(), f5->zero()}),
                               ProjPoint({f5->zero(), f5->zero(), f5->one()}),
                               ProjPoint({f5->one(), f5->from_int(2), f5->zero()})};
    const auto report = is_k_arc(pts, 2);
    CHECK_FALSE(report.is_arc);
    REQUIRE(report.witness.has_value());
    CHECK(*report.witness == std::vector<int>{0, 1, 3});
}

TEST_CASE("reed-solomon columns always form an arc") {
    auto f7 = field_new(7);
    auto line = projective_line(f7);
    std::vector<CurvePoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(CurvePoint::affine(f7->from_int(i)));
    const EvaluationSet gamma(line, pts);
    for (int m = 0; m < 6; ++m) {
        const auto code = eval_code(rr_basis(line, m), gamma);
        const auto report = is_k_arc(columns_as_points(code), code.dimension() - 1);
        CHECK(report.is_arc);
    }
}

TEST_CASE("size bound and caps") {
    CHECK(arc_size_bound(2, 5) == 7);
    CHECK(arc_size_bound(1, 5) == 6);
    CHECK_THROWS_AS(arc_size_bound(0, 5), std::invalid_argument);

    auto f5 = field_new(5);
    CHECK_THROWS_AS(is_k_arc(conic_arc(f5), 2, 3), TooManySubsets);  // C(6,3) = 20 > 3
}

TEST_CASE("no point of P^2(F_5) extends the conic arc") {
    auto f5 = field_new(5);
    const auto conic = conic_arc(f5);
    const auto everything = all_proj_points(f5, 2);
    CHECK(everything.size() == 31);  // q^2 + q + 1
    int extensions = 0;
    for (const auto& cand : everything) {
        if (std::find(conic.begin(), conic.end(), cand) != conic.end()) continue;
        auto pts = conic;
        pts.push_back(cand);
        if (is_k_arc(pts, 2).is_arc) ++extensions;
    }
    CHECK(extensions == 0);  // consistent with (and below) the q + r bound
}

TEST_CASE("mds iff arc on the key examples") {
    auto f5 = field_new(5);
    auto line = projective_line(f5);
    std::vector<CurvePoint> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(CurvePoint::affine(f5->from_int(i)));
    const EvaluationSet gamma4(line, pts);

    const auto rs = eval_code(rr_basis(line, 1), gamma4);  // [4,2,3]
    auto check = mds_iff_arc(rs);
    CHECK(check.mds);
    CHECK(check.arc);
    CHECK(check.equivalent);

    auto curve = paper_curve();
    const auto c2 = eval_code(rr_basis(curve, 2), EvaluationSet::all_affine(curve));
    check = mds_iff_arc(c2);  // repeated x-values give projectively equal columns
    CHECK_FALSE(check.mds);
    CHECK_FALSE(check.arc);
    CHECK(check.equivalent);

    const auto rep = eval_code(rr_basis(line, 0), gamma4);  // [4,1,4]
    check = mds_iff_arc(rep);
    CHECK(check.mds);
    CHECK(check.arc);
    CHECK(check.equivalent);
}

TEST_CASE("the two oracles agree over every chain level (q <= 9, n <= 10)") {
    std::vector<LinearCode> corpus;
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {5, 1}, {7, 1}, {2, 2}, {3, 2}}) {
        auto field = field_new(p, k);
        auto line = projective_line(field);
        const int n = std::min<int>(static_cast<int>(field->q()), 6);
        std::vector<CurvePoint> pts;
        for (int i = 0; i < n; ++i)
            pts.push_back(CurvePoint::affine(field->from_index(static_cast<std::uint64_t>(i))));
        const EvaluationSet gamma(line, pts);
        for (int m = 0; m < n; ++m) corpus.push_back(eval_code(rr_basis(line, m), gamma));
    }
    auto curve = paper_curve();
    const auto gamma8 = EvaluationSet::all_affine(curve);
    for (int m = 0; m <= 7; ++m) corpus.push_back(eval_code(rr_basis(curve, m), gamma8));

    for (const auto& code : corpus) {
        const auto check = mds_iff_arc(code);
        CHECK(check.equivalent);
    }
}

}  // TEST_SUITE
