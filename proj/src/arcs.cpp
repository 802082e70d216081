#include "agfilt/arcs.hpp"

#include <stdexcept>

#include "agfilt/errors.hpp"
#include "agfilt/matrix.hpp"

namespace agfilt {

namespace {

// C(n, k) compared against a cap without overflow
bool subset_count_exceeds(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return false;
    long double count = 1;
    for (int i = 0; i < k; ++i) count = count * (n - i) / (i + 1);
    return count > static_cast<long double>(cap);
}

}  // namespace

ProjPoint::ProjPoint(std::vector<FieldElement> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("projective point needs coordinates");
    for (const auto& c : coords_) {
        if (!c.is_zero()) {
            const FieldElement inv = c.inv();
            for (auto& e : coords_) e = e * inv;
            return;
        }
    }
    throw std::invalid_argument("the zero vector is not a projective point");
}

bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    if (auto c = a.coords_.size() <=> b.coords_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
        if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::vector<ProjPoint> columns_as_points(const LinearCode& code) {
    const int k = code.dimension();
    if (k < 1) throw EmptyCode("a zero code has no column points");
    std::vector<ProjPoint> points;
    points.reserve(static_cast<std::size_t>(code.length()));
    for (int c = 0; c < code.length(); ++c) {
        std::vector<FieldElement> col;
        col.reserve(static_cast<std::size_t>(k));
        bool nonzero = false;
        for (int r = 0; r < k; ++r) {
            col.push_back(code.generator()[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
            nonzero = nonzero || !col.back().is_zero();
        }
        if (!nonzero)
            throw ZeroColumn("column " + std::to_string(c) +
                             " is zero: the evaluation point is a base point");
        points.emplace_back(std::move(col));
    }
    return points;
}

ArcReport is_k_arc(const std::vector<ProjPoint>& points, int r, std::uint64_t subset_cap) {
    if (r < 0) throw std::invalid_argument("ambient dimension must be >= 0");
    for (const auto& pt : points)
        if (pt.ambient_dim() != r)
            throw std::invalid_argument("point does not live in the stated ambient space");

    ArcReport report;
    report.n = static_cast<int>(points.size());
    report.ambient_dim = r;
    const int sz = r + 1;
    if (report.n < sz) {  // no subset to test
        report.is_arc = true;
        return report;
    }
    if (subset_count_exceeds(report.n, sz, subset_cap))
        throw TooManySubsets("too many (r+1)-subsets for the configured cap");

    const FieldSpecPtr field = points[0].coords()[0].spec();
    std::vector<int> idx(static_cast<std::size_t>(sz));
    for (int i = 0; i < sz; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        linalg::Matrix m;
        m.reserve(static_cast<std::size_t>(sz));
        for (int i : idx) m.push_back(points[static_cast<std::size_t>(i)].coords());
        if (linalg::det(std::move(m), field).is_zero()) {
            report.is_arc = false;
            report.witness = idx;
            return report;
        }
        // next combination, lexicographic
        int pos = sz - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == report.n - sz + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < sz; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    report.is_arc = true;
    return report;
}

int arc_size_bound(int r, std::uint64_t q) {
    if (r < 1) throw std::invalid_argument("arc bound needs ambient dimension >= 1");
    return static_cast<int>(q) + r;
}

MdsArcCheck mds_iff_arc(const LinearCode& code, std::uint64_t distance_cap,
                        std::uint64_t subset_cap) {
    MdsArcCheck check;
    check.mds = is_mds(code, distance_cap);
    check.arc = is_k_arc(columns_as_points(code), code.dimension() - 1, subset_cap).is_arc;
    check.equivalent = (check.mds == check.arc);
    return check;
}

}  // namespace agfilt
