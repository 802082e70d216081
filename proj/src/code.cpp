#include "agfilt/code.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>

#include "agfilt/errors.hpp"

namespace agfilt {

namespace {

// true iff q^k > cap, without overflowing
bool message_space_exceeds(std::uint64_t q, int k, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > cap / q) return true;
        total *= q;
    }
    return total > cap;
}

std::uint64_t message_space(std::uint64_t q, int k) {
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= q;
    return total;
}

// Index-table view of a small field: element i is field.from_index(i), and
// arithmetic becomes lookups. Keeps the exhaustive scans allocation-free.
struct IndexedField {
    std::uint32_t q;
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;

    explicit IndexedField(const FieldSpec& field) : q(static_cast<std::uint32_t>(field.q())) {
        const auto elements = field.enumerate();
        add.resize(static_cast<std::size_t>(q) * q);
        mul.resize(static_cast<std::size_t>(q) * q);
        for (std::uint32_t i = 0; i < q; ++i)
            for (std::uint32_t j = 0; j <= i; ++j) {
                const auto s = static_cast<std::uint16_t>((elements[i] + elements[j]).index());
                const auto m = static_cast<std::uint16_t>((elements[i] * elements[j]).index());
                add[static_cast<std::size_t>(i) * q + j] = s;
                add[static_cast<std::size_t>(j) * q + i] = s;
                mul[static_cast<std::size_t>(i) * q + j] = m;
                mul[static_cast<std::size_t>(j) * q + i] = m;
            }
    }
};

// Direct-arithmetic fallback for fields too large for index tables.
template <typename Visit>
void scan_codewords_generic(const LinearCode& code, Visit&& visit) {
    const int k = code.dimension();
    const int n = code.length();
    const auto field = code.field();
    const auto elements = field->enumerate();
    const std::uint64_t q = field->q();

    std::vector<std::uint64_t> message(static_cast<std::size_t>(k), 0);
    const std::uint64_t total = message_space(q, k);
    for (std::uint64_t it = 0;; ++it) {
        int weight = 0;
        for (int c = 0; c < n; ++c) {
            FieldElement acc = field->zero();
            for (int r = 0; r < k; ++r) {
                const auto m = message[static_cast<std::size_t>(r)];
                if (m == 0) continue;
                acc = acc + elements[m] * code.generator()[static_cast<std::size_t>(r)]
                                                          [static_cast<std::size_t>(c)];
            }
            if (!acc.is_zero()) ++weight;
        }
        visit(weight);
        if (it + 1 == total) break;
        for (int r = 0; r < k; ++r) {
            if (++message[static_cast<std::size_t>(r)] < q) break;
            message[static_cast<std::size_t>(r)] = 0;
        }
    }
}

constexpr std::uint64_t kIndexTableLimit = 2048;  // q*q uint16 tables stay small

// Visits the weight of every codeword, zero message included.
template <typename Visit>
void scan_codewords(const LinearCode& code, Visit&& visit) {
    if (code.field()->q() > kIndexTableLimit) {
        scan_codewords_generic(code, std::forward<Visit>(visit));
        return;
    }
    const int k = code.dimension();
    const int n = code.length();
    const IndexedField tables(*code.field());
    const std::uint32_t q = tables.q;

    std::vector<std::uint16_t> gen(static_cast<std::size_t>(k) * n);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c)
            gen[static_cast<std::size_t>(r) * n + c] =
                static_cast<std::uint16_t>(code.generator()[static_cast<std::size_t>(r)]
                                                           [static_cast<std::size_t>(c)].index());

    std::vector<std::uint32_t> message(static_cast<std::size_t>(k), 0);
    std::vector<std::uint16_t> word(static_cast<std::size_t>(n), 0);
    const std::uint64_t total = message_space(q, k);
    for (std::uint64_t it = 0;; ++it) {
        int weight = 0;
        std::fill(word.begin(), word.end(), 0);
        for (int r = 0; r < k; ++r) {
            const std::uint32_t m = message[static_cast<std::size_t>(r)];
            if (m == 0) continue;
            const std::uint16_t* row = gen.data() + static_cast<std::size_t>(r) * n;
            for (int c = 0; c < n; ++c) {
                const std::uint32_t prod = tables.mul[static_cast<std::size_t>(m) * q + row[c]];
                word[static_cast<std::size_t>(c)] =
                    tables.add[static_cast<std::size_t>(word[static_cast<std::size_t>(c)]) * q + prod];
            }
        }
        for (int c = 0; c < n; ++c)
            if (word[static_cast<std::size_t>(c)] != 0) ++weight;
        visit(weight);
        if (it + 1 == total) break;
        for (int r = 0; r < k; ++r) {
            if (++message[static_cast<std::size_t>(r)] < q) break;
            message[static_cast<std::size_t>(r)] = 0;
        }
    }
}

}  // namespace

EvaluationSet::EvaluationSet(CurveSpecPtr curve, std::vector<CurvePoint> points)
    : curve_(std::move(curve)), points_(std::move(points)) {
    std::set<CurvePoint> seen;
    for (const auto& pt : points_) {
        if (pt.is_infinity())
            throw PointAtPole("evaluation set must avoid the divisor support at infinity");
        if (!curve_->on_curve(pt)) throw PointNotOnCurve("evaluation point is off the curve");
        if (!seen.insert(pt).second) throw std::invalid_argument("duplicate evaluation point");
    }
}

EvaluationSet EvaluationSet::all_affine(const CurveSpecPtr& curve) {
    return EvaluationSet(curve, curve->affine_points());
}

EvaluationSet EvaluationSet::subset(const std::vector<int>& indices) const {
    std::vector<CurvePoint> pts;
    pts.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || i >= n()) throw std::invalid_argument("evaluation point index out of range");
        pts.push_back(points_[static_cast<std::size_t>(i)]);
    }
    return EvaluationSet(curve_, std::move(pts));
}

bool EvaluationSet::contains(const CurvePoint& pt) const {
    return std::find(points_.begin(), points_.end(), pt) != points_.end();
}

bool EvaluationSet::is_subset_of(const EvaluationSet& other) const {
    return std::all_of(points_.begin(), points_.end(),
                       [&](const CurvePoint& pt) { return other.contains(pt); });
}

struct LinearCode::DistanceCache {
    std::mutex mu;
    std::optional<int> d;
};

LinearCode::LinearCode(FieldSpecPtr field, int n, linalg::Matrix rows)
    : field_(std::move(field)), n_(n), cache_(std::make_shared<DistanceCache>()) {
    for (const auto& row : rows)
        if (row.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("generator row length differs from code length");
    gen_ = linalg::rref(std::move(rows));
}

bool LinearCode::scan_feasible(std::uint64_t cap) const {
    return !message_space_exceeds(field_->q(), dimension(), cap);
}

int LinearCode::min_distance(std::uint64_t cap) const {
    if (dimension() == 0) throw EmptyCode("the zero code has no nonzero codeword");
    {
        std::scoped_lock lock(cache_->mu);
        if (cache_->d) return *cache_->d;
    }
    if (!scan_feasible(cap))
        throw SearchTooLarge("message space q^k exceeds the distance cap");
    int best = n_ + 1;
    scan_codewords(*this, [&](int weight) {
        if (weight > 0 && weight < best) best = weight;
    });
    std::scoped_lock lock(cache_->mu);
    cache_->d = best;
    return best;
}

std::map<int, std::uint64_t> LinearCode::weight_distribution(std::uint64_t cap) const {
    if (!scan_feasible(cap))
        throw SearchTooLarge("message space q^k exceeds the distance cap");
    std::map<int, std::uint64_t> counts;
    if (dimension() == 0) {
        counts[0] = 1;
        return counts;
    }
    scan_codewords(*this, [&](int weight) { ++counts[weight]; });
    return counts;
}

LinearCode eval_code(const RRBasis& basis, const EvaluationSet& gamma) {
    if (!(*basis.curve() == *gamma.curve()))
        throw std::invalid_argument("basis and evaluation set live on different curves");
    linalg::Matrix rows;
    rows.reserve(static_cast<std::size_t>(basis.dim()));
    for (const auto& mon : basis.monomials()) {
        linalg::Row row;
        row.reserve(static_cast<std::size_t>(gamma.n()));
        for (const auto& pt : gamma.points()) row.push_back(basis.evaluate_monomial(mon, pt));
        rows.push_back(std::move(row));
    }
    return LinearCode(basis.curve()->field(), gamma.n(), std::move(rows));
}

int goppa_bound(const RRBasis& basis, const EvaluationSet& gamma) {
    return gamma.n() - basis.pole_bound();
}

int singleton_bound(const LinearCode& code) { return code.length() - code.dimension() + 1; }

bool is_mds(const LinearCode& code, std::uint64_t cap) {
    return code.min_distance(cap) == singleton_bound(code);
}

}  // namespace agfilt
