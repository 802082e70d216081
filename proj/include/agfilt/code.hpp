#ifndef AGFILT_CODE_HPP
#define AGFILT_CODE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "agfilt/matrix.hpp"
#include "agfilt/rrspace.hpp"

namespace agfilt {

/// An ordered set of n distinct affine rational points, disjoint from the
/// divisor support {P_inf}.
class EvaluationSet {
  public:
    EvaluationSet(CurveSpecPtr curve, std::vector<CurvePoint> points);

    static EvaluationSet all_affine(const CurveSpecPtr& curve);
    EvaluationSet subset(const std::vector<int>& indices) const;

    const CurveSpecPtr& curve() const { return curve_; }
    const std::vector<CurvePoint>& points() const { return points_; }
    int n() const { return static_cast<int>(points_.size()); }

    bool contains(const CurvePoint& pt) const;
    bool is_subset_of(const EvaluationSet& other) const;

  private:
    CurveSpecPtr curve_;
    std::vector<CurvePoint> points_;
};

/// A linear [n, k] code over GF(q): the row space of its generator matrix,
/// stored in reduced row echelon form so row-space equality is structural.
/// The exact minimum distance is computed on demand by exhausting the message
/// space and cached (the cache is shared across copies).
class LinearCode {
  public:
    static constexpr std::uint64_t kDefaultDistanceCap = 100'000'000;

    LinearCode(FieldSpecPtr field, int n, linalg::Matrix rows);

    const FieldSpecPtr& field() const { return field_; }
    int length() const { return n_; }
    int dimension() const { return static_cast<int>(gen_.size()); }
    const linalg::Matrix& generator() const { return gen_; }

    /// Exact minimum weight of a nonzero codeword, by scanning all q^k - 1
    /// nonzero messages. Throws EmptyCode when k = 0 and SearchTooLarge when
    /// q^k exceeds the cap.
    int min_distance(std::uint64_t cap = kDefaultDistanceCap) const;

    /// Codeword count per Hamming weight over all q^k messages.
    std::map<int, std::uint64_t> weight_distribution(std::uint64_t cap = kDefaultDistanceCap) const;

    /// True iff the message space q^k fits under the cap.
    bool scan_feasible(std::uint64_t cap = kDefaultDistanceCap) const;

  private:
    FieldSpecPtr field_;
    int n_;
    linalg::Matrix gen_;

    struct DistanceCache;
    std::shared_ptr<DistanceCache> cache_;
};

/// The evaluation code: row space of [basis_i(P_j)]. With n > deg the rank
/// equals the basis dimension; smaller n can force a kernel.
LinearCode eval_code(const RRBasis& basis, const EvaluationSet& gamma);

/// Designed-distance lower bound n - deg(divisor).
int goppa_bound(const RRBasis& basis, const EvaluationSet& gamma);
int singleton_bound(const LinearCode& code);
bool is_mds(const LinearCode& code, std::uint64_t cap = LinearCode::kDefaultDistanceCap);

}  // namespace agfilt

#endif
