#ifndef AGFILT_FILTRATION_HPP
#define AGFILT_FILTRATION_HPP

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "agfilt/code.hpp"

namespace agfilt {

using Rational = boost::rational<long long>;

/// One level of a divisor chain: the divisor i * P_inf, its Riemann-Roch
/// basis, and the induced evaluation code.
struct ChainLevel {
    int index;
    int degree;  // equals index for the degree filtrations built here
    RRBasis basis;
    LinearCode code;
};

/// The nested chain of evaluation codes induced by D_0 < D_1 < ... < D_m with
/// D_i = i * P_inf. Level i's row space is contained in level i+1's (the bases
/// nest by prefix) and the dimensions are non-decreasing.
class FiltrationChain {
  public:
    const CurveSpecPtr& curve() const { return curve_; }
    const EvaluationSet& gamma() const { return gamma_; }
    const std::vector<ChainLevel>& levels() const { return levels_; }
    int max_degree() const { return static_cast<int>(levels_.size()) - 1; }
    int n() const { return gamma_.n(); }

  private:
    friend FiltrationChain build_chain(const CurveSpecPtr&, const EvaluationSet&, int,
                                       std::uint64_t);
    FiltrationChain(CurveSpecPtr curve, EvaluationSet gamma, std::vector<ChainLevel> levels)
        : curve_(std::move(curve)), gamma_(std::move(gamma)), levels_(std::move(levels)) {}

    CurveSpecPtr curve_;
    EvaluationSet gamma_;
    std::vector<ChainLevel> levels_;
};

/// Requires m < n; throws SearchTooLarge upfront when the top level's message
/// space q^k would exceed the distance cap.
FiltrationChain build_chain(const CurveSpecPtr& curve, const EvaluationSet& gamma, int m,
                            std::uint64_t cap = LinearCode::kDefaultDistanceCap);

enum class RsClass { RsEquivalent, NonRs, Unknown };

std::string to_string(RsClass c);

struct TradeoffRow {
    int index;
    int degree;
    int k;
    int d;
    int goppa;
    int singleton;
    bool mds;
    Rational rate;     // k / n
    Rational q_score;  // (k / n) * d
    RsClass rs_class;
};

struct TradeoffTable {
    int n;
    std::vector<TradeoffRow> rows;
};

/// Exact rate-distance table, one row per chain level. All rationals exact.
TradeoffTable tradeoff(const FiltrationChain& chain,
                       std::uint64_t cap = LinearCode::kDefaultDistanceCap);

struct OptimalIndex {
    int formula;    // min(m, floor((n + g - 1) / 2))
    int empirical;  // smallest index attaining max Q
    bool agrees;    // Q[formula] == max Q (value-level agreement)
};

OptimalIndex optimal_index(const FiltrationChain& chain,
                           std::uint64_t cap = LinearCode::kDefaultDistanceCap);
OptimalIndex optimal_index(const TradeoffTable& table, int genus, int m);

/// The status of a code chain against the best-possible designed-distance
/// behavior. Levels align to a sub-chain indexed so that dim = j + 1; depth is
/// the largest aligned j whose representative has deg = j + genus (equivalently
/// H^1 = 0 there, since dim = deg - g + 1 exactly then).
struct MdsAlignedLevel {
    int sub_index;    // j, with dim = j + 1
    int level_index;  // chain level chosen as representative
    int degree;
    int dim;
    bool h1_vanishes;  // dim == deg - g + 1
    bool mds;          // exact, from the representative's code
};

struct MdsDepthReport {
    int depth;
    std::vector<MdsAlignedLevel> aligned;
    std::vector<bool> level_mds;  // exact MDS flag for every chain level
};

MdsDepthReport mds_depth(const FiltrationChain& chain,
                         std::uint64_t cap = LinearCode::kDefaultDistanceCap);

/// True iff a is at least as good as b in both rate and distance and strictly
/// better in one. Codes must share the length n.
bool dominates(const LinearCode& a, const LinearCode& b,
               std::uint64_t cap = LinearCode::kDefaultDistanceCap);

/// Applies the decidable classification criteria to an MDS code: length
/// n <= q + 1 with k <= q forces Reed-Solomon equivalence, n > q + 1 or k > q
/// excludes it. Non-MDS codes are Unknown (the classifier is scoped to MDS).
RsClass classify_rs(const LinearCode& code,
                    std::uint64_t cap = LinearCode::kDefaultDistanceCap);

struct PuncturedFamily {
    FiltrationChain sub;
    FiltrationChain full;
};

/// Two chains over the same divisor tower, one on a punctured evaluation set.
/// Requires gamma_sub a subset of gamma_full with |gamma_sub| <= q + 1.
PuncturedFamily punctured_family(const CurveSpecPtr& curve, const EvaluationSet& gamma_full,
                                 const EvaluationSet& gamma_sub, int m,
                                 std::uint64_t cap = LinearCode::kDefaultDistanceCap);

}  // namespace agfilt

#endif
