#include "agfilt/filtration.hpp"

#include <algorithm>
#include <stdexcept>

#include "agfilt/errors.hpp"

namespace agfilt {

FiltrationChain build_chain(const CurveSpecPtr& curve, const EvaluationSet& gamma, int m,
                            std::uint64_t cap) {
    if (m < 0) throw NegativeDegree("chain degree must be >= 0");
    if (m >= gamma.n())
        throw DegreeTooLarge("chain requires m < n = " + std::to_string(gamma.n()));
    std::vector<ChainLevel> levels;
    levels.reserve(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        RRBasis basis = rr_basis(curve, i);
        LinearCode code = eval_code(basis, gamma);
        levels.push_back(ChainLevel{i, i, std::move(basis), std::move(code)});
    }
    if (!levels.back().code.scan_feasible(cap))
        throw SearchTooLarge("top-level message space q^k exceeds the distance cap");
    return FiltrationChain(curve, gamma, std::move(levels));
}

std::string to_string(RsClass c) {
    switch (c) {
        case RsClass::RsEquivalent: return "RS_equivalent";
        case RsClass::NonRs: return "NonRS";
        case RsClass::Unknown: return "Unknown";
    }
    return "Unknown";
}

TradeoffTable tradeoff(const FiltrationChain& chain, std::uint64_t cap) {
    TradeoffTable table;
    table.n = chain.n();
    const long long n = table.n;
    for (const auto& level : chain.levels()) {
        TradeoffRow row;
        row.index = level.index;
        row.degree = level.degree;
        row.k = level.code.dimension();
        row.d = level.code.min_distance(cap);
        row.goppa = goppa_bound(level.basis, chain.gamma());
        row.singleton = singleton_bound(level.code);
        row.mds = (row.d == row.singleton);
        row.rate = Rational(row.k, n);
        row.q_score = row.rate * row.d;
        row.rs_class = classify_rs(level.code, cap);
        table.rows.push_back(row);
    }
    return table;
}

OptimalIndex optimal_index(const TradeoffTable& table, int genus, int m) {
    OptimalIndex out;
    out.formula = std::min(m, (table.n + genus - 1) / 2);
    Rational best(0);
    out.empirical = 0;
    for (const auto& row : table.rows) {
        if (row.q_score > best) {
            best = row.q_score;
            out.empirical = row.index;
        }
    }
    out.agrees = table.rows[static_cast<std::size_t>(out.formula)].q_score == best;
    return out;
}

OptimalIndex optimal_index(const FiltrationChain& chain, std::uint64_t cap) {
    return optimal_index(tradeoff(chain, cap), chain.curve()->genus(), chain.max_degree());
}

MdsDepthReport mds_depth(const FiltrationChain& chain, std::uint64_t cap) {
    const int g = chain.curve()->genus();
    MdsDepthReport report;
    report.depth = -1;
    for (const auto& level : chain.levels())
        report.level_mds.push_back(is_mds(level.code, cap));

    // Align: sub-chain index j corresponds to levels of dimension j + 1.
    // Prefer a representative with deg = j + g (the H^1 = 0 witness).
    bool found_dim_one = false;
    for (int j = 0;; ++j) {
        const int want_dim = j + 1;
        const ChainLevel* rep = nullptr;
        for (const auto& level : chain.levels()) {
            if (level.code.dimension() != want_dim) continue;
            if (!rep || (rep->degree != j + g && level.degree == j + g)) rep = &level;
        }
        if (!rep) break;
        if (j == 0) found_dim_one = true;
        MdsAlignedLevel aligned;
        aligned.sub_index = j;
        aligned.level_index = rep->index;
        aligned.degree = rep->degree;
        aligned.dim = want_dim;
        aligned.h1_vanishes = (want_dim == rep->degree - g + 1);
        aligned.mds = report.level_mds[static_cast<std::size_t>(rep->index)];
        report.aligned.push_back(aligned);
        if (rep->degree == j + g) report.depth = j;
    }
    if (!found_dim_one)
        throw HypothesisUnmet("no chain level has dimension 1; the sub-chain cannot start");
    return report;
}

bool dominates(const LinearCode& a, const LinearCode& b, std::uint64_t cap) {
    if (a.length() != b.length()) throw LengthMismatch("dominance compares codes of equal length");
    const int ka = a.dimension(), kb = b.dimension();
    const int da = a.min_distance(cap), db = b.min_distance(cap);
    return ka >= kb && da >= db && (ka > kb || da > db);
}

RsClass classify_rs(const LinearCode& code, std::uint64_t cap) {
    if (!is_mds(code, cap)) return RsClass::Unknown;
    const std::uint64_t q = code.field()->q();
    const std::uint64_t n = static_cast<std::uint64_t>(code.length());
    const std::uint64_t k = static_cast<std::uint64_t>(code.dimension());
    if (n > q + 1 || k > q) return RsClass::NonRs;
    return RsClass::RsEquivalent;
}

PuncturedFamily punctured_family(const CurveSpecPtr& curve, const EvaluationSet& gamma_full,
                                 const EvaluationSet& gamma_sub, int m, std::uint64_t cap) {
    if (!gamma_sub.is_subset_of(gamma_full))
        throw NotASubset("punctured evaluation set is not contained in the full set");
    if (static_cast<std::uint64_t>(gamma_sub.n()) > curve->field()->q() + 1)
        throw std::invalid_argument("punctured set must have at most q + 1 points");
    return PuncturedFamily{build_chain(curve, gamma_sub, m, cap),
                           build_chain(curve, gamma_full, m, cap)};
}

}  // namespace agfilt
