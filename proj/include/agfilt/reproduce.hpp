#ifndef AGFILT_REPRODUCE_HPP
#define AGFILT_REPRODUCE_HPP

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "agfilt/code.hpp"

namespace agfilt {

enum class ClaimStatus { Confirmed, Refuted, NotTestable };

std::string to_string(ClaimStatus s);

/// Outcome of one quantitative claim check. `computed` always holds what the
/// library actually measured; a refutation is a successful run.
struct ClaimResult {
    std::string claim_id;
    std::string reference;  // plain-language statement of the claim's source
    ClaimStatus status;
    nlohmann::json computed;
    nlohmann::json expected;
};

struct ReproduceReport {
    std::vector<ClaimResult> claims;
    /// False when the two independent MDS/arc characterizations ever disagree;
    /// that is an internal error, not a refutation.
    bool internally_consistent = true;
};

/// Runs every built-in claim check. Deterministic for a fixed seed (the seed
/// only feeds the randomized series checks).
ReproduceReport run_reproduce(std::uint64_t seed = 42,
                              std::uint64_t distance_cap = LinearCode::kDefaultDistanceCap,
                              std::uint64_t subset_cap = 10'000'000);

/// The report as a JSON array of {claim_id, paper_ref, status, computed,
/// expected}, in a fixed order.
nlohmann::json report_to_json(const ReproduceReport& report);

}  // namespace agfilt

#endif
