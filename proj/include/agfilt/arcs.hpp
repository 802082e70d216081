#ifndef AGFILT_ARCS_HPP
#define AGFILT_ARCS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "agfilt/code.hpp"

namespace agfilt {

/// A point of P^r(F_q), stored as r + 1 homogeneous coordinates normalized so
/// the first nonzero coordinate is 1. Normalization makes the representation
/// unique per projective class.
class ProjPoint {
  public:
    explicit ProjPoint(std::vector<FieldElement> coords);

    const std::vector<FieldElement>& coords() const { return coords_; }
    int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);

  private:
    std::vector<FieldElement> coords_;
};

struct ArcReport {
    int n = 0;
    int ambient_dim = 0;
    bool is_arc = false;
    /// Indices of the lexicographically least dependent (r+1)-subset, present
    /// exactly when is_arc is false.
    std::optional<std::vector<int>> witness;
};

constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;

/// Generator columns as points of P^{k-1}. A zero column signals a base point
/// of the underlying system and is rejected.
std::vector<ProjPoint> columns_as_points(const LinearCode& code);

/// Exhaustive determinant test over all (r+1)-subsets.
ArcReport is_k_arc(const std::vector<ProjPoint>& points, int r,
                   std::uint64_t subset_cap = kDefaultSubsetCap);

/// Upper bound q + r for arcs arising in P^r(F_q).
int arc_size_bound(int r, std::uint64_t q);

struct MdsArcCheck {
    bool mds;
    bool arc;
    bool equivalent;  // mds == arc
};

/// Runs the two independent characterizations (exhaustive distance scan,
/// exhaustive minors) against each other.
MdsArcCheck mds_iff_arc(const LinearCode& code,
                        std::uint64_t distance_cap = LinearCode::kDefaultDistanceCap,
                        std::uint64_t subset_cap = kDefaultSubsetCap);

}  // namespace agfilt

#endif
