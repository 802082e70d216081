#ifndef AGFILT_SURFACE_HPP
#define AGFILT_SURFACE_HPP

#include <array>
#include <vector>

namespace agfilt {

/// Intersection numbers of a line bundle on a smooth projective surface:
/// c1(L)^2, c1(L).c1(K_S), and chi(O_S). The evaluator takes them as given
/// integers; positivity of L is the caller's hypothesis.
struct SurfaceNumerics {
    long long c1_sq = 0;
    long long c1_dot_k = 0;
    long long chi = 0;
};

/// (c1^2 - c1.K)/2 + chi. Throws ParityViolation when c1^2 - c1.K is odd,
/// which signals inconsistent intersection numbers.
long long depth_formula(const SurfaceNumerics& n);

/// Depth of the dual bundle: (c1^2 + c1.K)/2 + chi.
long long dual_depth_formula(const SurfaceNumerics& n);

/// The degree-d monomials in x, y, z in graded-lexicographic order with
/// x > y > z, realizing a one-step-at-a-time filtration of length
/// (d^2 + 3d)/2 + 1.
struct MonomialFiltration {
    int degree = 0;
    std::vector<std::array<int, 3>> monomials;  // exponent triples (i, j, k)
};

MonomialFiltration p2_filtration(int d);

struct LineRestriction {
    int restricted_dim = 0;    // dimension of the image span after z = 0
    bool inequality_holds = false;  // restricted_dim <= filtration length
    std::vector<int> dead_steps;    // filtration steps killed by restriction
};

/// Restricts the filtration to the line z = 0: monomials divisible by z die,
/// the d + 1 survivors x^i y^(d-i) stay independent.
LineRestriction restrict_to_line(const MonomialFiltration& filtration);

}  // namespace agfilt

#endif
