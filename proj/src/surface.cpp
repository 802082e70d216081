#include "agfilt/surface.hpp"

#include <stdexcept>

#include "agfilt/errors.hpp"

namespace agfilt {

namespace {

long long half_of(long long v) {
    if (v % 2 != 0)
        throw ParityViolation("c1^2 and c1.K have different parities; intersection numbers inconsistent");
    return v / 2;
}

}  // namespace

long long depth_formula(const SurfaceNumerics& n) {
    return half_of(n.c1_sq - n.c1_dot_k) + n.chi;
}

long long dual_depth_formula(const SurfaceNumerics& n) {
    return half_of(n.c1_sq + n.c1_dot_k) + n.chi;
}

MonomialFiltration p2_filtration(int d) {
    if (d < 0) throw NegativeDegree("monomial degree must be >= 0");
    MonomialFiltration f;
    f.degree = d;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) f.monomials.push_back({i, j, d - i - j});
    return f;
}

LineRestriction restrict_to_line(const MonomialFiltration& filtration) {
    LineRestriction r;
    for (std::size_t step = 0; step < filtration.monomials.size(); ++step) {
        if (filtration.monomials[step][2] > 0)
            r.dead_steps.push_back(static_cast<int>(step));
        else
            ++r.restricted_dim;  // surviving monomials x^i y^(d-i) are independent
    }
    r.inequality_holds = r.restricted_dim <= static_cast<int>(filtration.monomials.size());
    return r;
}

}  // namespace agfilt
