#ifndef NFV_PAIR_GEOMETRY_HPP
#define NFV_PAIR_GEOMETRY_HPP

#include <optional>

#include "nfvaaler/psi.hpp"

namespace nfv {

enum class OverlapRegime { zero, log_bound, flat };

// Overlap-control quantities for a pair of distinct ideals:
//   D = Nm(mn/(m,n)) prod_rho max{psi_rho(m), psi_rho(n)}
//   P = prod over p | mn/(m,n)^2 with Nm(p) > D of (1 - 1/Nm(p))^-1
//   tau = max{g(m/(m,n)), g(n/(m,n))}
// plus the L/M/N split of the joint factorization by equal/unequal
// exponents.
struct PairGeometry {
    Ideal m, n;
    Ideal gcd;
    Ideal L, M, N;
    double D = 0;
    std::optional<Rat> D_exact;
    double P = 1;
    long tau = 1;
    bool boundary_flagged = false;   // a comparison fell inside the guard band
};

PairGeometry pair_geometry(const PsiSystem& sys, const Ideal& m, const Ideal& n);

// Trichotomy: zero when D <= 2^-(s+t), log when D < tau, flat otherwise.
// Uses the exact D when available; otherwise a 1e-12 guard band applies and
// boundary cases are flagged on the geometry.
OverlapRegime classify_regime(const PairGeometry& geo, int places);

const char* regime_name(OverlapRegime r);

} // namespace nfv

#endif
