#ifndef NFV_SELBERG_HPP
#define NFV_SELBERG_HPP

#include <vector>

#include "nfvaaler/ideal.hpp"
#include "nfvaaler/kernels.hpp"

namespace nfv {

// Sieve state for counting ideals a with Nm(a) <= X coprime to the modulus.
// z = X^(1/(2n+1)) is never materialized: every threshold test uses the
// exact integer comparison Nm(d)^(2n+1) < X.
struct SieveContext {
    Ideal modulus;   // the sifting modulus n
    Int X;
    Ideal P;         // product of p | n with Nm(p) < z
    Rat G;           // G_{O_K}(z)
    std::vector<std::pair<Ideal, Rat>> weights;   // lambda_d over divisors of P below z
};

// G_v(x) = sum over squarefree r | n, (r,v) = 1, Nm(r) < x of mu^2(r)/Phi(r).
Rat g_restricted(const Ideal& n, const Ideal& v, const Rat& x);

SieveContext build_sieve(const NumberField& field, const Ideal& n, const Int& X);

// Diagonal quadratic-form sum; equals 1/G exactly.
Rat sigma1(const SieveContext& ctx);

// sum over Nm(a) <= X of (sum over d | (a,P) of lambda_d)^2
Rat sieve_upper_bound(PrimeFactory& factory, const SieveContext& ctx, const Int& enumeration_cap,
                      Exec mode = Exec::block_parallel);

// #{a : Nm(a) <= X, (a,n) = 1} by exhaustive generation.
Int coprime_count_exact(PrimeFactory& factory, const Ideal& n, const Int& X,
                        const Int& enumeration_cap);

} // namespace nfv

#endif
