#ifndef NFV_PRIME_IDEAL_HPP
#define NFV_PRIME_IDEAL_HPP

#include <vector>

#include "nfvaaler/number_field.hpp"
#include "nfvaaler/rat.hpp"

namespace nfv {

// Prime ideal above a rational prime p, identified with the monic
// irreducible factor g of the defining polynomial mod p (Dedekind).
struct PrimeIdeal {
    long p = 0;
    int e = 1;                        // ramification index
    int f = 1;                        // residue degree = deg(local_factor)
    std::vector<long> local_factor;   // ascending coeffs, reduced into [0, p)
    int index = 0;                    // position among the primes above p

    Int norm() const { return int_pow(Int(p), (unsigned long)f); }

    bool operator==(const PrimeIdeal& o) const {
        return p == o.p && local_factor == o.local_factor;
    }
    // Deterministic id order: by p, then lexicographic local factor.
    bool operator<(const PrimeIdeal& o) const {
        if (p != o.p) return p < o.p;
        return local_factor < o.local_factor;
    }
};

// Monic irreducible factors of a polynomial over F_p with multiplicities,
// sorted by (degree, coefficient list).
std::vector<std::pair<std::vector<long>, int>> factor_poly_mod_p(const IntPoly& poly, long p);

// Dedekind factorization of (p) in O_K; requires the monogenic assertion.
std::vector<PrimeIdeal> factor_rational_prime(const NumberField& field, long p);

bool is_prime_long(long p);

// Rational primes in [2, limit], ascending.
std::vector<long> rational_primes_up_to(long limit);

} // namespace nfv

#endif
