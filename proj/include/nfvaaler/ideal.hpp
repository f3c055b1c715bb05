#ifndef NFV_IDEAL_HPP
#define NFV_IDEAL_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "nfvaaler/hnf.hpp"
#include "nfvaaler/number_field.hpp"
#include "nfvaaler/prime_ideal.hpp"

namespace nfv {

// Integral ideal in dual representation: canonical sorted prime-power
// factorization, plus a Hermite-normal-form module basis materialized on
// first use and shared across copies.
class Ideal {
  public:
    using Factors = std::vector<std::pair<PrimeIdeal, int>>;

    Ideal() : Ideal(Factors{}) {}
    explicit Ideal(Factors factors);

    const Factors& factors() const { return factors_; }
    const Int& norm() const { return norm_; }
    bool is_unit_ideal() const { return factors_.empty(); }

    bool operator==(const Ideal& o) const;
    bool operator!=(const Ideal& o) const { return !(*this == o); }

    // Canonical total order: norm, then the factor list.
    bool operator<(const Ideal& o) const;

    const IntMat& hnf(const NumberField& field) const;

  private:
    Factors factors_;
    Int norm_;
    struct HnfCache {
        std::once_flag flag;
        IntMat h;
    };
    std::shared_ptr<HnfCache> hnf_cache_;
};

Ideal ideal_from_prime(const PrimeIdeal& q, int k = 1);

Int ideal_norm(const Ideal& a);
Int euler_phi(const Ideal& a);
int moebius(const Ideal& a);
bool is_squarefree(const Ideal& a);

Ideal ideal_mul(const Ideal& a, const Ideal& b);
Ideal ideal_div(const Ideal& a, const Ideal& b);   // requires b | a
std::pair<Ideal, Ideal> gcd_lcm(const Ideal& a, const Ideal& b);
Ideal ideal_gcd(const Ideal& a, const Ideal& b);
bool ideal_coprime(const Ideal& a, const Ideal& b);
bool ideal_divides(const Ideal& d, const Ideal& a);
std::vector<Ideal> divisors_of(const Ideal& a);

IntMat hnf_of(const NumberField& field, const Ideal& a);

// Memoizing access to prime factorizations and prime-power HNF bases;
// safe to share across threads.
class PrimeFactory {
  public:
    explicit PrimeFactory(const NumberField& field) : field_(&field) {}

    const NumberField& field() const { return *field_; }
    std::vector<PrimeIdeal> primes_above(long p);
    IntMat prime_power_hnf(const PrimeIdeal& q, int k);

    void preload(long p, std::vector<PrimeIdeal> primes);
    std::vector<long> known_primes() const;

  private:
    const NumberField* field_;
    mutable std::mutex mu_;
    std::map<long, std::vector<PrimeIdeal>> primes_;
    std::map<std::pair<std::pair<long, std::vector<long>>, int>, IntMat> power_hnf_;
};

// Prime ideals with Nm <= X, sorted by (norm, id).
std::vector<PrimeIdeal> prime_ideals_up_to(PrimeFactory& factory, const Int& X);

// All ideals (or prime ideals) with Nm <= X in canonical order.
std::vector<Ideal> enumerate_ideals(PrimeFactory& factory, double X, bool primes_only);

// Depth-first multiplicative generation; visits every ideal with Nm <= X
// exactly once (including O_K), in no particular order.
void for_each_ideal(const std::vector<PrimeIdeal>& primes, const Int& X,
                    const std::function<void(const Ideal&)>& fn);

// Node count of the same walk, without materializing ideals.
Int count_ideals_up_to(const std::vector<PrimeIdeal>& primes, const Int& X);

bool element_in_ideal(const NumberField& field, const FieldElement& e, const IntMat& hnf_basis);
int valuation_at_prime(PrimeFactory& factory, const FieldElement& e, const PrimeIdeal& q);

Ideal factor_principal(PrimeFactory& factory, const FieldElement& e);

struct FractionalElement {
    FieldElement numerator;   // integral
    Int denominator = 1;      // positive
};

FractionalElement fractional_from(const NumberField& field, const FieldElement& value);
FieldElement fractional_value(const NumberField& field, const FractionalElement& g);
Ideal denominator_ideal(PrimeFactory& factory, const FractionalElement& g);

std::vector<std::pair<long, int>> factor_integer(Int n);

// Deterministic sweep of nonzero integral elements ordered by max coordinate
// magnitude (positive digits first within each radius shell). fn returns true
// to accept and stop; the sweep returns whether anything was accepted.
bool sweep_integral_elements(const NumberField& field, long radius_cap, long budget,
                             const std::function<bool(const std::vector<long>&)>& fn);

// Display string like "(1+a)^2*(3)"; falls back to "P[p=..,#i]" labels when
// no small generator exists.
std::string ideal_str(PrimeFactory& factory, const Ideal& a);

} // namespace nfv

#endif
