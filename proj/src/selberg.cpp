#include "nfvaaler/selberg.hpp"

#include <algorithm>

#include "nfvaaler/errors.hpp"

namespace nfv {

namespace {

// Squarefree divisors of the modulus (divisors of its radical).
std::vector<Ideal> squarefree_divisors(const Ideal& n) {
    Ideal::Factors radical;
    for (const auto& [q, k] : n.factors()) radical.emplace_back(q, 1);
    return divisors_of(Ideal(std::move(radical)));
}

// Exact realization of "Nm(d) < z" with z = X^(1/(2n+1)).
bool below_z(const Int& nm, const Int& X, int degree) {
    return int_pow(nm, (unsigned long)(2 * degree + 1)) < X;
}

template <class Pred>
Rat g_restricted_pred(const Ideal& n, const Ideal& v, Pred&& keep) {
    Rat sum = 0;
    for (const auto& r : squarefree_divisors(n)) {
        if (!ideal_coprime(r, v)) continue;
        if (!keep(r.norm())) continue;
        sum += Rat(Int(1), euler_phi(r));
    }
    return sum;
}

} // namespace

Rat g_restricted(const Ideal& n, const Ideal& v, const Rat& x) {
    if (x <= 1) return 0;
    return g_restricted_pred(n, v, [&](const Int& nm) { return Rat(nm) < x; });
}

SieveContext build_sieve(const NumberField& field, const Ideal& n, const Int& X) {
    if (X < 2) fail(errc::config_invalid, "sieve needs X >= 2");
    SieveContext ctx;
    ctx.modulus = n;
    ctx.X = X;
    int deg = field.degree;

    Ideal::Factors p_factors;
    for (const auto& [q, k] : n.factors())
        if (below_z(q.norm(), X, deg)) p_factors.emplace_back(q, 1);
    ctx.P = Ideal(std::move(p_factors));

    ctx.G = g_restricted_pred(n, Ideal{}, [&](const Int& nm) { return below_z(nm, X, deg); });
    if (!(ctx.G > 0)) fail(errc::computation, "sieve main sum G must be positive");

    for (const auto& d : divisors_of(ctx.P)) {
        if (!below_z(d.norm(), X, deg)) continue;
        Int nd = d.norm();
        // G_d(z/Nm(d)): Nm(r) < z/Nm(d) <=> (Nm(r) Nm(d))^(2n+1) < X
        Rat gd = g_restricted_pred(n, d, [&](const Int& nm) { return below_z(nm * nd, X, deg); });
        Rat lambda = Rat(nd) * moebius(d) * gd / (Rat(euler_phi(d)) * ctx.G);
        ctx.weights.emplace_back(d, lambda);
    }
    std::sort(ctx.weights.begin(), ctx.weights.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return ctx;
}

Rat sigma1(const SieveContext& ctx) {
    Rat sum = 0;
    for (const auto& [d1, l1] : ctx.weights)
        for (const auto& [d2, l2] : ctx.weights) {
            Ideal g = ideal_gcd(d1, d2);
            sum += l1 * l2 * Rat(g.norm()) / Rat(d1.norm() * d2.norm());
        }
    return sum;
}

Rat sieve_upper_bound(PrimeFactory& factory, const SieveContext& ctx, const Int& enumeration_cap,
                      Exec mode) {
    if (ctx.X > enumeration_cap) fail(errc::cap_exceeded, "sieve bound exceeds the enumeration cap");
    auto ideals = enumerate_ideals(factory, to_double(ctx.X), false);
    return kernels::block_sum_rat(ideals.size(), mode, [&](size_t i) -> Rat {
        Ideal g = ideal_gcd(ideals[i], ctx.P);
        Rat inner = 0;
        for (const auto& [d, lambda] : ctx.weights)
            if (ideal_divides(d, g)) inner += lambda;
        return inner * inner;
    });
}

Int coprime_count_exact(PrimeFactory& factory, const Ideal& n, const Int& X,
                        const Int& enumeration_cap) {
    if (X > enumeration_cap) fail(errc::cap_exceeded, "count exceeds the enumeration cap");
    auto primes = prime_ideals_up_to(factory, X);
    std::vector<PrimeIdeal> coprime;
    for (const auto& q : primes) {
        bool divides_n = false;
        for (const auto& [qn, k] : n.factors())
            if (qn == q) divides_n = true;
        if (!divides_n) coprime.push_back(q);
    }
    return count_ideals_up_to(coprime, X);
}

} // namespace nfv
