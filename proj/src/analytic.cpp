#include "nfvaaler/analytic.hpp"

#include <cmath>

#include "nfvaaler/errors.hpp"
#include "nfvaaler/prime_ideal.hpp"

namespace nfv {

namespace {

void check_threshold(double X) {
    if (!(X >= 16)) fail(errc::config_invalid, "Mertens sums need X >= 16");
}

// Per-rational-prime contribution, summed over the prime ideals above p.
template <class Term>
double prime_scan(const NumberField& field, double X, Exec mode, Term&& term) {
    auto ps = rational_primes_up_to((long)std::floor(X));
    return kernels::block_sum_double(ps.size(), mode, [&](size_t i) {
        double acc = 0;
        for (const auto& q : factor_rational_prime(field, ps[i])) acc += term(to_double(q.norm()));
        return acc;
    });
}

} // namespace

MertensReport mertens_log_sum(const NumberField& field, double X, Exec mode) {
    check_threshold(X);
    MertensReport r;
    r.X = X;
    r.value = prime_scan(field, X, mode,
                         [&](double nq) { return nq < X ? std::log(nq) / nq : 0.0; });
    r.model = std::log(X);
    r.residual = r.value - r.model;
    return r;
}

MertensReport mertens_recip_sum(const NumberField& field, double X, Exec mode) {
    check_threshold(X);
    MertensReport r;
    r.X = X;
    r.value = prime_scan(field, X, mode, [&](double nq) { return nq <= X ? 1.0 / nq : 0.0; });
    r.model = std::log(std::log(X));
    r.residual = r.value - r.model;
    r.b_k_estimate = r.residual;
    return r;
}

MertensReport mertens_product(const NumberField& field, double X, Exec mode) {
    check_threshold(X);
    MertensReport r;
    r.X = X;
    double log_sum = prime_scan(field, X, mode, [&](double nq) {
        return nq <= X ? -std::log1p(-1.0 / nq) : 0.0;
    });
    r.value = std::exp(log_sum);
    r.model = std::exp(kEulerGamma) * std::log(X);
    r.residual = r.value - r.model;
    r.alpha_estimate = r.value / r.model;
    return r;
}

IdealCountReport ideal_count_residue(PrimeFactory& factory, double X) {
    check_threshold(X);
    Int xi = rat_floor(rat_of_double(X));
    auto primes = prime_ideals_up_to(factory, xi);
    IdealCountReport r{count_ideals_up_to(primes, xi), 0};
    r.alpha_estimate = to_double(r.count) / X;
    return r;
}

} // namespace nfv
