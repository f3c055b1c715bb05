#include "nfvaaler/erdos_g.hpp"

#include <algorithm>

#include "nfvaaler/errors.hpp"

namespace nfv {

Rat g_tail(const Ideal& a, const Int& v) {
    Rat tail = 0;
    for (const auto& [q, k] : a.factors()) {
        Int nq = q.norm();
        if (nq > v) tail += Rat(Int(1), nq);
    }
    return tail;
}

GReport g_value(const Ideal& a) {
    GReport r;
    r.ideal = a;
    const Rat half(1, 2);

    Rat tail = g_tail(a, Int(1));
    if (tail < half) {
        r.g = 1;
        r.tail_sum = tail;
        return r;
    }
    // The tail only drops when the threshold passes a prime norm, so the
    // minimizer is one of the distinct norms.
    std::vector<Int> norms;
    for (const auto& [q, k] : a.factors()) norms.push_back(q.norm());
    std::sort(norms.begin(), norms.end());
    norms.erase(std::unique(norms.begin(), norms.end()), norms.end());
    for (const Int& n : norms) {
        tail = g_tail(a, n);
        if (tail < half) {
            if (!n.fits_slong_p()) fail(errc::cap_exceeded, "g-value exceeds word size");
            r.g = n.get_si();
            r.tail_sum = tail;
            return r;
        }
    }
    fail(errc::computation, "g-function search did not terminate");
}

double tail_product(const Ideal& a) {
    long g = g_value(a).g;
    double prod = 1;
    for (const auto& [q, k] : a.factors()) {
        Int nq = q.norm();
        if (nq > g) prod /= 1.0 - 1.0 / to_double(nq);
    }
    return prod;
}

long count_large_g(PrimeFactory& factory, double X, long v, Exec mode) {
    auto ideals = enumerate_ideals(factory, X, false);
    return (long)kernels::block_count(ideals.size(), mode,
                                      [&](size_t i) { return g_value(ideals[i]).g >= v; });
}

Rat divisor_g_sum(const Ideal& q, long v) {
    Rat sum = 0;
    for (const auto& d : divisors_of(q)) {
        Ideal quotient = ideal_div(q, d);
        if (g_value(quotient).g <= v) sum += Rat(Int(1), d.norm());
    }
    return sum;
}

Rat banded_g_sum(PrimeFactory& factory, long T, double X, double Y, double enumeration_cap,
                 Exec mode) {
    if (!(X > 0 && X < Y)) fail(errc::config_invalid, "band needs 0 < X < Y");
    if (Y > enumeration_cap) fail(errc::band_too_large, "band exceeds the enumeration cap");
    auto ideals = enumerate_ideals(factory, Y, false);
    Rat rx = rat_of_double(X), ry = rat_of_double(Y);
    return kernels::block_sum_rat(ideals.size(), mode, [&](size_t i) -> Rat {
        const Ideal& s = ideals[i];
        Rat nm(s.norm());
        if (!(nm > rx && nm < ry)) return Rat(0);
        if (g_value(s).g != T) return Rat(0);
        return Rat(Int(1), s.norm());
    });
}

} // namespace nfv
