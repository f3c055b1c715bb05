// Times the serial reference against the block-parallel kernels and checks
// that both produce the same answers.

#include <chrono>
#include <cstdio>

#include <omp.h>

#include "nfvaaler/analytic.hpp"
#include "nfvaaler/erdos_g.hpp"
#include "nfvaaler/measure.hpp"
#include "nfvaaler/selberg.hpp"

using namespace nfv;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

struct Row {
    const char* name;
    double serial_ms;
    double parallel_ms;
    bool match;
};

template <class Fn>
double timed(Fn&& fn) {
    double t0 = now_ms();
    fn();
    return now_ms() - t0;
}

} // namespace

int main() {
    std::vector<Row> rows;
    printf("threads: %d\n", omp_get_max_threads());

    {
        NumberField s2 = build_field({IntPoly{Int(-2), Int(0), Int(1)}, true});
        double vs = 0, vp = 0;
        double ts = timed([&] { vs = mertens_product(s2, 2e6, Exec::serial).value; });
        double tp = timed([&] { vp = mertens_product(s2, 2e6, Exec::block_parallel).value; });
        rows.push_back({"mertens product scan, Q(sqrt2), X=2e6", ts, tp,
                        std::abs(vs - vp) <= 1e-9 * std::abs(vs)});
    }
    {
        NumberField qi = build_field({IntPoly{Int(1), Int(0), Int(1)}, true});
        PrimeFactory f(qi);
        long cs = 0, cp = 0;
        double ts = timed([&] { cs = count_large_g(f, 2e5, 3, Exec::serial); });
        double tp = timed([&] { cp = count_large_g(f, 2e5, 3, Exec::block_parallel); });
        rows.push_back({"g-function scan, Q(i), X=2e5", ts, tp, cs == cp});
    }
    {
        NumberField s2 = build_field({IntPoly{Int(-2), Int(0), Int(1)}, true});
        PrimeFactory f(s2);
        auto ideals = enumerate_ideals(f, 210, false);
        Ideal n;
        for (const auto& a : ideals)
            if (a.norm() == 210) n = a;
        SieveContext ctx = build_sieve(s2, n, Int(100000));
        Rat bs, bp;
        double ts = timed([&] { bs = sieve_upper_bound(f, ctx, Int(100000), Exec::serial); });
        double tp = timed([&] { bp = sieve_upper_bound(f, ctx, Int(100000), Exec::block_parallel); });
        rows.push_back({"sieve quadratic form, Q(sqrt2), X=1e5", ts, tp, bs == bp});
    }
    {
        // skew fundamental domain forces the Monte Carlo path
        NumberField s2 = build_field({IntPoly{Int(-2), Int(0), Int(1)}, true});
        PrimeFactory f(s2);
        PsiSystem sys = make_power_psi(2, 0.25, 1.0);
        auto ideals = enumerate_ideals(f, 7, false);
        Ideal n;
        for (const auto& a : ideals)
            if (a.norm() == 7) n = a;
        ApproxSet set = build_approx_set(f, sys, n);
        McParams serial{4000000, 1, Exec::serial};
        McParams parallel{4000000, 1, Exec::block_parallel};
        MeasureEstimate ms, mp;
        double ts = timed([&] { ms = measure_of(s2, set, serial); });
        double tp = timed([&] { mp = measure_of(s2, set, parallel); });
        rows.push_back({"monte carlo hits, Q(sqrt2), N=4e6", ts, tp, ms.value == mp.value});
    }

    printf("\n%-42s %12s %12s %9s %7s\n", "kernel", "serial ms", "parallel ms", "speedup",
           "match");
    for (const Row& r : rows)
        printf("%-42s %12.1f %12.1f %8.2fx %7s\n", r.name, r.serial_ms, r.parallel_ms,
               r.serial_ms / r.parallel_ms, r.match ? "yes" : "NO");

    for (const Row& r : rows)
        if (!r.match) return 1;
    return 0;
}
