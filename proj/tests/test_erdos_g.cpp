#include <cmath>

#include "doctest.h"
#include "nfvaaler/erdos_g.hpp"
#include "test_fields.hpp"

using namespace nfv;
using namespace nfv::testing;

TEST_CASE("g_value on pinned examples") {
    CHECK(g_value(Ideal{}).g == 1);
    CHECK(g_value(Ideal{}).tail_sum == 0);

    NumberField q = make_rationals();
    PrimeFactory fq(q);
    Ideal thirty = ideal_by_norm(fq, 30);
    CHECK(g_tail(thirty, Int(1)) == Rat(31, 30));
    CHECK(g_tail(thirty, Int(2)) == Rat(8, 15));
    GReport r = g_value(thirty);
    CHECK(r.g == 3);
    CHECK(r.tail_sum == Rat(1, 5));

    // boundary case: tail exactly 1/2 does not satisfy the strict inequality
    Ideal two = ideal_by_norm(fq, 2);
    CHECK(g_value(two).g == 2);

    NumberField qi = make_gaussian();
    PrimeFactory fqi(qi);
    Ideal m = ideal_mul(ideal_from_prime(fqi.primes_above(2)[0]),
                        ideal_from_prime(fqi.primes_above(3)[0]));
    GReport ri = g_value(m);
    CHECK(ri.g == 2);
    CHECK(ri.tail_sum == Rat(1, 9));
    CHECK(g_tail(m, Int(1)) == Rat(11, 18));
}

TEST_CASE("g minimality witness and divisor monotonicity up to 500") {
    for (const NumberField& field : {make_rationals(), make_gaussian(), make_sqrt2()}) {
        PrimeFactory factory(field);
        for (const Ideal& n : enumerate_ideals(factory, 500, false)) {
            GReport r = g_value(n);
            CHECK(r.tail_sum < Rat(1, 2));
            if (r.g >= 2) CHECK(g_tail(n, Int(r.g - 1)) >= Rat(1, 2));
            for (const Ideal& d : divisors_of(n)) CHECK(g_value(d).g <= r.g);
        }
    }
}

TEST_CASE("tail_product") {
    CHECK(tail_product(Ideal{}) == 1.0);
    NumberField q = make_rationals();
    PrimeFactory fq(q);
    CHECK(tail_product(ideal_by_norm(fq, 30)) == doctest::Approx(1.25));
    CHECK(tail_product(ideal_by_norm(fq, 2)) == 1.0);
}

TEST_CASE("tail_product obeys the explicit zeta bound up to 1000") {
    for (const NumberField& field : {make_rationals(), make_gaussian(), make_sqrt2()}) {
        PrimeFactory factory(field);
        // upper bound for sum over p of sum_{j>=2} Nm(p)^-j: exact part over
        // Nm(p) <= 1000 plus n^2/1000 for the tail (at most n primes per norm).
        double z2 = 0;
        for (const auto& q : prime_ideals_up_to(factory, Int(1000))) {
            double nq = to_double(q.norm());
            z2 += 1.0 / (nq * (nq - 1.0));
        }
        z2 += (double)field.degree * field.degree / 1000.0;
        double bound = std::exp(0.5 + 2.0 * z2);
        for (const Ideal& n : enumerate_ideals(factory, 1000, false))
            CHECK(tail_product(n) <= bound);
    }
}

TEST_CASE("Nm/Phi is controlled by log(2g): frozen constants") {
    // first-oracle-run pins (tools/oracle_pins.cpp), zero drift allowed
    const double pins[] = {2.584830, 2.442063, 2.209128};
    const NumberField fields[] = {make_rationals(), make_gaussian(), make_sqrt2()};
    for (int i = 0; i < 3; ++i) {
        PrimeFactory factory(fields[i]);
        double worst = 0;
        for (const Ideal& n : enumerate_ideals(factory, 1000, false)) {
            double ratio = to_double(Rat(n.norm()) / Rat(euler_phi(n))) /
                           std::log(2.0 * (double)g_value(n).g);
            worst = std::max(worst, ratio);
        }
        CHECK(worst <= pins[i] + 1e-6);
    }
}

TEST_CASE("banded sums obey the frozen log(Y/X)/T! constants") {
    const double pins[] = {0.751992, 0.600808, 0.513013};
    const NumberField fields[] = {make_rationals(), make_gaussian(), make_sqrt2()};
    for (int i = 0; i < 3; ++i) {
        PrimeFactory factory(fields[i]);
        double fact = 1;
        for (long T = 1; T <= 3; ++T) {
            fact *= (double)T;
            for (double hi : {100.0, 1000.0}) {
                double s = to_double(banded_g_sum(factory, T, 10, hi, 1e5));
                double bound = pins[i] * (std::log(hi / 10.0) + 1.0) / fact;
                CHECK(s <= bound + 1e-9);
            }
        }
    }
}

TEST_CASE("count_large_g") {
    NumberField q = make_rationals();
    PrimeFactory fq(q);
    CHECK(count_large_g(fq, 30, 1) == 30);
    CHECK(count_large_g(fq, 30, 2) == 16);

    long c4 = count_large_g(fq, 1e4, 4);
    long c5 = count_large_g(fq, 1e4, 5);
    CHECK(c5 <= c4);

    CHECK(count_large_g(fq, 200, 3, Exec::serial) == count_large_g(fq, 200, 3));
}

TEST_CASE("divisor_g_sum") {
    CHECK(divisor_g_sum(Ideal{}, 1) == 1);
    CHECK(divisor_g_sum(Ideal{}, 7) == 1);

    NumberField q = make_rationals();
    PrimeFactory fq(q);
    Ideal twelve = ideal_by_norm(fq, 12);
    CHECK(divisor_g_sum(twelve, 1) == Rat(1, 3));
    // all six divisors qualify at v = 2: 1 + 1/2 + 1/3 + 1/4 + 1/6 + 1/12
    CHECK(divisor_g_sum(twelve, 2) == Rat(7, 3));
}

TEST_CASE("banded_g_sum") {
    NumberField q = make_rationals();
    PrimeFactory fq(q);
    CHECK(banded_g_sum(fq, 1, 2, 10, 1e5) == Rat(248, 315));

    // strict bounds keep norm 10 out of (1, 10)
    CHECK(banded_g_sum(fq, 2, 1, 10, 1e5) == Rat(25, 24));

    // empty band
    NumberField qi = make_gaussian();
    PrimeFactory fqi(qi);
    CHECK(banded_g_sum(fqi, 1, 2, 4, 1e5) == Rat(0));

    CHECK_THROWS_AS(banded_g_sum(fq, 1, 2, 1e6, 1e5), error);
    CHECK(banded_g_sum(fq, 2, 1, 400, 1e5, Exec::serial) == banded_g_sum(fq, 2, 1, 400, 1e5));
}
