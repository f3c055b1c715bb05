#include <cmath>

#include "doctest.h"
#include "nfvaaler/analytic.hpp"
#include "test_fields.hpp"

using namespace nfv;
using namespace nfv::testing;

TEST_CASE("mertens_log_sum over Q at X = 16 against direct summation") {
    // oracle: primes below 16 summed by hand
    double expected = 0;
    for (long p : {2, 3, 5, 7, 11, 13}) expected += std::log((double)p) / (double)p;

    NumberField q = make_rationals();
    MertensReport r = mertens_log_sum(q, 16);
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.residual == doctest::Approx(expected - std::log(16.0)).epsilon(1e-9));
}

TEST_CASE("mertens_log_sum residuals stay O(1)") {
    NumberField q = make_rationals();
    CHECK(std::abs(mertens_log_sum(q, 1e5).residual) <= 2.0);

    NumberField qi = make_gaussian();
    CHECK(std::abs(mertens_log_sum(qi, 1e4).residual) <= 3.0);
}

TEST_CASE("mertens_recip_sum values and B_K stability") {
    NumberField q = make_rationals();
    MertensReport r100 = mertens_recip_sum(q, 100);
    CHECK(r100.value == doctest::Approx(1.802817).epsilon(1e-5));

    MertensReport r = mertens_recip_sum(q, 1e5);
    CHECK(std::abs(*r.b_k_estimate - 0.2615) <= 0.02);

    NumberField qi = make_gaussian();
    double b3 = *mertens_recip_sum(qi, 1e3).b_k_estimate;
    double b4 = *mertens_recip_sum(qi, 1e4).b_k_estimate;
    CHECK(std::abs(b4 - b3) <= 0.05);
}

TEST_CASE("mertens_product residues") {
    NumberField q = make_rationals();
    MertensReport r = mertens_product(q, 1e5);
    CHECK(std::abs(*r.alpha_estimate - 1.0) <= 0.03);

    NumberField qi = make_gaussian();
    MertensReport ri = mertens_product(qi, 1e4);
    double pi_over_4 = std::atan(1.0);
    CHECK(std::abs(*ri.alpha_estimate - pi_over_4) <= 0.05 * pi_over_4);

    for (const NumberField& field : {make_rationals(), make_gaussian(), make_sqrt2()})
        CHECK(mertens_product(field, 32).value > mertens_product(field, 16).value);
}

TEST_CASE("mertens sums reject X below 16") {
    NumberField q = make_rationals();
    CHECK_THROWS_AS(mertens_log_sum(q, 10), error);
}

TEST_CASE("ideal_count_residue") {
    NumberField q = make_rationals();
    PrimeFactory fq(q);
    IdealCountReport rq = ideal_count_residue(fq, 1000);
    CHECK(rq.count == 1000);
    CHECK(rq.alpha_estimate == doctest::Approx(1.0));

    NumberField qi = make_gaussian();
    PrimeFactory fqi(qi);
    IdealCountReport ri = ideal_count_residue(fqi, 1e4);
    double pi_over_4 = std::atan(1.0);
    CHECK(std::abs(ri.alpha_estimate - pi_over_4) <= 0.02 * pi_over_4);

    NumberField s2 = make_sqrt2();
    PrimeFactory fs2(s2);
    IdealCountReport a = ideal_count_residue(fs2, 1000);
    IdealCountReport b = ideal_count_residue(fs2, 1000);
    CHECK(a.count == b.count);
    CHECK(a.alpha_estimate == b.alpha_estimate);
}

TEST_CASE("alpha estimates from the product and the ideal count agree") {
    for (auto make : {make_rationals, make_gaussian}) {
        NumberField field = make();
        PrimeFactory factory(field);
        double from_product = *mertens_product(field, 1e4).alpha_estimate;
        double from_count = ideal_count_residue(factory, 1e4).alpha_estimate;
        CHECK(std::abs(from_product - from_count) <= 0.10 * std::abs(from_count));
    }
}

TEST_CASE("serial and block-parallel prime scans agree") {
    for (const NumberField& field : {make_rationals(), make_gaussian(), make_sqrt2()}) {
        MertensReport s = mertens_log_sum(field, 5000, Exec::serial);
        MertensReport p = mertens_log_sum(field, 5000, Exec::block_parallel);
        CHECK(s.value == doctest::Approx(p.value).epsilon(1e-12));

        MertensReport s2 = mertens_product(field, 5000, Exec::serial);
        MertensReport p2 = mertens_product(field, 5000, Exec::block_parallel);
        CHECK(s2.value == doctest::Approx(p2.value).epsilon(1e-12));
    }
}
