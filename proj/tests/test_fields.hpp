#ifndef NFV_TEST_FIELDS_HPP
#define NFV_TEST_FIELDS_HPP

#include "nfvaaler/ideal.hpp"
#include "nfvaaler/number_field.hpp"
#include "nfvaaler/rng.hpp"

namespace nfv::testing {

inline NumberField make_rationals() {
    return build_field({IntPoly{Int(0), Int(1)}, true});   // x
}

inline NumberField make_gaussian() {
    return build_field({IntPoly{Int(1), Int(0), Int(1)}, true});   // x^2 + 1
}

inline NumberField make_sqrt2() {
    return build_field({IntPoly{Int(-2), Int(0), Int(1)}, true});   // x^2 - 2
}

inline NumberField make_cubic() {
    return build_field({IntPoly{Int(-2), Int(0), Int(0), Int(1)}, true});   // x^3 - 2
}

// Ideal with the given norm; index selects among equal-norm ideals in
// canonical order.
inline Ideal ideal_by_norm(PrimeFactory& factory, long norm, int index = 0) {
    auto all = enumerate_ideals(factory, (double)norm, false);
    int seen = 0;
    for (const auto& a : all)
        if (a.norm() == norm && seen++ == index) return a;
    throw std::runtime_error("no ideal with requested norm");
}

inline FieldElement random_element(const NumberField& field, const CounterRng& rng, uint64_t i) {
    std::vector<Rat> coords;
    for (int j = 0; j < field.degree; ++j) {
        long num = (long)(rng.bits(i, (uint64_t)j) % 21) - 10;
        long den = 1 + (long)(rng.bits(i, 100 + (uint64_t)j) % 4);
        Rat c(num, den);
        c.canonicalize();
        coords.push_back(c);
    }
    return field.from_coords(std::move(coords));
}

inline FieldElement random_integral_element(const NumberField& field, const CounterRng& rng,
                                            uint64_t i, long half_range = 10) {
    std::vector<long> coords;
    for (int j = 0; j < field.degree; ++j)
        coords.push_back((long)(rng.bits(i, (uint64_t)j) % (2 * (uint64_t)half_range + 1)) -
                         half_range);
    return field.from_int_coords(coords);
}

} // namespace nfv::testing

#endif
