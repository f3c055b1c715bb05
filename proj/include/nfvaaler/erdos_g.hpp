#ifndef NFV_ERDOS_G_HPP
#define NFV_ERDOS_G_HPP

#include "nfvaaler/ideal.hpp"
#include "nfvaaler/kernels.hpp"

namespace nfv {

struct GReport {
    Ideal ideal;
    long g = 1;     // smallest natural number with tail < 1/2
    Rat tail_sum;   // sum of 1/Nm(p) over p | n with Nm(p) > g
};

// Erdos g-function: smallest v in N with sum over p | n, Nm(p) > v of
// 1/Nm(p) < 1/2; decided in exact rational arithmetic.
GReport g_value(const Ideal& a);

// Tail-sum of 1/Nm(p) over distinct primes of a with Nm(p) > v.
Rat g_tail(const Ideal& a, const Int& v);

// prod over p | n, Nm(p) > g(n) of (1 - 1/Nm(p))^-1
double tail_product(const Ideal& a);

// #{a : Nm(a) <= X, g(a) >= v} by exhaustive enumeration.
long count_large_g(PrimeFactory& factory, double X, long v, Exec mode = Exec::block_parallel);

// sum over d | q with g(q/d) <= v of 1/Nm(d)
Rat divisor_g_sum(const Ideal& q, long v);

// sum over g(s) = T, X < Nm(s) < Y of 1/Nm(s); cap guards the enumeration.
Rat banded_g_sum(PrimeFactory& factory, long T, double X, double Y, double enumeration_cap,
                 Exec mode = Exec::block_parallel);

} // namespace nfv

#endif
