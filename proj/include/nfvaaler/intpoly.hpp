#ifndef NFV_INTPOLY_HPP
#define NFV_INTPOLY_HPP

#include <complex>
#include <vector>

#include "nfvaaler/rat.hpp"

namespace nfv {

// Polynomials are coefficient vectors in ascending order; index i holds the
// coefficient of x^i. The zero polynomial is the empty vector.
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

inline void poly_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const RatPoly& p) { return (int)p.size() - 1; }

inline RatPoly to_rat_poly(const IntPoly& p) {
    RatPoly r(p.begin(), p.end());
    poly_trim(r);
    return r;
}

template <typename T>
T poly_eval(const std::vector<Int>& p, const T& x) {
    T acc = T(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + T(it->get_d());
    return acc;
}

inline Rat poly_eval_rat(const RatPoly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline std::complex<double> poly_eval_cx(const IntPoly& p, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

inline RatPoly poly_derivative(const RatPoly& p) {
    RatPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Rat((long)i) * p[i]);
    poly_trim(d);
    return d;
}

// Remainder of a by b over Q, b nonzero.
inline RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    poly_trim(a);
    while (poly_deg(a) >= poly_deg(b)) {
        Rat q = a.back() / b.back();
        int shift = poly_deg(a) - poly_deg(b);
        for (int i = 0; i <= poly_deg(b); ++i) a[i + shift] -= q * b[i];
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Monic gcd over Q.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        RatPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// Resultant via the Sylvester matrix with exact fraction arithmetic.
// res(f, g) = lc(f)^deg(g) * prod over roots alpha of f of g(alpha);
// with f monic this is exactly prod g(alpha).
Rat poly_resultant(const RatPoly& f, const RatPoly& g);

} // namespace nfv

#endif
