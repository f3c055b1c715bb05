#ifndef NFV_RAT_HPP
#define NFV_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace nfv {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), (unsigned long)e);
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), (unsigned long)e);
        r.canonicalize();
        return r;
    }
    Rat r = rat_pow(base, -e);
    return 1 / r;
}

// Exact conversion; every finite double is a dyadic rational.
inline Rat rat_of_double(double x) { return Rat(x); }

inline bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

inline std::string rat_str(const Rat& x) { return x.get_str(); }

// mpq_get_d truncates toward zero; when both parts fit a double exactly,
// dividing them gives the correctly rounded value instead (2/25 -> 0.08).
inline double to_double(const Rat& x) {
    if (mpz_sizeinbase(x.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(x.get_den_mpz_t(), 2) <= 53)
        return x.get_num().get_d() / x.get_den().get_d();
    return x.get_d();
}
inline double to_double(const Int& x) { return x.get_d(); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }

} // namespace nfv

#endif
