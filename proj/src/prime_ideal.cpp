#include "nfvaaler/prime_ideal.hpp"

#include <algorithm>

#include "nfvaaler/errors.hpp"

namespace nfv {

namespace {

// Dense polynomials over F_p, ascending coefficients in [0, p).
using Fp = std::vector<long>;

long mulmod(long a, long b, long p) { return (long)((__int128)a * b % p); }

long addmod(long a, long b, long p) {
    long r = a + b;
    return r >= p ? r - p : r;
}

long submod(long a, long b, long p) {
    long r = a - b;
    return r < 0 ? r + p : r;
}

long inv_mod(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return t < 0 ? t + p : t;
}

void fp_trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const Fp& a) { return (int)a.size() - 1; }

Fp fp_mul(const Fp& a, const Fp& b, long p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    fp_trim(r);
    return r;
}

Fp fp_rem(Fp a, const Fp& b, long p) {
    long inv_lead = inv_mod(b.back(), p);
    while (fp_deg(a) >= fp_deg(b)) {
        long c = mulmod(a.back(), inv_lead, p);
        int shift = fp_deg(a) - fp_deg(b);
        for (int i = 0; i <= fp_deg(b); ++i)
            a[(size_t)(i + shift)] = submod(a[(size_t)(i + shift)], mulmod(c, b[(size_t)i], p), p);
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Fp fp_quot(Fp a, const Fp& b, long p) {
    Fp q((size_t)std::max(0, fp_deg(a) - fp_deg(b) + 1), 0);
    long inv_lead = inv_mod(b.back(), p);
    while (fp_deg(a) >= fp_deg(b)) {
        long c = mulmod(a.back(), inv_lead, p);
        int shift = fp_deg(a) - fp_deg(b);
        q[(size_t)shift] = c;
        for (int i = 0; i <= fp_deg(b); ++i)
            a[(size_t)(i + shift)] = submod(a[(size_t)(i + shift)], mulmod(c, b[(size_t)i], p), p);
        fp_trim(a);
        if (a.empty()) break;
    }
    fp_trim(q);
    return q;
}

Fp fp_monic(Fp a, long p) {
    if (a.empty() || a.back() == 1) return a;
    long inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

Fp fp_gcd(Fp a, Fp b, long p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        Fp r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(std::move(a), p);
}

Fp fp_deriv(const Fp& a, long p) {
    Fp d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(mulmod((long)(i % (size_t)p), a[i], p));
    fp_trim(d);
    return d;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& mod, long p) {
    return fp_rem(fp_mul(a, b, p), mod, p);
}

Fp fp_powmod(Fp base, Int exp, const Fp& mod, long p) {
    Fp result{1};
    base = fp_rem(std::move(base), mod, p);
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = fp_mulmod(result, base, mod, p);
        base = fp_mulmod(base, base, mod, p);
        exp >>= 1;
    }
    return result;
}

// k-th deterministic trial polynomial: digits of k in base p.
Fp trial_poly(long k, long p) {
    Fp a;
    while (k > 0) {
        a.push_back(k % p);
        k /= p;
    }
    fp_trim(a);
    return a;
}

// Equal-degree splitting of a squarefree product of degree-d irreducibles.
void equal_degree_split(const Fp& poly, int d, long p, std::vector<Fp>& out) {
    if (fp_deg(poly) == d) {
        out.push_back(poly);
        return;
    }
    for (long k = p;; ++k) {   // start past the constants
        Fp a = trial_poly(k, p);
        Fp g;
        if (p == 2) {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            Fp tr = fp_rem(a, poly, p);
            Fp cur = tr;
            for (int i = 1; i < d; ++i) {
                cur = fp_mulmod(cur, cur, poly, p);
                if (tr.size() < cur.size()) tr.resize(cur.size(), 0);
                for (size_t j = 0; j < cur.size(); ++j) tr[j] = addmod(tr[j], cur[j], p);
                fp_trim(tr);
            }
            g = fp_gcd(poly, tr, p);
        } else {
            Int exp = int_pow(Int(p), (unsigned long)d) - 1;
            exp /= 2;
            Fp b = fp_powmod(a, exp, poly, p);
            if (b.empty())
                b = {};
            else
                b[0] = submod(b[0], 1, p);
            fp_trim(b);
            g = fp_gcd(poly, b, p);
        }
        if (!g.empty() && fp_deg(g) > 0 && fp_deg(g) < fp_deg(poly)) {
            equal_degree_split(g, d, p, out);
            equal_degree_split(fp_quot(poly, g, p), d, p, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization of a squarefree monic poly.
std::vector<Fp> factor_squarefree(Fp w, long p) {
    std::vector<Fp> out;
    Fp x{0, 1};
    Fp h = x;
    int d = 0;
    while (fp_deg(w) > 0) {
        ++d;
        if (2 * d > fp_deg(w)) {
            out.push_back(w);
            break;
        }
        h = fp_powmod(h, Int(p), w, p);
        Fp diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = submod(diff[1], 1, p);
        fp_trim(diff);
        Fp g = fp_gcd(w, diff, p);
        if (fp_deg(g) > 0) {
            equal_degree_split(g, d, p, out);
            w = fp_quot(w, g, p);
            h = fp_rem(h, w, p);
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<std::vector<long>, int>> factor_poly_mod_p(const IntPoly& poly, long p) {
    Fp m;
    m.reserve(poly.size());
    for (const Int& c : poly) m.push_back((long)mpz_fdiv_ui(c.get_mpz_t(), (unsigned long)p));
    fp_trim(m);
    m = fp_monic(std::move(m), p);

    std::vector<std::pair<Fp, int>> factors;
    int mult_scale = 1;
    while (fp_deg(m) > 0) {
        Fp dm = fp_deriv(m, p);
        if (dm.empty()) {
            // m = h(x^p) = h~(x)^p over F_p.
            Fp h;
            for (size_t i = 0; i < m.size(); i += (size_t)p) h.push_back(m[i]);
            m = std::move(h);
            mult_scale *= (int)p;
            continue;
        }
        Fp u = fp_gcd(m, dm, p);
        Fp w = fp_quot(m, u, p);   // distinct irreducibles with mult not divisible by p
        for (Fp& q : factor_squarefree(std::move(w), p)) {
            int k = 0;
            while (true) {
                Fp r = fp_rem(m, q, p);
                if (!r.empty()) break;
                m = fp_quot(m, q, p);
                ++k;
            }
            factors.emplace_back(std::move(q), k * mult_scale);
        }
    }
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<std::pair<std::vector<long>, int>> out;
    out.reserve(factors.size());
    for (auto& [q, k] : factors) out.emplace_back(std::move(q), k);
    return out;
}

bool is_prime_long(long p) {
    if (p < 2) return false;
    Int z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::vector<long> rational_primes_up_to(long limit) {
    std::vector<long> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite((size_t)limit + 1, false);
    for (long i = 2; i <= limit; ++i) {
        if (composite[(size_t)i]) continue;
        primes.push_back(i);
        for (long j = i * i; j >= 0 && j <= limit; j += i) composite[(size_t)j] = true;
    }
    return primes;
}

std::vector<PrimeIdeal> factor_rational_prime(const NumberField& field, long p) {
    if (!is_prime_long(p)) fail(errc::not_prime, "not a rational prime: " + std::to_string(p));

    auto factors = factor_poly_mod_p(field.poly, p);
    std::vector<PrimeIdeal> primes;
    primes.reserve(factors.size());
    int ef_sum = 0;
    for (auto& [g, e] : factors) {
        PrimeIdeal q;
        q.p = p;
        q.e = e;
        q.f = (int)g.size() - 1;
        q.local_factor = std::move(g);
        ef_sum += q.e * q.f;
        primes.push_back(std::move(q));
    }
    if (ef_sum != field.degree)
        fail(errc::computation, "mod-p factorization degree mismatch at p = " + std::to_string(p));
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size(); ++i) primes[i].index = (int)i;
    return primes;
}

} // namespace nfv
