#include "nfvaaler/ideal.hpp"

#include <algorithm>
#include <cmath>

#include "nfvaaler/errors.hpp"

namespace nfv {

namespace {

// Product of two integral elements with integer coordinates, reduced
// modulo the monic defining polynomial. Stays integral.
std::vector<Int> int_mul_mod_f(const NumberField& field, const std::vector<Int>& a,
                               const std::vector<Int>& b) {
    size_t n = (size_t)field.degree;
    std::vector<Int> prod(2 * n - 1, Int(0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
    }
    for (size_t i = 2 * n - 2; i >= n && i < prod.size(); --i) {
        Int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < n; ++j) prod[i - n + j] -= c * field.poly[j];
    }
    prod.resize(n);
    return prod;
}

std::vector<Int> int_poly_mod_f(const NumberField& field, std::vector<Int> g) {
    size_t n = (size_t)field.degree;
    while (g.size() > n) {
        Int c = g.back();
        g.pop_back();
        if (c == 0) continue;
        size_t shift = g.size() - n;
        for (size_t j = 0; j < n; ++j) g[shift + j] -= c * field.poly[j];
    }
    g.resize(n, Int(0));
    return g;
}

// Module basis of the product of two full modules given by their bases.
IntMat module_mul(const NumberField& field, const IntMat& a, const IntMat& b) {
    IntMat rows;
    rows.reserve(a.size() * b.size());
    for (const auto& ra : a)
        for (const auto& rb : b) rows.push_back(int_mul_mod_f(field, ra, rb));
    return hnf(std::move(rows), field.degree);
}

IntMat identity_module(int n) {
    IntMat id((size_t)n, std::vector<Int>((size_t)n, Int(0)));
    for (int i = 0; i < n; ++i) id[(size_t)i][(size_t)i] = 1;
    return id;
}

// HNF basis of (p, g(theta)) over the power basis.
IntMat prime_module(const NumberField& field, const PrimeIdeal& q) {
    size_t n = (size_t)field.degree;
    IntMat rows;
    rows.reserve(2 * n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<Int> row(n, Int(0));
        row[j] = q.p;
        rows.push_back(std::move(row));
    }
    std::vector<Int> g;
    g.reserve(q.local_factor.size());
    for (long c : q.local_factor) g.emplace_back(c);
    g = int_poly_mod_f(field, std::move(g));
    for (size_t j = 0; j < n; ++j) {
        std::vector<Int> unit(n, Int(0));
        unit[j] = 1;
        rows.push_back(int_mul_mod_f(field, g, unit));
    }
    return hnf(std::move(rows), field.degree);
}

IntMat hnf_from_factors(const NumberField& field, const Ideal::Factors& factors) {
    IntMat acc = identity_module(field.degree);
    for (const auto& [q, k] : factors) {
        IntMat pm = prime_module(field, q);
        for (int i = 0; i < k; ++i) acc = module_mul(field, acc, pm);
    }
    return acc;
}

std::vector<Int> integral_coords(const FieldElement& e) {
    std::vector<Int> v;
    v.reserve(e.coords.size());
    for (const auto& c : e.coords) {
        if (!rat_is_integer(c)) fail(errc::computation, "element is not integral");
        v.push_back(c.get_num());
    }
    return v;
}

} // namespace

Ideal::Ideal(Factors factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    norm_ = 1;
    for (auto& [q, k] : factors) {
        if (k == 0) continue;
        if (k < 0) fail(errc::computation, "negative ideal exponent");
        if (!factors_.empty() && factors_.back().first == q)
            factors_.back().second += k;
        else
            factors_.emplace_back(q, k);
    }
    for (const auto& [q, k] : factors_) norm_ *= int_pow(q.norm(), (unsigned long)k);
    hnf_cache_ = std::make_shared<HnfCache>();
}

bool Ideal::operator==(const Ideal& o) const {
    if (factors_.size() != o.factors_.size()) return false;
    for (size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].second != o.factors_[i].second || !(factors_[i].first == o.factors_[i].first))
            return false;
    return true;
}

bool Ideal::operator<(const Ideal& o) const {
    int c = cmp(norm_, o.norm_);
    if (c != 0) return c < 0;
    size_t m = std::min(factors_.size(), o.factors_.size());
    for (size_t i = 0; i < m; ++i) {
        if (factors_[i].first < o.factors_[i].first) return true;
        if (o.factors_[i].first < factors_[i].first) return false;
        if (factors_[i].second != o.factors_[i].second)
            return factors_[i].second < o.factors_[i].second;
    }
    return factors_.size() < o.factors_.size();
}

const IntMat& Ideal::hnf(const NumberField& field) const {
    std::call_once(hnf_cache_->flag,
                   [&] { hnf_cache_->h = hnf_from_factors(field, factors_); });
    return hnf_cache_->h;
}

Ideal ideal_from_prime(const PrimeIdeal& q, int k) { return Ideal(Ideal::Factors{{q, k}}); }

Int ideal_norm(const Ideal& a) { return a.norm(); }

Int euler_phi(const Ideal& a) {
    Int phi = 1;
    for (const auto& [q, k] : a.factors()) {
        Int nq = q.norm();
        phi *= int_pow(nq, (unsigned long)(k - 1)) * (nq - 1);
    }
    return phi;
}

int moebius(const Ideal& a) {
    for (const auto& [q, k] : a.factors())
        if (k >= 2) return 0;
    return a.factors().size() % 2 == 0 ? 1 : -1;
}

bool is_squarefree(const Ideal& a) {
    for (const auto& [q, k] : a.factors())
        if (k >= 2) return false;
    return true;
}

Ideal ideal_mul(const Ideal& a, const Ideal& b) {
    Ideal::Factors f = a.factors();
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    return Ideal(std::move(f));
}

Ideal ideal_div(const Ideal& a, const Ideal& b) {
    Ideal::Factors out;
    auto it = a.factors().begin();
    for (const auto& [q, k] : b.factors()) {
        while (it != a.factors().end() && it->first < q) {
            out.push_back(*it);
            ++it;
        }
        if (it == a.factors().end() || !(it->first == q) || it->second < k)
            fail(errc::computation, "ideal_div: divisor does not divide");
        if (it->second > k) out.emplace_back(q, it->second - k);
        ++it;
    }
    out.insert(out.end(), it, a.factors().end());
    return Ideal(std::move(out));
}

std::pair<Ideal, Ideal> gcd_lcm(const Ideal& a, const Ideal& b) {
    Ideal::Factors g, l;
    auto ia = a.factors().begin(), ib = b.factors().begin();
    while (ia != a.factors().end() || ib != b.factors().end()) {
        if (ib == b.factors().end() || (ia != a.factors().end() && ia->first < ib->first)) {
            l.push_back(*ia);
            ++ia;
        } else if (ia == a.factors().end() || ib->first < ia->first) {
            l.push_back(*ib);
            ++ib;
        } else {
            g.emplace_back(ia->first, std::min(ia->second, ib->second));
            l.emplace_back(ia->first, std::max(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    return {Ideal(std::move(g)), Ideal(std::move(l))};
}

Ideal ideal_gcd(const Ideal& a, const Ideal& b) { return gcd_lcm(a, b).first; }

bool ideal_coprime(const Ideal& a, const Ideal& b) {
    auto ia = a.factors().begin(), ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else
            return false;
    }
    return true;
}

bool ideal_divides(const Ideal& d, const Ideal& a) {
    auto ia = a.factors().begin();
    for (const auto& [q, k] : d.factors()) {
        while (ia != a.factors().end() && ia->first < q) ++ia;
        if (ia == a.factors().end() || !(ia->first == q) || ia->second < k) return false;
    }
    return true;
}

std::vector<Ideal> divisors_of(const Ideal& a) {
    std::vector<Ideal> out{Ideal{}};
    for (const auto& [q, k] : a.factors()) {
        size_t base = out.size();
        Ideal power;
        for (int j = 1; j <= k; ++j) {
            power = ideal_mul(power, ideal_from_prime(q));
            for (size_t i = 0; i < base; ++i) out.push_back(ideal_mul(out[i], power));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMat hnf_of(const NumberField& field, const Ideal& a) { return a.hnf(field); }

std::vector<PrimeIdeal> PrimeFactory::primes_above(long p) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = primes_.find(p);
        if (it != primes_.end()) return it->second;
    }
    auto result = factor_rational_prime(*field_, p);
    std::lock_guard<std::mutex> lock(mu_);
    return primes_.emplace(p, std::move(result)).first->second;
}

IntMat PrimeFactory::prime_power_hnf(const PrimeIdeal& q, int k) {
    auto key = std::make_pair(std::make_pair(q.p, q.local_factor), k);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = power_hnf_.find(key);
        if (it != power_hnf_.end()) return it->second;
    }
    IntMat result = hnf_from_factors(*field_, {{q, k}});
    std::lock_guard<std::mutex> lock(mu_);
    return power_hnf_.emplace(std::move(key), std::move(result)).first->second;
}

void PrimeFactory::preload(long p, std::vector<PrimeIdeal> primes) {
    std::lock_guard<std::mutex> lock(mu_);
    primes_.emplace(p, std::move(primes));
}

std::vector<long> PrimeFactory::known_primes() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<long> out;
    out.reserve(primes_.size());
    for (const auto& [p, v] : primes_) out.push_back(p);
    return out;
}

std::vector<PrimeIdeal> prime_ideals_up_to(PrimeFactory& factory, const Int& X) {
    if (!X.fits_slong_p()) fail(errc::cap_exceeded, "prime enumeration bound too large");
    long limit = X.get_si();
    std::vector<PrimeIdeal> out;
    for (long p : rational_primes_up_to(limit))
        for (const auto& q : factory.primes_above(p))
            if (q.norm() <= X) out.push_back(q);
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
        int c = cmp(a.norm(), b.norm());
        if (c != 0) return c < 0;
        return a < b;
    });
    return out;
}

namespace {

void dfs_ideals(const std::vector<PrimeIdeal>& primes, size_t i, const Int& budget,
                Ideal::Factors& stack, const std::function<void(const Ideal&)>& fn) {
    fn(Ideal(stack));
    for (size_t j = i; j < primes.size(); ++j) {
        Int np = primes[j].norm();
        if (np > budget) break;
        Int sub = budget / np;
        stack.emplace_back(primes[j], 1);
        while (true) {
            dfs_ideals(primes, j + 1, sub, stack, fn);
            if (sub < np) break;
            sub /= np;
            stack.back().second += 1;
        }
        stack.pop_back();
    }
}

Int dfs_count(const std::vector<PrimeIdeal>& primes, size_t i, const Int& budget) {
    Int total = 1;
    for (size_t j = i; j < primes.size(); ++j) {
        Int np = primes[j].norm();
        if (np > budget) break;
        Int sub = budget / np;
        while (true) {
            total += dfs_count(primes, j + 1, sub);
            if (sub < np) break;
            sub /= np;
        }
    }
    return total;
}

} // namespace

void for_each_ideal(const std::vector<PrimeIdeal>& primes, const Int& X,
                    const std::function<void(const Ideal&)>& fn) {
    if (X < 1) return;
    Ideal::Factors stack;
    dfs_ideals(primes, 0, X, stack, fn);
}

Int count_ideals_up_to(const std::vector<PrimeIdeal>& primes, const Int& X) {
    if (X < 1) return 0;
    return dfs_count(primes, 0, X);
}

std::vector<Ideal> enumerate_ideals(PrimeFactory& factory, double X, bool primes_only) {
    if (X < 1) fail(errc::config_invalid, "enumeration bound must be >= 1");
    Int xi = rat_floor(rat_of_double(X));
    std::vector<Ideal> out;
    auto primes = prime_ideals_up_to(factory, xi);
    if (primes_only) {
        out.reserve(primes.size());
        for (const auto& q : primes) out.push_back(ideal_from_prime(q));
    } else {
        for_each_ideal(primes, xi, [&](const Ideal& a) { out.push_back(a); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool element_in_ideal(const NumberField& field, const FieldElement& e, const IntMat& hnf_basis) {
    (void)field;
    return hnf_contains(hnf_basis, integral_coords(e));
}

int valuation_at_prime(PrimeFactory& factory, const FieldElement& e, const PrimeIdeal& q) {
    if (e.is_zero()) fail(errc::zero_element, "valuation of zero");
    Rat nm = norm_element(factory.field(), e);
    Int num = abs(nm.get_num());
    int bound = 0;
    while (num % q.p == 0) {
        num /= q.p;
        ++bound;
    }
    int v = 0;
    while (v < bound + 1) {
        if (!hnf_contains(factory.prime_power_hnf(q, v + 1), integral_coords(e))) break;
        ++v;
    }
    return v;
}

Ideal factor_principal(PrimeFactory& factory, const FieldElement& e) {
    if (e.is_zero()) fail(errc::zero_element, "factor_principal of zero");
    Rat nm = norm_element(factory.field(), e);
    if (!rat_is_integer(nm)) fail(errc::computation, "element is not integral");
    Int n = abs(nm.get_num());
    Ideal::Factors factors;
    for (const auto& [p, a] : factor_integer(n)) {
        int seen = 0;
        for (const auto& q : factory.primes_above(p)) {
            int v = valuation_at_prime(factory, e, q);
            if (v > 0) factors.emplace_back(q, v);
            seen += v * q.f;
        }
        if (seen != a)
            fail(errc::computation, "valuation bookkeeping failed at p = " + std::to_string(p));
    }
    return Ideal(std::move(factors));
}

FractionalElement fractional_from(const NumberField& field, const FieldElement& value) {
    Int den = 1;
    for (const auto& c : value.coords) {
        Int d = c.get_den();
        den = lcm(den, d);
    }
    FractionalElement out;
    out.denominator = den;
    out.numerator = field.mul_scalar(value, Rat(den));
    for (auto& c : out.numerator.coords) c.canonicalize();
    return out;
}

FieldElement fractional_value(const NumberField& field, const FractionalElement& g) {
    return field.mul_scalar(g.numerator, Rat(1, g.denominator));
}

Ideal denominator_ideal(PrimeFactory& factory, const FractionalElement& g) {
    if (g.numerator.is_zero()) fail(errc::zero_element, "denominator ideal of zero");
    Ideal::Factors factors;
    for (const auto& [p, a] : factor_integer(g.denominator)) {
        for (const auto& q : factory.primes_above(p)) {
            int v = valuation_at_prime(factory, g.numerator, q);
            int exp = a * q.e - v;
            if (exp > 0) factors.emplace_back(q, exp);
        }
    }
    return Ideal(std::move(factors));
}

std::vector<std::pair<long, int>> factor_integer(Int n) {
    if (n < 1) fail(errc::computation, "factor_integer needs a positive argument");
    std::vector<std::pair<long, int>> out;
    auto strip = [&](long p) {
        int k = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), (unsigned long)p)) {
            n /= p;
            ++k;
        }
        if (k > 0) out.emplace_back(p, k);
    };
    strip(2);
    for (long p = 3; p <= 1000000 && Int(p) * p <= n; p += 2) strip(p);
    if (n > 1) {
        if (Int(1000000) * 1000000 >= n || mpz_probab_prime_p(n.get_mpz_t(), 30)) {
            if (!n.fits_slong_p()) fail(errc::cap_exceeded, "prime factor exceeds word size");
            out.emplace_back(n.get_si(), 1);
        } else {
            fail(errc::cap_exceeded, "integer factorization cap exceeded");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool sweep_integral_elements(const NumberField& field, long radius_cap, long budget,
                             const std::function<bool(const std::vector<long>&)>& fn) {
    int n = field.degree;
    std::vector<long> coords((size_t)n, 0);
    for (long radius = 1; radius <= radius_cap && budget > 0; ++radius) {
        std::vector<long> order;
        for (long v = radius; v >= 1; --v) {
            order.push_back(v);
            order.push_back(-v);
        }
        order.push_back(0);
        std::function<bool(int, bool)> sweep = [&](int pos, bool boundary) {
            if (pos == n) {
                if (!boundary || --budget <= 0) return false;
                return fn(coords);
            }
            for (long c : order) {
                coords[(size_t)pos] = c;
                if (sweep(pos + 1, boundary || std::abs(c) == radius)) return true;
            }
            return false;
        };
        if (sweep(0, false)) return true;
    }
    return false;
}

namespace {

// Cheap double-precision norm estimate used to filter sweep candidates
// before the exact resultant.
double approx_abs_norm(const NumberField& field, const std::vector<long>& coords) {
    double approx = 1.0;
    int n = field.degree;
    for (int rho = 0; rho < field.embedding_count(); ++rho) {
        if (rho < field.s) {
            double v = 0;
            for (int j = n - 1; j >= 0; --j)
                v = v * field.real_roots[(size_t)rho] + (double)coords[(size_t)j];
            approx *= std::abs(v);
        } else {
            std::complex<double> z = 0;
            for (int j = n - 1; j >= 0; --j)
                z = z * field.cx_roots[(size_t)(rho - field.s)] + (double)coords[(size_t)j];
            approx *= std::norm(z);
        }
    }
    return approx;
}

// Small integral generator of a prime ideal; display only.
bool find_prime_generator(PrimeFactory& factory, const PrimeIdeal& q, FieldElement& out) {
    const NumberField& field = factory.field();
    Int target = q.norm();
    double target_d = to_double(target);
    IntMat basis = factory.prime_power_hnf(q, 1);
    long radius_cap = 3 + (long)std::ceil(2.0 * std::pow(target_d, 1.0 / field.degree));

    return sweep_integral_elements(field, radius_cap, 2000000, [&](const std::vector<long>& coords) {
        if (std::abs(approx_abs_norm(field, coords) - target_d) > 0.25 * (1.0 + target_d))
            return false;
        FieldElement e = field.from_int_coords(coords);
        if (e.is_zero()) return false;
        if (abs(norm_element(field, e).get_num()) != target) return false;
        if (!hnf_contains(basis, integral_coords(e))) return false;
        out = e;
        return true;
    });
}

} // namespace

std::string ideal_str(PrimeFactory& factory, const Ideal& a) {
    if (a.is_unit_ideal()) return "(1)";
    std::string out;
    for (const auto& [q, k] : a.factors()) {
        if (!out.empty()) out += "*";
        FieldElement gen;
        if (find_prime_generator(factory, q, gen))
            out += "(" + factory.field().element_str(gen) + ")";
        else
            out += "P[p=" + std::to_string(q.p) + ",#" + std::to_string(q.index) + "]";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace nfv
