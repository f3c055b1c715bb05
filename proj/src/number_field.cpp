#include "nfvaaler/number_field.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace nfv {

namespace {

constexpr double kRootResidualTol = 1e-9;

std::complex<double> eval_with_derivative(const IntPoly& f, std::complex<double> z,
                                          std::complex<double>& deriv) {
    std::complex<double> acc = 0.0, dacc = 0.0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        dacc = dacc * z + acc;
        acc = acc * z + it->get_d();
    }
    deriv = dacc;
    return acc;
}

std::vector<std::complex<double>> polynomial_roots(const IntPoly& f) {
    int n = (int)f.size() - 1;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -f[(size_t)i].get_d();
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        fail(errc::root_finding_failed, "eigenvalue iteration did not converge");

    std::vector<std::complex<double>> roots(n);
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = solver.eigenvalues()[i];
        for (int iter = 0; iter < 64; ++iter) {
            std::complex<double> d;
            std::complex<double> v = eval_with_derivative(f, z, d);
            if (std::abs(v) == 0.0 || std::abs(d) == 0.0) break;
            std::complex<double> step = v / d;
            z -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
        }
        roots[i] = z;
    }
    return roots;
}

std::vector<std::vector<double>> invert(const std::vector<std::vector<double>>& m, double& det) {
    int n = (int)m.size();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = m[(size_t)i][(size_t)j];
    det = a.determinant();
    Eigen::MatrixXd inv = a.inverse();
    std::vector<std::vector<double>> out((size_t)n, std::vector<double>((size_t)n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[(size_t)i][(size_t)j] = inv(i, j);
    return out;
}

} // namespace

NumberField build_field(const NumberFieldSpec& spec) {
    const IntPoly& f = spec.coefficients;
    if (f.size() < 2) fail(errc::config_invalid, "defining polynomial must have degree >= 1");
    if (f.back() != 1) fail(errc::non_monic, "defining polynomial must be monic");
    int n = (int)f.size() - 1;

    RatPoly fq = to_rat_poly(f);
    RatPoly g = poly_gcd(fq, poly_derivative(fq));
    if (poly_deg(g) > 0) fail(errc::not_squarefree, "defining polynomial is not squarefree");

    if (n >= 2) {
        // A rational root of a monic integer polynomial is an integer
        // dividing the constant coefficient.
        if (f[0] == 0) fail(errc::rational_root_found, "x divides the defining polynomial");
        Int c0 = abs(f[0]);
        for (Int d = 1; d * d <= c0; ++d) {
            if (c0 % d != 0) continue;
            for (const Int& cand : std::vector<Int>{d, Int(-d), Int(c0 / d), Int(-(c0 / d))}) {
                Rat v = poly_eval_rat(fq, Rat(cand));
                if (v == 0)
                    fail(errc::rational_root_found,
                         "rational root " + cand.get_str() + " found; polynomial is reducible");
            }
        }
    }

    NumberField field;
    field.degree = n;
    field.poly = f;
    field.monogenic_asserted = spec.monogenic_asserted;
    field.irreducibility_certified = n <= 3;

    {
        Rat res = poly_resultant(fq, poly_derivative(fq));
        long swaps = (long)n * (n - 1) / 2;
        if (swaps % 2 == 1) res = -res;
        if (!rat_is_integer(res)) fail(errc::computation, "non-integral polynomial discriminant");
        field.poly_discriminant = res.get_num();
    }

    auto roots = polynomial_roots(f);
    for (auto z : roots) {
        double scale = 1.0 + std::abs(z);
        if (std::abs(z.imag()) <= 1e-8 * scale) {
            double x = z.real();
            // Re-polish on the real axis.
            for (int iter = 0; iter < 32; ++iter) {
                std::complex<double> d;
                std::complex<double> v = eval_with_derivative(f, {x, 0.0}, d);
                if (d.real() == 0.0) break;
                x -= v.real() / d.real();
            }
            field.real_roots.push_back(x);
        } else if (z.imag() > 0) {
            field.cx_roots.push_back(z);
        }
    }
    field.s = (int)field.real_roots.size();
    field.t = (int)field.cx_roots.size();
    if (field.s + 2 * field.t != n)
        fail(errc::root_finding_failed, "could not separate real and complex roots");
    field.unit_rank = field.s + field.t - 1;

    std::sort(field.real_roots.begin(), field.real_roots.end());
    std::sort(field.cx_roots.begin(), field.cx_roots.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  if (a.real() != b.real()) return a.real() < b.real();
                  return a.imag() < b.imag();
              });

    for (double r : field.real_roots)
        if (std::abs(poly_eval_cx(f, {r, 0.0})) > kRootResidualTol)
            fail(errc::root_finding_failed, "real root residual above tolerance");
    for (auto z : field.cx_roots)
        if (std::abs(poly_eval_cx(f, z)) > kRootResidualTol)
            fail(errc::root_finding_failed, "complex root residual above tolerance");

    // domain_basis[j] = iota(theta^j) expanded to R^n.
    field.domain_basis.assign((size_t)n, std::vector<double>((size_t)n, 0.0));
    for (int j = 0; j < n; ++j) {
        auto& col = field.domain_basis[(size_t)j];
        int idx = 0;
        for (double r : field.real_roots) col[(size_t)idx++] = std::pow(r, j);
        for (auto z : field.cx_roots) {
            std::complex<double> v = std::pow(z, j);
            col[(size_t)idx++] = v.real();
            col[(size_t)idx++] = v.imag();
        }
    }

    // Column-major basis matrix M with M[r][c] = coordinate r of iota(theta^c).
    std::vector<std::vector<double>> m((size_t)n, std::vector<double>((size_t)n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m[(size_t)r][(size_t)c] = field.domain_basis[(size_t)c][(size_t)r];
    double det = 0;
    field.basis_inv_ = invert(m, det);
    if (!(std::abs(det) > 1e-12)) fail(errc::singular_basis, "fundamental domain basis is singular");
    field.domain_volume = std::abs(det);

    return field;
}

FieldElement NumberField::from_coords(std::vector<Rat> c) const {
    if ((int)c.size() != degree) fail(errc::computation, "coordinate vector has wrong length");
    return FieldElement{std::move(c)};
}

FieldElement NumberField::from_int_coords(const std::vector<long>& c) const {
    std::vector<Rat> v;
    v.reserve(c.size());
    for (long x : c) v.emplace_back(x);
    return from_coords(std::move(v));
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = a;
    for (int i = 0; i < degree; ++i) r.coords[(size_t)i] += b.coords[(size_t)i];
    return r;
}

FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = a;
    for (int i = 0; i < degree; ++i) r.coords[(size_t)i] -= b.coords[(size_t)i];
    return r;
}

FieldElement NumberField::neg(const FieldElement& a) const {
    FieldElement r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

FieldElement NumberField::mul_scalar(const FieldElement& a, const Rat& k) const {
    FieldElement r = a;
    for (auto& c : r.coords) c *= k;
    return r;
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
    size_t n = (size_t)degree;
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (a.coords[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) prod[i + j] += a.coords[i] * b.coords[j];
    }
    // Reduce modulo the monic defining polynomial.
    for (size_t i = 2 * n - 2; i >= n && i < prod.size(); --i) {
        Rat c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < n; ++j) prod[i - n + j] -= c * Rat(poly[j]);
    }
    prod.resize(n);
    return FieldElement{std::move(prod)};
}

FieldElement NumberField::inverse(const FieldElement& a) const {
    if (a.is_zero()) fail(errc::zero_element, "cannot invert zero");
    // Extended Euclid in Q[x] against the defining polynomial.
    RatPoly r0 = to_rat_poly(poly);
    RatPoly r1(a.coords);
    poly_trim(r1);
    RatPoly s0{}, s1{Rat(1)};
    while (poly_deg(r1) > 0) {
        // quotient of r0 by r1
        RatPoly q;
        RatPoly rem = r0;
        poly_trim(rem);
        q.assign((size_t)std::max(0, poly_deg(rem) - poly_deg(r1) + 1), Rat(0));
        while (poly_deg(rem) >= poly_deg(r1)) {
            Rat c = rem.back() / r1.back();
            int shift = poly_deg(rem) - poly_deg(r1);
            q[(size_t)shift] += c;
            for (int i = 0; i <= poly_deg(r1); ++i) rem[(size_t)(i + shift)] -= c * r1[(size_t)i];
            poly_trim(rem);
            if (rem.empty()) break;
        }
        // s2 = s0 - q*s1
        RatPoly qs1((size_t)(poly_deg(q) + poly_deg(s1) + 1 > 0 ? poly_deg(q) + poly_deg(s1) + 1 : 0),
                    Rat(0));
        for (int i = 0; i <= poly_deg(q); ++i)
            for (int j = 0; j <= poly_deg(s1); ++j) qs1[(size_t)(i + j)] += q[(size_t)i] * s1[(size_t)j];
        RatPoly s2 = s0;
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rat(0));
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty() || r1[0] == 0)
        fail(errc::computation, "element shares a factor with the defining polynomial");
    Rat inv_const = 1 / r1[0];
    std::vector<Rat> out((size_t)degree, Rat(0));
    for (int i = 0; i <= poly_deg(s1); ++i) out[(size_t)i] = s1[(size_t)i] * inv_const;
    return FieldElement{std::move(out)};
}

std::string NumberField::element_str(const FieldElement& e, const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < degree; ++i) {
        const Rat& c = e.coords[(size_t)i];
        if (c == 0) continue;
        Rat a = c;
        if (!first) {
            os << (a > 0 ? "+" : "-");
            if (a < 0) a = -a;
        }
        if (i == 0)
            os << rat_str(a);
        else {
            if (a == -1)
                os << "-";
            else if (a != 1)
                os << rat_str(a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Rat norm_element(const NumberField& field, const FieldElement& e) {
    RatPoly g(e.coords);
    poly_trim(g);
    if (g.empty()) return 0;
    return poly_resultant(to_rat_poly(field.poly), g);
}

EmbeddingPoint embed(const NumberField& field, const FieldElement& e) {
    EmbeddingPoint p;
    p.re.reserve((size_t)field.s);
    p.cx.reserve((size_t)field.t);
    std::vector<double> coords;
    coords.reserve(e.coords.size());
    for (const auto& c : e.coords) coords.push_back(to_double(c));
    for (double r : field.real_roots) {
        double acc = 0;
        for (auto it = coords.rbegin(); it != coords.rend(); ++it) acc = acc * r + *it;
        p.re.push_back(acc);
    }
    for (auto z : field.cx_roots) {
        std::complex<double> acc = 0;
        for (auto it = coords.rbegin(); it != coords.rend(); ++it) acc = acc * z + *it;
        p.cx.push_back(acc);
    }
    return p;
}

std::vector<double> NumberField::expand(const EmbeddingPoint& p) const {
    std::vector<double> x;
    x.reserve((size_t)degree);
    for (double r : p.re) x.push_back(r);
    for (auto z : p.cx) {
        x.push_back(z.real());
        x.push_back(z.imag());
    }
    return x;
}

EmbeddingPoint NumberField::from_expanded(const std::vector<double>& x) const {
    EmbeddingPoint p;
    int idx = 0;
    for (int i = 0; i < s; ++i) p.re.push_back(x[(size_t)idx++]);
    for (int i = 0; i < t; ++i) {
        double a = x[(size_t)idx++];
        double b = x[(size_t)idx++];
        p.cx.emplace_back(a, b);
    }
    return p;
}

std::vector<double> NumberField::basis_coords(const std::vector<double>& x) const {
    std::vector<double> t((size_t)degree, 0.0);
    for (int i = 0; i < degree; ++i)
        for (int j = 0; j < degree; ++j) t[(size_t)i] += basis_inv_[(size_t)i][(size_t)j] * x[(size_t)j];
    return t;
}

DomainReduction reduce_to_domain(const NumberField& field, const EmbeddingPoint& p) {
    std::vector<double> x = field.expand(p);
    std::vector<double> t = field.basis_coords(x);
    DomainReduction out;
    out.lattice.resize((size_t)field.degree);
    std::vector<double> frac((size_t)field.degree);
    for (int i = 0; i < field.degree; ++i) {
        double fl = std::floor(t[(size_t)i]);
        // Points an epsilon below an integer belong to the next cell.
        if (t[(size_t)i] - fl >= 1.0 - 1e-12) fl += 1.0;
        out.lattice[(size_t)i] = (long)fl;
        frac[(size_t)i] = t[(size_t)i] - fl;
    }
    std::vector<double> reduced((size_t)field.degree, 0.0);
    for (int j = 0; j < field.degree; ++j)
        for (int i = 0; i < field.degree; ++i)
            reduced[(size_t)i] += frac[(size_t)j] * field.domain_basis[(size_t)j][(size_t)i];
    out.point = field.from_expanded(reduced);
    return out;
}

} // namespace nfv
