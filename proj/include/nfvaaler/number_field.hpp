#ifndef NFV_NUMBER_FIELD_HPP
#define NFV_NUMBER_FIELD_HPP

#include <complex>
#include <string>
#include <vector>

#include "nfvaaler/errors.hpp"
#include "nfvaaler/intpoly.hpp"
#include "nfvaaler/rat.hpp"

namespace nfv {

struct NumberFieldSpec {
    IntPoly coefficients;              // ascending; leading coefficient 1
    bool monogenic_asserted = false;   // O_K = Z[theta]
};

// Element of K as exact rational coordinates over the power basis
// 1, theta, ..., theta^(n-1).
struct FieldElement {
    std::vector<Rat> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }
    bool is_integral() const {
        for (const auto& c : coords)
            if (!rat_is_integer(c)) return false;
        return true;
    }
    bool operator==(const FieldElement& o) const { return coords == o.coords; }
};

// iota(alpha) in R^s x C^t, indexed by embedding: rho < s real, then t
// complex representatives (positive imaginary part).
struct EmbeddingPoint {
    std::vector<double> re;
    std::vector<std::complex<double>> cx;

    // |.|_rho: real absolute value at real places, *squared* complex
    // absolute value at complex places.
    double abs_rho(int rho) const {
        if (rho < (int)re.size()) return std::abs(re[rho]);
        return std::norm(cx[rho - (int)re.size()]);
    }
    int places() const { return (int)(re.size() + cx.size()); }
};

class NumberField {
  public:
    int degree = 0;
    int s = 0, t = 0;        // real embeddings / complex pairs, s + 2t = n
    int unit_rank = 0;       // s + t - 1
    IntPoly poly;            // monic defining polynomial
    Int poly_discriminant;   // disc of the defining polynomial
    bool monogenic_asserted = false;
    bool irreducibility_certified = false;   // full check only runs for n <= 3

    std::vector<double> real_roots;               // ascending
    std::vector<std::complex<double>> cx_roots;   // Im > 0, ordered by Re then Im

    // domain_basis[j] = iota(theta^j) expanded to R^n (complex -> two coords);
    // D_K is the parallelepiped spanned by these.
    std::vector<std::vector<double>> domain_basis;
    double domain_volume = 0;

    int embedding_count() const { return s + t; }

    FieldElement zero() const { return FieldElement{std::vector<Rat>((size_t)degree, Rat(0))}; }
    FieldElement one() const {
        FieldElement e = zero();
        e.coords[0] = 1;
        return e;
    }
    FieldElement from_coords(std::vector<Rat> c) const;
    FieldElement from_int_coords(const std::vector<long>& c) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inverse(const FieldElement& a) const;       // a != 0
    FieldElement mul_scalar(const FieldElement& a, const Rat& k) const;

    std::string element_str(const FieldElement& e, const std::string& var = "a") const;

    // Solve M t = x for the basis coordinates of an expanded point.
    std::vector<double> basis_coords(const std::vector<double>& x) const;
    std::vector<double> expand(const EmbeddingPoint& p) const;
    EmbeddingPoint from_expanded(const std::vector<double>& x) const;

  private:
    std::vector<std::vector<double>> basis_inv_;   // inverse of the basis matrix
    friend NumberField build_field(const NumberFieldSpec& spec);
};

NumberField build_field(const NumberFieldSpec& spec);

Rat norm_element(const NumberField& field, const FieldElement& e);
EmbeddingPoint embed(const NumberField& field, const FieldElement& e);

struct DomainReduction {
    EmbeddingPoint point;
    std::vector<long> lattice;   // subtracted lattice coordinates
};
DomainReduction reduce_to_domain(const NumberField& field, const EmbeddingPoint& p);

} // namespace nfv

#endif
