#ifndef NFV_PSI_HPP
#define NFV_PSI_HPP

#include <optional>
#include <string>
#include <vector>

#include "nfvaaler/ideal.hpp"
#include "nfvaaler/kernels.hpp"

namespace nfv {

// Per-embedding rule psi_rho(a) = c * Nm(a)^(-e).
struct PsiRule {
    double c = 0;
    double e = 0;
};

struct PsiOverride {
    Ideal ideal;
    std::vector<double> values;   // one per embedding
};

struct PsiSupport {
    bool all = true;
    double norm_min = 1;
    double norm_max = 0;   // ignored when all
};

// The approximation function system: one parametric rule per embedding,
// a finite override table, and an optional support window. Everything the
// main theorem's hypotheses need is decidable on this family.
struct PsiSystem {
    std::vector<PsiRule> rules;   // size s + t
    std::vector<PsiOverride> overrides;
    PsiSupport support;

    int places() const { return (int)rules.size(); }
};

PsiSystem make_power_psi(int places, double c, double e);

double psi_eval(const PsiSystem& sys, int rho, const Ideal& a);
double big_psi(const PsiSystem& sys, const Ideal& a);

// Exact value when the rule's exponent is an integer (overrides and dyadic
// coefficients are exact by construction); nullopt otherwise.
std::optional<Rat> psi_eval_exact(const PsiSystem& sys, int rho, const Ideal& a);
std::optional<Rat> big_psi_exact(const PsiSystem& sys, const Ideal& a);

struct BalanceReport {
    bool balanced = true;
    bool trivially = false;        // odd number of embeddings
    double max_ratio = 0;          // largest ratio seen (scan or constant)
    std::optional<Ideal> witness;
    std::optional<unsigned> worst_subset;   // bitmask over embeddings
    std::string detail;
};

BalanceReport balanced_check(const PsiSystem& sys, PrimeFactory& factory, double sample_norm_cap);

struct VaalerReport {
    bool satisfied = true;
    std::vector<bool> per_embedding;
    double max_scaled = 0;          // max of psi_rho(a) * Nm(a)^(2/(s+t)) over the scan
    std::optional<Ideal> witness;
};

// eq-style growth condition psi_rho(n) << Nm(n)^(-2/(s+t)).
VaalerReport vaaler_condition_check(const PsiSystem& sys, PrimeFactory& factory, double cap);

// sum over Nm(n) <= R of Phi(n) Psi(n)
double divergence_partial_sum(const PsiSystem& sys, PrimeFactory& factory, double R,
                              Exec mode = Exec::block_parallel);

} // namespace nfv

#endif
