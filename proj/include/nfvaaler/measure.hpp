#ifndef NFV_MEASURE_HPP
#define NFV_MEASURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nfvaaler/pair_geometry.hpp"
#include "nfvaaler/psi.hpp"

namespace nfv {

// Box around iota(gamma): per real embedding a half-width of psi_rho, per
// complex embedding a disc with radius^2 = psi_rho (|.|_C is the squared
// absolute value).
struct ApproxBox {
    EmbeddingPoint center;
    std::vector<double> bound;   // half-width (real) / radius^2 (complex)
};

struct ApproxSet {
    Ideal n;
    std::vector<FractionalElement> center_classes;   // Phi(n) representatives
    std::vector<ApproxBox> boxes;                    // includes lattice translates
    std::vector<double> psi;                         // per-place psi(n)
    std::vector<std::optional<Rat>> psi_exact;
};

enum class MeasureMethod { exact, monte_carlo };

struct MeasureEstimate {
    double value = 0;
    MeasureMethod method = MeasureMethod::exact;
    double stderr_value = 0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    std::optional<Rat> exact_value;   // set when the sweep ran in rationals
};

struct McParams {
    uint64_t samples = 100000;
    uint64_t seed = 0;
    Exec mode = Exec::block_parallel;
    bool force_monte_carlo = false;   // skip the exact paths (cross-checks)
};

// The Phi(n) residue classes alpha/beta with (beta) = n; requires a
// principal modulus (class number 1 at desk scale).
std::vector<FractionalElement> approximant_centers(PrimeFactory& factory, const Ideal& n);

ApproxSet build_approx_set(PrimeFactory& factory, const PsiSystem& sys, const Ideal& n);

MeasureEstimate measure_of(const NumberField& field, const ApproxSet& a, const McParams& params);
MeasureEstimate measure_of(const NumberField& field, const ApproxSet& a, const ApproxSet& b,
                           const McParams& params);

struct OverlapReport {
    MeasureEstimate lambda_m, lambda_n, lambda_mn;
    PairGeometry geometry;
    OverlapRegime regime = OverlapRegime::flat;
    std::optional<double> ratio;   // lambda_mn / (P lambda_m lambda_n)
};

OverlapReport overlap_report(PrimeFactory& factory, const PsiSystem& sys, const Ideal& m,
                             const Ideal& n, const McParams& params);

// Brute-force count of center pairs (beta, gamma) with every
// |rho(beta - gamma - lambda)| < Delta_rho, lattice translates lambda
// ranging over the box that the bounds allow.
long pair_count_oracle(PrimeFactory& factory, const Ideal& m, const Ideal& n,
                       const std::vector<double>& deltas);

struct PairTraceRow {
    Ideal m, n;
    MeasureEstimate lambda_m, lambda_n, lambda_mn;
    double D = 0, P = 1;
    long tau = 1;
    OverlapRegime regime = OverlapRegime::flat;
    std::optional<double> ratio;
};

struct ExperimentReport {
    double pair_sum = 0;
    double single_sum = 0;
    std::optional<double> ratio;   // pair_sum / single_sum^2
    std::vector<PairTraceRow> rows;
};

// Second-moment probe over Nm(m) < Nm(n) <= R.
ExperimentReport quasi_independence_experiment(PrimeFactory& factory, const PsiSystem& sys,
                                               double R, const McParams& params);

// Deterministic Monte Carlo stream id for an unordered pair of ideals.
uint64_t pair_stream(const Ideal& a, const Ideal& b);
uint64_t ideal_stream(const Ideal& a);

} // namespace nfv

#endif
