#include "nfvaaler/psi.hpp"

#include <cmath>

#include "nfvaaler/errors.hpp"

namespace nfv {

namespace {

bool in_support(const PsiSystem& sys, const Ideal& a) {
    if (sys.support.all) return true;
    double nm = to_double(a.norm());
    return nm >= sys.support.norm_min && nm <= sys.support.norm_max;
}

const PsiOverride* find_override(const PsiSystem& sys, const Ideal& a) {
    for (const auto& o : sys.overrides)
        if (o.ideal == a) return &o;
    return nullptr;
}

bool integer_exponent(double e, long& out) {
    if (!(std::abs(e) <= 60) || e != std::floor(e)) return false;
    out = (long)e;
    return true;
}

} // namespace

PsiSystem make_power_psi(int places, double c, double e) {
    PsiSystem sys;
    sys.rules.assign((size_t)places, PsiRule{c, e});
    return sys;
}

double psi_eval(const PsiSystem& sys, int rho, const Ideal& a) {
    if (rho < 0 || rho >= sys.places()) fail(errc::config_invalid, "embedding index out of range");
    if (!in_support(sys, a)) return 0;
    if (const PsiOverride* o = find_override(sys, a)) return o->values[(size_t)rho];
    const PsiRule& r = sys.rules[(size_t)rho];
    if (r.c == 0) return 0;
    return r.c * std::pow(to_double(a.norm()), -r.e);
}

double big_psi(const PsiSystem& sys, const Ideal& a) {
    double prod = 1;
    for (int rho = 0; rho < sys.places(); ++rho) prod *= psi_eval(sys, rho, a);
    return prod;
}

std::optional<Rat> psi_eval_exact(const PsiSystem& sys, int rho, const Ideal& a) {
    if (rho < 0 || rho >= sys.places()) fail(errc::config_invalid, "embedding index out of range");
    if (!in_support(sys, a)) return Rat(0);
    if (const PsiOverride* o = find_override(sys, a)) return rat_of_double(o->values[(size_t)rho]);
    const PsiRule& r = sys.rules[(size_t)rho];
    if (r.c == 0) return Rat(0);
    long e = 0;
    if (!integer_exponent(r.e, e)) return std::nullopt;
    return rat_of_double(r.c) * rat_pow(Rat(a.norm()), -e);
}

std::optional<Rat> big_psi_exact(const PsiSystem& sys, const Ideal& a) {
    Rat prod = 1;
    for (int rho = 0; rho < sys.places(); ++rho) {
        auto v = psi_eval_exact(sys, rho, a);
        if (!v) return std::nullopt;
        prod *= *v;
    }
    return prod;
}

BalanceReport balanced_check(const PsiSystem& sys, PrimeFactory& factory, double sample_norm_cap) {
    BalanceReport report;
    int k = sys.places();
    if (k % 2 == 1) {
        report.trivially = true;
        report.detail = "odd number of embeddings";
        return report;
    }

    // Parametric verdict: the ratio for a half subset S scales like
    // C * Nm^(sum_e(complement) - sum_e(S)), so boundedness needs the
    // exponent sums to match unless the numerator vanishes identically.
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        if (__builtin_popcount(mask) * 2 != k) continue;
        double e_in = 0, e_out = 0;
        bool zero_in = false, zero_out = false;
        for (int rho = 0; rho < k; ++rho) {
            if (mask & (1u << rho)) {
                e_in += sys.rules[(size_t)rho].e;
                zero_in |= sys.rules[(size_t)rho].c == 0;
            } else {
                e_out += sys.rules[(size_t)rho].e;
                zero_out |= sys.rules[(size_t)rho].c == 0;
            }
        }
        if (zero_in) continue;   // ratio identically zero
        bool bad = zero_out || e_out > e_in;
        if (bad && report.balanced) {
            report.balanced = false;
            report.worst_subset = mask;
            report.detail = zero_out ? "denominator rule vanishes identically"
                                     : "exponent sums differ; ratio grows with the norm";
        }
    }

    // Scan for the observed extreme ratio and its witness.
    if (sample_norm_cap >= 1) {
        for (const Ideal& a : enumerate_ideals(factory, sample_norm_cap, false)) {
            for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
                if (__builtin_popcount(mask) * 2 != k) continue;
                double num = 1, den = 1;
                for (int rho = 0; rho < k; ++rho) {
                    double v = psi_eval(sys, rho, a);
                    if (mask & (1u << rho))
                        num *= v;
                    else
                        den *= v;
                }
                if (den == 0) continue;
                double ratio = num / den;
                if (ratio > report.max_ratio) {
                    report.max_ratio = ratio;
                    report.witness = a;
                    if (!report.balanced && !report.worst_subset) report.worst_subset = mask;
                }
            }
        }
    }
    return report;
}

VaalerReport vaaler_condition_check(const PsiSystem& sys, PrimeFactory& factory, double cap) {
    VaalerReport report;
    int k = sys.places();
    Rat threshold(2, k);   // exponent bound 2/(s+t)
    report.per_embedding.assign((size_t)k, true);
    for (int rho = 0; rho < k; ++rho) {
        const PsiRule& r = sys.rules[(size_t)rho];
        if (r.c == 0) continue;
        if (rat_of_double(r.e) < threshold) report.per_embedding[(size_t)rho] = false;
    }
    for (bool ok : report.per_embedding) report.satisfied &= ok;

    if (cap >= 1) {
        double exponent = 2.0 / k;
        for (const Ideal& a : enumerate_ideals(factory, cap, false)) {
            double scale = std::pow(to_double(a.norm()), exponent);
            for (int rho = 0; rho < k; ++rho) {
                double v = psi_eval(sys, rho, a) * scale;
                if (v > report.max_scaled) {
                    report.max_scaled = v;
                    report.witness = a;
                }
            }
        }
    }
    return report;
}

double divergence_partial_sum(const PsiSystem& sys, PrimeFactory& factory, double R, Exec mode) {
    auto ideals = enumerate_ideals(factory, std::max(1.0, R), false);
    return kernels::block_sum_double(ideals.size(), mode, [&](size_t i) {
        return to_double(euler_phi(ideals[i])) * big_psi(sys, ideals[i]);
    });
}

} // namespace nfv
