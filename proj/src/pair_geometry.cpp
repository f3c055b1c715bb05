#include "nfvaaler/pair_geometry.hpp"

#include <algorithm>
#include <map>

#include "nfvaaler/erdos_g.hpp"
#include "nfvaaler/errors.hpp"

namespace nfv {

namespace {
constexpr double kGuardBand = 1e-12;
}

PairGeometry pair_geometry(const PsiSystem& sys, const Ideal& m, const Ideal& n) {
    if (m == n) fail(errc::equal_ideals, "pair geometry needs distinct ideals");

    PairGeometry geo;
    geo.m = m;
    geo.n = n;

    std::map<PrimeIdeal, std::pair<int, int>> exponents;
    for (const auto& [q, k] : m.factors()) exponents[q].first = k;
    for (const auto& [q, k] : n.factors()) exponents[q].second = k;

    Ideal::Factors lf, mf, nf, gf;
    for (const auto& [q, uv] : exponents) {
        auto [u, v] = uv;
        if (u == v) {
            lf.emplace_back(q, u);
            gf.emplace_back(q, u);
        } else {
            int lo = std::min(u, v), hi = std::max(u, v);
            if (lo > 0) {
                mf.emplace_back(q, lo);
                gf.emplace_back(q, lo);
            }
            nf.emplace_back(q, hi);
        }
    }
    geo.L = Ideal(std::move(lf));
    geo.M = Ideal(std::move(mf));
    geo.N = Ideal(std::move(nf));
    geo.gcd = Ideal(std::move(gf));

    // D = Nm(mn/(m,n)) prod max{psi_rho(m), psi_rho(n)} = Nm(L N) prod ...
    Int norm_ln = ideal_mul(geo.L, geo.N).norm();
    geo.D = to_double(norm_ln);
    bool exact = true;
    Rat d_exact(norm_ln);
    for (int rho = 0; rho < sys.places(); ++rho) {
        double pm = psi_eval(sys, rho, m), pn = psi_eval(sys, rho, n);
        geo.D *= std::max(pm, pn);
        if (exact) {
            auto em = psi_eval_exact(sys, rho, m), en = psi_eval_exact(sys, rho, n);
            if (em && en)
                d_exact *= std::max(*em, *en);
            else
                exact = false;
        }
    }
    if (exact) {
        geo.D_exact = d_exact;
        geo.D = to_double(d_exact);
    }

    geo.P = 1;
    for (const auto& [q, k] : geo.N.factors()) {
        Int nq = q.norm();
        bool above;
        if (geo.D_exact)
            above = Rat(nq) > *geo.D_exact;
        else {
            double nqd = to_double(nq);
            if (std::abs(nqd - geo.D) <= kGuardBand * std::max(1.0, geo.D))
                geo.boundary_flagged = true;
            above = nqd > geo.D;
        }
        if (above) geo.P /= 1.0 - 1.0 / to_double(nq);
    }

    geo.tau = std::max(g_value(ideal_div(m, geo.gcd)).g, g_value(ideal_div(n, geo.gcd)).g);
    return geo;
}

OverlapRegime classify_regime(const PairGeometry& geo, int places) {
    if (geo.D_exact) {
        Rat threshold = rat_pow(Rat(1, 2), places);
        if (*geo.D_exact <= threshold) return OverlapRegime::zero;
        if (*geo.D_exact < geo.tau) return OverlapRegime::log_bound;
        return OverlapRegime::flat;
    }
    double threshold = std::pow(0.5, places);
    if (geo.D <= threshold + kGuardBand) return OverlapRegime::zero;
    if (geo.D < (double)geo.tau) return OverlapRegime::log_bound;
    return OverlapRegime::flat;
}

const char* regime_name(OverlapRegime r) {
    switch (r) {
        case OverlapRegime::zero: return "zero";
        case OverlapRegime::log_bound: return "log";
        default: return "flat";
    }
}

} // namespace nfv
