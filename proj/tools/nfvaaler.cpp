#include <iostream>
#include <memory>
#include <optional>

#include <omp.h>

#include "CLI11.hpp"
#include "nfvaaler/analytic.hpp"
#include "nfvaaler/config.hpp"
#include "nfvaaler/erdos_g.hpp"
#include "nfvaaler/errors.hpp"
#include "nfvaaler/factor_cache.hpp"
#include "nfvaaler/measure.hpp"
#include "nfvaaler/selberg.hpp"
#include "nfvaaler/table.hpp"

using namespace nfv;

namespace {

struct App {
    RunConfig cfg;
    NumberField field;
    std::unique_ptr<PrimeFactory> factory;
    std::unique_ptr<ScopedFactorCache> cache;

    explicit App(const RunConfig& config) : cfg(config), field(build_field(config.field_spec)) {
        factory = std::make_unique<PrimeFactory>(field);
        if (!cfg.cache_path.empty())
            cache = std::make_unique<ScopedFactorCache>(*factory, cfg.cache_path);
    }

    McParams mc() const { return McParams{cfg.mc_samples, cfg.seed, Exec::block_parallel}; }

    Ideal ideal_at(long norm, int index) const {
        if (norm > cfg.enumeration_cap) fail(errc::cap_exceeded, "norm exceeds enumeration_cap");
        auto ideals = enumerate_ideals(*factory, (double)norm, false);
        int seen = 0;
        for (const auto& a : ideals)
            if (a.norm() == norm && seen++ == index) return a;
        fail(errc::config_invalid, "no ideal with norm " + std::to_string(norm) + ", index " +
                                       std::to_string(index));
    }

    void check_cap(double x, const char* what) const {
        if (x > (double)cfg.enumeration_cap)
            fail(errc::cap_exceeded, std::string(what) + " exceeds enumeration_cap");
    }
};

std::string measure_cell(const MeasureEstimate& m) {
    return m.exact_value ? fmt_rat(*m.exact_value) : std::string{};
}

const char* method_name(MeasureMethod m) {
    return m == MeasureMethod::exact ? "exact" : "monte_carlo";
}

void run_field(const App& app) {
    const NumberField& f = app.field;
    std::ostringstream os;
    os << "{\"n\":" << f.degree << ",\"s\":" << f.s << ",\"t\":" << f.t
       << ",\"ell\":" << f.unit_rank << ",\"poly_discriminant\":\""
       << f.poly_discriminant.get_str() << "\",\"domain_volume\":" << fmt_double(f.domain_volume)
       << ",\"monogenic_asserted\":" << (f.monogenic_asserted ? "true" : "false")
       << ",\"irreducibility_certified\":" << (f.irreducibility_certified ? "true" : "false");
    if (!f.irreducibility_certified)
        os << ",\"note\":\"degree >= 4: irreducibility is trusted from the user assertion "
              "(squarefree and rational-root checks passed)\"";
    os << "}";
    std::cout << os.str() << "\n";
}

void run_ideals(App& app, double max_norm, bool primes_only) {
    app.check_cap(max_norm, "--max-norm");
    Table t({"norm", "index", "ideal", "phi", "mu"});
    Int last_norm(-1);
    int index = 0;
    for (const Ideal& a : enumerate_ideals(*app.factory, max_norm, primes_only)) {
        index = a.norm() == last_norm ? index + 1 : 0;
        last_norm = a.norm();
        t.add_row({a.norm().get_str(), std::to_string(index), ideal_str(*app.factory, a),
                   euler_phi(a).get_str(), std::to_string(moebius(a))});
    }
    t.write(std::cout, app.cfg.output);
}

void run_primes(App& app, double max_norm) {
    app.check_cap(max_norm, "--max-norm");
    Table t({"p", "index", "e", "f", "norm", "local_factor"});
    for (const PrimeIdeal& q : prime_ideals_up_to(*app.factory, rat_floor(rat_of_double(max_norm)))) {
        std::string coeffs;
        for (size_t i = 0; i < q.local_factor.size(); ++i)
            coeffs += (i ? "," : "") + std::to_string(q.local_factor[i]);
        t.add_row({std::to_string(q.p), std::to_string(q.index), std::to_string(q.e),
                   std::to_string(q.f), q.norm().get_str(), coeffs});
    }
    t.write(std::cout, app.cfg.output);
}

void run_mertens(App& app, double X) {
    Table t({"report", "X", "value", "model", "residual", "estimate"});
    MertensReport log_sum = mertens_log_sum(app.field, X);
    t.add_row({"log_sum", fmt_double(X), fmt_double(log_sum.value), fmt_double(log_sum.model),
               fmt_double(log_sum.residual), ""});
    MertensReport recip = mertens_recip_sum(app.field, X);
    t.add_row({"recip_sum", fmt_double(X), fmt_double(recip.value), fmt_double(recip.model),
               fmt_double(recip.residual), fmt_double(*recip.b_k_estimate)});
    MertensReport prod = mertens_product(app.field, X);
    t.add_row({"product", fmt_double(X), fmt_double(prod.value), fmt_double(prod.model),
               fmt_double(prod.residual), fmt_double(*prod.alpha_estimate)});
    app.check_cap(X, "--X (ideal count)");
    IdealCountReport count = ideal_count_residue(*app.factory, X);
    t.add_row({"ideal_count", fmt_double(X), count.count.get_str(), "", "",
               fmt_double(count.alpha_estimate)});
    t.write(std::cout, app.cfg.output);
}

void run_gfun_table(App& app, double max_norm) {
    app.check_cap(max_norm, "--max-norm");
    Table t({"norm", "index", "ideal", "g", "tail_sum"});
    Int last_norm(-1);
    int index = 0;
    for (const Ideal& a : enumerate_ideals(*app.factory, max_norm, false)) {
        index = a.norm() == last_norm ? index + 1 : 0;
        last_norm = a.norm();
        GReport r = g_value(a);
        t.add_row({a.norm().get_str(), std::to_string(index), ideal_str(*app.factory, a),
                   std::to_string(r.g), fmt_rat(r.tail_sum)});
    }
    t.write(std::cout, app.cfg.output);
}

void run_gfun_counts(App& app, double X, long v_max) {
    app.check_cap(X, "--count-x");
    Table t({"v", "count"});
    for (long v = 1; v <= v_max; ++v)
        t.add_row({std::to_string(v), std::to_string(count_large_g(*app.factory, X, v))});
    t.write(std::cout, app.cfg.output);
}

void run_gfun_band(App& app, long T, double lo, double hi) {
    Table t({"T", "X", "Y", "band_sum"});
    Rat sum = banded_g_sum(*app.factory, T, lo, hi, (double)app.cfg.enumeration_cap);
    t.add_row({std::to_string(T), fmt_double(lo), fmt_double(hi), fmt_rat(sum)});
    t.write(std::cout, app.cfg.output);
}

void run_gfun_divisor(App& app, long q_norm, int q_index, long v) {
    Ideal q = app.ideal_at(q_norm, q_index);
    Table t({"q", "v", "divisor_g_sum"});
    t.add_row({ideal_str(*app.factory, q), std::to_string(v), fmt_rat(divisor_g_sum(q, v))});
    t.write(std::cout, app.cfg.output);
}

void run_sieve(App& app, long modulus_norm, int modulus_index, long X) {
    Ideal n = app.ideal_at(modulus_norm, modulus_index);
    SieveContext ctx = build_sieve(app.field, n, Int(X));

    Table weights({"d_norm", "d_index", "d", "lambda"});
    Int last_norm(-1);
    int index = 0;
    for (const auto& [d, lambda] : ctx.weights) {
        index = d.norm() == last_norm ? index + 1 : 0;
        last_norm = d.norm();
        weights.add_row({d.norm().get_str(), std::to_string(index), ideal_str(*app.factory, d),
                         fmt_rat(lambda)});
    }
    weights.write(std::cout, app.cfg.output);
    std::cout << "\n";

    app.check_cap((double)X, "--X");
    Rat s1 = sigma1(ctx);
    Rat bound = sieve_upper_bound(*app.factory, ctx, Int(app.cfg.enumeration_cap));
    Int exact = coprime_count_exact(*app.factory, n, Int(X), Int(app.cfg.enumeration_cap));
    Table summary({"metric", "value"});
    summary.add_row({"modulus", ideal_str(*app.factory, n)});
    summary.add_row({"X", std::to_string(X)});
    summary.add_row({"G", fmt_rat(ctx.G)});
    summary.add_row({"sigma1", fmt_rat(s1)});
    summary.add_row({"upper_bound", fmt_rat(bound)});
    summary.add_row({"exact_count", exact.get_str()});
    summary.add_row({"count_over_bound", fmt_double(to_double(Rat(exact)) / to_double(bound))});
    summary.write(std::cout, app.cfg.output);
}

void run_psi(App& app, double cap) {
    app.check_cap(cap, "--cap");
    PsiSystem sys = build_psi(app.cfg, *app.factory);
    BalanceReport bal = balanced_check(sys, *app.factory, cap);
    VaalerReport va = vaaler_condition_check(sys, *app.factory, cap);
    double div = divergence_partial_sum(sys, *app.factory, cap);

    Table t({"metric", "value"});
    t.add_row({"balanced", bal.balanced ? "true" : "false"});
    t.add_row({"trivially_balanced", bal.trivially ? "true" : "false"});
    t.add_row({"balance_detail", bal.detail});
    t.add_row({"balance_max_ratio", fmt_double(bal.max_ratio)});
    t.add_row({"balance_witness",
               bal.witness ? ideal_str(*app.factory, *bal.witness) : std::string{}});
    t.add_row({"vaaler_satisfied", va.satisfied ? "true" : "false"});
    for (size_t i = 0; i < va.per_embedding.size(); ++i)
        t.add_row({"vaaler_ok_embedding_" + std::to_string(i),
                   va.per_embedding[i] ? "true" : "false"});
    t.add_row({"vaaler_max_scaled", fmt_double(va.max_scaled)});
    t.add_row({"vaaler_witness",
               va.witness ? ideal_str(*app.factory, *va.witness) : std::string{}});
    t.add_row({"divergence_partial_sum", fmt_double(div)});
    t.add_row({"scan_cap", fmt_double(cap)});
    t.write(std::cout, app.cfg.output);
}

void run_measure(App& app, long norm, int index) {
    PsiSystem sys = build_psi(app.cfg, *app.factory);
    Ideal n = app.ideal_at(norm, index);
    ApproxSet set = build_approx_set(*app.factory, sys, n);
    MeasureEstimate m = measure_of(app.field, set, app.mc());
    Table t({"Nm_n", "index", "ideal", "lambda", "method", "stderr", "samples", "seed", "exact"});
    t.add_row({n.norm().get_str(), std::to_string(index), ideal_str(*app.factory, n),
               fmt_double(m.value), method_name(m.method), fmt_double(m.stderr_value),
               std::to_string(m.samples), std::to_string(m.seed), measure_cell(m)});
    t.write(std::cout, app.cfg.output);
}

std::vector<std::string> overlap_columns() {
    return {"Nm_m", "Nm_n", "lambda_m", "lambda_n", "lambda_mn", "D",
            "P",    "tau",  "regime",   "ratio",    "method",    "stderr"};
}

std::vector<std::string> overlap_row(const Ideal& m, const Ideal& n, const MeasureEstimate& lm,
                                     const MeasureEstimate& ln, const MeasureEstimate& lmn,
                                     double D, double P, long tau, OverlapRegime regime,
                                     const std::optional<double>& ratio) {
    return {m.norm().get_str(),  n.norm().get_str(),  fmt_double(lm.value),
            fmt_double(ln.value), fmt_double(lmn.value), fmt_double(D),
            fmt_double(P),        std::to_string(tau),   regime_name(regime),
            ratio ? fmt_double(*ratio) : std::string{},  method_name(lmn.method),
            fmt_double(lmn.stderr_value)};
}

void run_overlap(App& app, long m_norm, int m_index, long n_norm, int n_index) {
    PsiSystem sys = build_psi(app.cfg, *app.factory);
    Ideal m = app.ideal_at(m_norm, m_index);
    Ideal n = app.ideal_at(n_norm, n_index);
    OverlapReport rep = overlap_report(*app.factory, sys, m, n, app.mc());
    Table t(overlap_columns());
    t.add_row(overlap_row(m, n, rep.lambda_m, rep.lambda_n, rep.lambda_mn, rep.geometry.D,
                          rep.geometry.P, rep.geometry.tau, rep.regime, rep.ratio));
    t.write(std::cout, app.cfg.output);
}

void run_experiment(App& app, double R) {
    app.check_cap(R, "--R");
    PsiSystem sys = build_psi(app.cfg, *app.factory);
    ExperimentReport rep = quasi_independence_experiment(*app.factory, sys, R, app.mc());

    Table t(overlap_columns());
    for (const PairTraceRow& row : rep.rows)
        t.add_row(overlap_row(row.m, row.n, row.lambda_m, row.lambda_n, row.lambda_mn, row.D,
                              row.P, row.tau, row.regime, row.ratio));
    t.write(std::cout, app.cfg.output);
    std::cout << "\n";

    Table summary({"metric", "value"});
    summary.add_row({"R", fmt_double(R)});
    summary.add_row({"pair_sum", fmt_double(rep.pair_sum)});
    summary.add_row({"single_sum", fmt_double(rep.single_sum)});
    summary.add_row({"ratio", rep.ratio ? fmt_double(*rep.ratio) : std::string{}});
    summary.write(std::cout, app.cfg.output);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App cli{"exact ideal arithmetic, sieves and approximation-set measures in number fields"};
    cli.require_subcommand(1);
    cli.fallthrough();

    std::string config_path;
    std::vector<std::string> sets;
    int workers = 0;
    cli.add_option("--config", config_path, "JSON configuration file")->required();
    cli.add_option("--set", sets, "override a config key, key=value");
    cli.add_option("--workers", workers, "OpenMP worker count (0 = runtime default)");

    auto* c_field = cli.add_subcommand("field", "signature report for the configured field");

    double max_norm = 100;
    auto* c_ideals = cli.add_subcommand("ideals", "ideal enumeration table");
    c_ideals->add_option("--max-norm", max_norm, "largest norm to enumerate");
    auto* c_primes = cli.add_subcommand("primes", "prime ideal table");
    c_primes->add_option("--max-norm", max_norm, "largest norm to enumerate");

    double mertens_x = 10000;
    auto* c_mertens = cli.add_subcommand("mertens", "Mertens-type sum reports");
    c_mertens->add_option("--X", mertens_x, "threshold");

    auto* c_gfun = cli.add_subcommand("gfun", "Erdos g-function tables");
    double g_max_norm = 100, band_lo = 0, band_hi = 0, count_x = 0;
    long band_t = 0, v_max = 5, q_norm = 0, divisor_v = 1;
    int q_index = 0;
    c_gfun->add_option("--max-norm", g_max_norm, "g table up to this norm");
    c_gfun->add_option("--count-x", count_x, "count ideals with g >= v up to this bound");
    c_gfun->add_option("--v-max", v_max, "largest v for the count table");
    c_gfun->add_option("--band-t", band_t, "band sum: required g value");
    c_gfun->add_option("--band-lo", band_lo, "band sum: lower norm bound (exclusive)");
    c_gfun->add_option("--band-hi", band_hi, "band sum: upper norm bound (exclusive)");
    c_gfun->add_option("--q-norm", q_norm, "divisor sum: modulus norm");
    c_gfun->add_option("--q-index", q_index, "divisor sum: modulus index within norm");
    c_gfun->add_option("--v", divisor_v, "divisor sum: threshold v");

    auto* c_sieve = cli.add_subcommand("sieve", "Selberg sieve context and bounds");
    long modulus_norm = 6, sieve_x = 10000;
    int modulus_index = 0;
    c_sieve->add_option("--modulus-norm", modulus_norm, "sifting modulus norm")->required();
    c_sieve->add_option("--modulus-index", modulus_index, "modulus index within norm");
    c_sieve->add_option("--X", sieve_x, "sieve level")->required();

    auto* c_psi = cli.add_subcommand("psi", "balance/growth verdicts and divergence sums");
    double psi_cap = 100;
    c_psi->add_option("--cap", psi_cap, "scan cap");

    auto* c_measure = cli.add_subcommand("measure", "lambda(A_n)");
    long m_norm = 0, n_norm = 0;
    int m_index = 0, n_index = 0;
    c_measure->add_option("--n-norm", n_norm, "denominator ideal norm")->required();
    c_measure->add_option("--n-index", n_index, "index within norm");

    auto* c_overlap = cli.add_subcommand("overlap", "pair overlap report");
    c_overlap->add_option("--m-norm", m_norm, "first ideal norm")->required();
    c_overlap->add_option("--m-index", m_index, "first ideal index");
    c_overlap->add_option("--n-norm", n_norm, "second ideal norm")->required();
    c_overlap->add_option("--n-index", n_index, "second ideal index");

    auto* c_experiment = cli.add_subcommand("experiment", "quasi-independence sweep");
    double exp_r = 20;
    c_experiment->add_option("--R", exp_r, "norm bound for the sweep")->required();

    CLI11_PARSE(cli, argc, argv);

    try {
        if (workers > 0) omp_set_num_threads(workers);
        RunConfig cfg = load_config(config_path, sets, std::getenv("NFVAALER_CACHE"));
        App app(cfg);

        if (*c_field) run_field(app);
        if (*c_ideals) run_ideals(app, max_norm, false);
        if (*c_primes) run_primes(app, max_norm);
        if (*c_mertens) run_mertens(app, mertens_x);
        if (*c_gfun) {
            if (count_x > 0)
                run_gfun_counts(app, count_x, v_max);
            else if (band_t > 0)
                run_gfun_band(app, band_t, band_lo, band_hi);
            else if (q_norm > 0)
                run_gfun_divisor(app, q_norm, q_index, divisor_v);
            else
                run_gfun_table(app, g_max_norm);
        }
        if (*c_sieve) run_sieve(app, modulus_norm, modulus_index, sieve_x);
        if (*c_psi) run_psi(app, psi_cap);
        if (*c_measure) run_measure(app, n_norm, n_index);
        if (*c_overlap) run_overlap(app, m_norm, m_index, n_norm, n_index);
        if (*c_experiment) run_experiment(app, exp_r);
        return 0;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
