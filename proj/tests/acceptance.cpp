// Acceptance suite: one PASS/FAIL line per criterion. Oracle-pinned
// regression values were produced by tools/oracle_pins.cpp and frozen here.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "nfvaaler/analytic.hpp"
#include "nfvaaler/config.hpp"
#include "nfvaaler/erdos_g.hpp"
#include "nfvaaler/factor_cache.hpp"
#include "nfvaaler/measure.hpp"
#include "nfvaaler/selberg.hpp"
#include "nfvaaler/table.hpp"

using namespace nfv;

namespace {

constexpr double kPiOver4 = 0.78539816339744830962;

// ---- frozen oracle pins (tools/oracle_pins.cpp) ----

// count_large_g(1e4, v) * v! / 1e4 for v = 2..5, fields Q, Q(i), Q(sqrt2)
constexpr double kFactorialDecayPin[3][4] = {
    {1.0816, 0.4974, 0.0024, 0.0120},
    {0.7906, 0.0270, 0.1080, 0.5400},
    {0.6244, 0.0000, 0.0000, 0.0000},
};
// max |mertens_log_sum residual| over X = 2^4..2^17
constexpr double kMertensResidualPin[3] = {1.32948504955, 1.45256137348, 1.74967200106};
// quasi-independence fixtures, Q(i), psi = Nm^-2/4
constexpr double kRatioPinR50 = 0.315163283239;
constexpr double kPairRatioPin30 = 1.27323954474;

struct Criterion {
    Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

    int id;
    std::string name;
    bool ok = true;
    bool expected_defect = false;
    std::vector<std::string> notes;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

struct NamedField {
    std::string name;
    NumberField field;
};

std::vector<NamedField> class_number_one_fields() {
    std::vector<NamedField> out;
    out.push_back({"Q", build_field({IntPoly{Int(0), Int(1)}, true})});
    out.push_back({"Q(i)", build_field({IntPoly{Int(1), Int(0), Int(1)}, true})});
    out.push_back({"Q(sqrt2)", build_field({IntPoly{Int(-2), Int(0), Int(1)}, true})});
    return out;
}

Ideal ideal_with_norm(PrimeFactory& factory, long norm, int index = 0) {
    auto ideals = enumerate_ideals(factory, (double)norm, false);
    int seen = 0;
    for (const auto& a : ideals)
        if (a.norm() == norm && seen++ == index) return a;
    throw error(errc::computation, "no such ideal in acceptance fixture");
}

double factorial(long v) {
    double f = 1;
    for (long i = 2; i <= v; ++i) f *= (double)i;
    return f;
}

// -------- criteria --------

Criterion criterion1() {
    Criterion c(1, "exact identities");
    int configs = 0;
    for (auto& [name, field] : class_number_one_fields()) {
        PrimeFactory factory(field);
        // moduli: first four composite-support ideals plus a prime
        std::vector<Ideal> moduli;
        for (const Ideal& n : enumerate_ideals(factory, 200, false)) {
            if (n.is_unit_ideal()) continue;
            if (n.factors().size() >= 2 && moduli.size() < 4) moduli.push_back(n);
        }
        moduli.push_back(ideal_with_norm(factory, field.degree == 1 ? 7 : (name == "Q(i)" ? 5 : 7)));
        for (const Ideal& n : moduli)
            for (long X : {1000L, 10000L}) {
                SieveContext ctx = build_sieve(field, n, Int(X));
                c.check(sigma1(ctx) * ctx.G == 1, name + ": sigma1 != 1/G");
                c.check(!ctx.weights.empty() && ctx.weights[0].first.is_unit_ideal() &&
                            ctx.weights[0].second == Rat(1),
                        name + ": lambda_1 != 1");
                for (const auto& [d, lambda] : ctx.weights)
                    c.check(abs(lambda) <= 1, name + ": |lambda_d| > 1");
                ++configs;
            }

        for (const Ideal& m : enumerate_ideals(factory, 500, false)) {
            Int phi_sum = 0;
            int mu_sum = 0;
            for (const Ideal& d : divisors_of(m)) {
                phi_sum += euler_phi(d);
                mu_sum += moebius(d);
            }
            c.check(phi_sum == ideal_norm(m), name + ": sum phi(d) != Nm");
            c.check(mu_sum == (m.is_unit_ideal() ? 1 : 0), name + ": moebius sum");
        }
    }
    c.check(configs >= 20, "fewer than 20 sieve configurations");
    c.note(std::to_string(configs) + " sieve configurations");
    return c;
}

Criterion criterion2() {
    Criterion c(2, "sieve validity");
    for (auto& [name, field] : class_number_one_fields()) {
        PrimeFactory factory(field);
        std::vector<Ideal> moduli;
        for (const Ideal& n : enumerate_ideals(factory, 60, false)) {
            if (n.is_unit_ideal()) continue;
            if (moduli.size() < 4) moduli.push_back(n);
        }
        for (const Ideal& n : moduli)
            for (long X : {1000L, 10000L}) {
                SieveContext ctx = build_sieve(field, n, Int(X));
                Rat bound = sieve_upper_bound(factory, ctx, Int(100000));
                Int exact = coprime_count_exact(factory, n, Int(X), Int(100000));
                c.check(Rat(exact) <= bound, name + ": exact count exceeds the sieve bound");
            }
    }
    {
        NumberField q = build_field({IntPoly{Int(0), Int(1)}, true});
        PrimeFactory fq(q);
        Ideal six = ideal_with_norm(fq, 6);
        c.check(coprime_count_exact(fq, six, Int(100), Int(100000)) == 33,
                "Q, n=(6), X=100: count != 33");
        // the full (1,-1,-1,1) table needs z > 6, i.e. the X = 10^4 level
        SieveContext ctx = build_sieve(q, six, Int(10000));
        bool table = ctx.weights.size() == 4 && ctx.weights[0].second == Rat(1) &&
                     ctx.weights[1].second == Rat(-1) && ctx.weights[2].second == Rat(-1) &&
                     ctx.weights[3].second == Rat(1);
        c.check(table, "Q, n=(6), X=10^4: weight table is not (1,-1,-1,1)");
    }
    return c;
}

Criterion criterion3() {
    Criterion c(3, "Dedekind and HNF consistency");
    auto fields = class_number_one_fields();
    fields.push_back({"Q(cbrt2)", build_field({IntPoly{Int(-2), Int(0), Int(0), Int(1)}, true})});
    for (auto& [name, field] : fields) {
        for (long p : rational_primes_up_to(1000)) {
            int sum = 0;
            for (const auto& q : factor_rational_prime(field, p)) sum += q.e * q.f;
            c.check(sum == field.degree, name + ": sum e_i f_i != n at p=" + std::to_string(p));
        }
        PrimeFactory factory(field);
        for (const Ideal& a : enumerate_ideals(factory, 200, false))
            c.check(hnf_det(a.hnf(field)) == a.norm(), name + ": |det hnf| != Nm");
    }
    return c;
}

Criterion criterion4() {
    Criterion c(4, "Mertens suite");
    NumberField q = build_field({IntPoly{Int(0), Int(1)}, true});
    MertensReport log_sum = mertens_log_sum(q, 1e5);
    c.check(std::abs(log_sum.residual) <= 2.0, "Q: |log-sum residual| > 2");
    MertensReport recip = mertens_recip_sum(q, 1e5);
    c.check(std::abs(*recip.b_k_estimate - 0.2615) <= 0.02, "Q: B_K estimate off");
    MertensReport prod = mertens_product(q, 1e5);
    c.check(std::abs(*prod.alpha_estimate - 1.0) <= 0.03, "Q: product/(e^gamma log X) off");

    NumberField qi = build_field({IntPoly{Int(1), Int(0), Int(1)}, true});
    PrimeFactory fqi(qi);
    double a1 = *mertens_product(qi, 1e4).alpha_estimate;
    double a2 = ideal_count_residue(fqi, 1e4).alpha_estimate;
    c.check(std::abs(a1 - kPiOver4) <= 0.05 * kPiOver4, "Q(i): product alpha off pi/4");
    c.check(std::abs(a2 - kPiOver4) <= 0.05 * kPiOver4, "Q(i): count alpha off pi/4");
    c.note("alpha estimates " + fmt_double(a1) + " / " + fmt_double(a2));

    // regression pins: max |log-sum residual| over dyadic X
    auto fields = class_number_one_fields();
    for (size_t i = 0; i < fields.size(); ++i) {
        double worst = 0;
        for (int k = 4; k <= 17; ++k)
            worst = std::max(worst,
                             std::abs(mertens_log_sum(fields[i].field, std::pow(2.0, k)).residual));
        c.check(worst <= kMertensResidualPin[i] + 1e-9,
                fields[i].name + ": residual above the frozen pin");
    }
    return c;
}

Criterion criterion5() {
    Criterion c(5, "g-function suite");
    auto fields = class_number_one_fields();
    for (size_t i = 0; i < fields.size(); ++i) {
        PrimeFactory factory(fields[i].field);
        for (const Ideal& n : enumerate_ideals(factory, 1000, false)) {
            GReport r = g_value(n);
            c.check(r.tail_sum < Rat(1, 2), fields[i].name + ": tail not below 1/2");
            if (r.g >= 2)
                c.check(g_tail(n, Int(r.g - 1)) >= Rat(1, 2),
                        fields[i].name + ": minimality witness fails");
            if (n.norm() <= 500)
                for (const Ideal& d : divisors_of(n))
                    c.check(g_value(d).g <= r.g, fields[i].name + ": divisor monotonicity");
        }
        for (long v = 2; v <= 5; ++v) {
            long count = count_large_g(factory, 1e4, v);
            double scaled = (double)count * factorial(v) / 1e4;
            c.check(scaled <= kFactorialDecayPin[i][v - 2] + 1e-9,
                    fields[i].name + ": factorial decay pin exceeded at v=" + std::to_string(v));
        }
    }
    NumberField q = build_field({IntPoly{Int(0), Int(1)}, true});
    PrimeFactory fq(q);
    c.check(divisor_g_sum(ideal_with_norm(fq, 12), 1) == Rat(1, 3), "divisor_g_sum != 1/3");
    c.check(banded_g_sum(fq, 1, 2, 10, 1e5) == Rat(248, 315), "banded_g_sum != 248/315");
    return c;
}

Criterion criterion6() {
    Criterion c(6, "measure suite");
    NumberField q = build_field({IntPoly{Int(0), Int(1)}, true});
    PrimeFactory fq(q);
    PsiSystem psi_q = make_power_psi(1, 0.25, 2.0);
    MeasureEstimate m5 = measure_of(q, build_approx_set(fq, psi_q, ideal_with_norm(fq, 5)),
                                    McParams{});
    c.check(m5.exact_value && *m5.exact_value == Rat(2, 25) && m5.value == 0.08,
            "Q: lambda(A_5) != 0.08 exactly");

    NumberField qi = build_field({IntPoly{Int(1), Int(0), Int(1)}, true});
    PrimeFactory fqi(qi);
    for (auto* fp : {&fq, &fqi}) {
        for (const Ideal& n : enumerate_ideals(*fp, 50, false)) {
            auto centers = approximant_centers(*fp, n);
            Int want = n.is_unit_ideal() ? Int(1) : euler_phi(n);
            c.check(Int((long)centers.size()) == want, "center count != Phi(n)");
        }
    }

    // Monte Carlo vs exact on five Q(i) instances at N = 10^6.
    PsiSystem psi_i = make_power_psi(1, 0.25, 2.0);
    for (long norm : {2L, 4L, 5L, 9L, 10L}) {
        Ideal n = ideal_with_norm(fqi, norm);
        ApproxSet set = build_approx_set(fqi, psi_i, n);
        MeasureEstimate exact = measure_of(qi, set, McParams{});
        McParams mc;
        mc.samples = 1000000;
        mc.seed = 2024;
        mc.force_monte_carlo = true;
        MeasureEstimate sampled = measure_of(qi, set, mc);
        c.check(std::abs(sampled.value - exact.value) <= 3 * sampled.stderr_value,
                "Q(i) Nm=" + std::to_string(norm) + ": MC disagrees with exact");
    }

    // Zero-overlap sub-check, spec-literal threshold 2^-(s+t). This is a
    // known paper/spec defect at complex places (see the decisions ledger):
    // the geometric guarantee costs 4, not 2, per complex place.
    int literal_failures = 0;
    int corrected_failures = 0;
    std::string first_witness;
    for (auto* fp : {&fq, &fqi}) {
        const NumberField& field = fp->field();
        PsiSystem sys = make_power_psi(field.embedding_count(), 0.25, 2.0);
        Rat literal = rat_pow(Rat(1, 2), field.embedding_count());
        Rat corrected = rat_pow(Rat(1, 2), field.s + 2 * field.t);
        auto ideals = enumerate_ideals(*fp, 30, false);
        for (const Ideal& m : ideals)
            for (const Ideal& n : ideals) {
                if (!(m < n)) continue;
                PairGeometry geo = pair_geometry(sys, m, n);
                if (!geo.D_exact || !(*geo.D_exact <= literal)) continue;
                ApproxSet am = build_approx_set(*fp, sys, m);
                ApproxSet an = build_approx_set(*fp, sys, n);
                MeasureEstimate lmn = measure_of(field, am, an, McParams{});
                if (lmn.value != 0.0) {
                    ++literal_failures;
                    if (first_witness.empty())
                        first_witness = "Nm " + m.norm().get_str() + " vs " + n.norm().get_str() +
                                        ", D=" + fmt_rat(*geo.D_exact) +
                                        ", overlap=" + fmt_double(lmn.value);
                    if (*geo.D_exact <= corrected) ++corrected_failures;
                }
            }
    }
    c.check(corrected_failures == 0, "corrected-threshold zero overlap violated");
    if (literal_failures > 0) {
        c.ok = false;
        c.expected_defect = true;
        c.note("zero-overlap at the paper threshold 2^-(s+t) fails on " +
               std::to_string(literal_failures) + " Q(i) pairs (first: " + first_witness +
               "); corrected threshold 2^-(s+2t) passes; see decisions ledger");
    }
    return c;
}

Criterion criterion7() {
    Criterion c(7, "quasi-independence probe");
    NumberField qi = build_field({IntPoly{Int(1), Int(0), Int(1)}, true});
    PrimeFactory fqi(qi);
    PsiSystem sys = make_power_psi(1, 0.25, 2.0);

    ExperimentReport rep = quasi_independence_experiment(fqi, sys, 50, McParams{});
    c.check(rep.ratio.has_value(), "ratio undefined");
    // exact path: stderr is zero, so the fixture must reproduce to rounding
    if (rep.ratio)
        c.check(std::abs(*rep.ratio - kRatioPinR50) <= 1e-9, "R=50 ratio off the frozen fixture");
    c.note("R=50 ratio " + fmt_double(rep.ratio ? *rep.ratio : -1));

    ExperimentReport r30 = quasi_independence_experiment(fqi, sys, 30, McParams{});
    double worst = 0;
    for (const auto& row : r30.rows)
        if (row.ratio) worst = std::max(worst, *row.ratio);
    c.check(worst <= kPairRatioPin30 + 1e-9, "per-pair ratio exceeds the frozen constant");
    c.note("max per-pair ratio " + fmt_double(worst));
    return c;
}

Criterion criterion8() {
    Criterion c(8, "determinism");
    const char* bin = std::getenv("NFVAALER_BIN");
    if (!bin || !*bin) {
        c.check(false, "NFVAALER_BIN not set (run through ctest)");
        return c;
    }
    char tmpl[] = "/tmp/nfv_acc_XXXXXX";
    char* dir_c = mkdtemp(tmpl);
    c.check(dir_c != nullptr, "mkdtemp failed");
    if (!dir_c) return c;
    std::string dir = dir_c;

    std::string config_qi = dir + "/q_i.json";
    {
        std::ofstream out(config_qi);
        out << R"({"poly": [1, 0, 1], "monogenic_asserted": true,
                   "psi": [{"embedding": 0, "c": 0.25, "e": 2.0}],
                   "mc_samples": 100000, "seed": 0})";
    }
    std::string config_s2 = dir + "/sqrt2.json";
    {
        std::ofstream out(config_s2);
        out << R"({"poly": [-2, 0, 1], "monogenic_asserted": true,
                   "psi": [{"embedding": 0, "c": 0.25, "e": 1.0},
                           {"embedding": 1, "c": 0.25, "e": 1.0}],
                   "mc_samples": 200000, "seed": 0})";
    }

    auto run = [&](const std::string& config, const std::string& args, const std::string& out) {
        std::string cmd = std::string(bin) + " " + args + " --config " + config + " > " + dir +
                          "/" + out + " 2>/dev/null";
        int rc = std::system(cmd.c_str());
        c.check(rc == 0, "CLI failed: " + args);
        std::ifstream in(dir + "/" + out);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };

    std::vector<std::pair<std::string, std::string>> jobs = {
        {config_qi, "field"},
        {config_qi, "ideals --max-norm 50"},
        {config_qi, "mertens --X 10000"},
        {config_qi, "gfun --max-norm 100"},
        {config_qi, "sieve --modulus-norm 10 --X 10000"},
        {config_qi, "measure --n-norm 5"},
        {config_qi, "overlap --m-norm 2 --n-norm 5"},
        {config_qi, "experiment --R 20"},
        {config_s2, "measure --n-norm 7"},   // Monte Carlo path
    };
    int idx = 0;
    for (auto& [config, args] : jobs) {
        std::string base = "job" + std::to_string(idx++);
        std::string first = run(config, args + " --workers 1", base + "_a.txt");
        std::string second = run(config, args + " --workers 4", base + "_b.txt");
        std::string third = run(config, args + " --workers 2", base + "_c.txt");
        c.check(!first.empty(), args + ": empty output");
        c.check(first == second && second == third, args + ": output differs across workers");
    }

    // cold vs warm factorization cache
    std::string cache_arg = " --set cache_path=" + dir + "/cache.txt";
    std::string cold = run(config_qi, "ideals --max-norm 200" + cache_arg, "cache_a.txt");
    std::string warm = run(config_qi, "ideals --max-norm 200" + cache_arg, "cache_b.txt");
    std::string plain = run(config_qi, "ideals --max-norm 200", "cache_c.txt");
    c.check(cold == warm && warm == plain, "cache changes the output");
    return c;
}

} // namespace

int main() {
    std::vector<Criterion> results;
    std::vector<std::function<Criterion()>> criteria = {
        criterion1, criterion2, criterion3, criterion4,
        criterion5, criterion6, criterion7, criterion8,
    };
    for (auto& fn : criteria) {
        try {
            results.push_back(fn());
        } catch (const std::exception& e) {
            Criterion c((int)results.size() + 1, "exception");
            c.check(false, e.what());
            results.push_back(c);
        }
    }

    int failed = 0;
    for (const Criterion& c : results) {
        std::string status = c.ok ? "PASS" : (c.expected_defect ? "FAIL (documented defect)" : "FAIL");
        printf("CRITERION %d [%s]: %s", c.id, c.name.c_str(), status.c_str());
        if (!c.notes.empty()) {
            printf(" — ");
            for (size_t i = 0; i < c.notes.size() && i < 4; ++i)
                printf("%s%s", i ? "; " : "", c.notes[i].c_str());
            if (c.notes.size() > 4) printf("; … %zu more", c.notes.size() - 4);
        }
        printf("\n");
        if (!c.ok) ++failed;
    }
    printf("%d/%zu criteria pass\n", (int)results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
}
