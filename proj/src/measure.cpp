#include "nfvaaler/measure.hpp"

#include <algorithm>
#include <cmath>

#include "nfvaaler/erdos_g.hpp"
#include "nfvaaler/errors.hpp"
#include "nfvaaler/exact2d.hpp"
#include "nfvaaler/rng.hpp"

namespace nfv {

namespace {

enum class ExactKind { none, dim1, rect2d };

// Exact paths: interval sweep on the line, disc arrangement on an
// axis-aligned rectangular domain (one complex place, Re(theta) = 0).
ExactKind exact_kind(const NumberField& field) {
    if (field.degree == 1) return ExactKind::dim1;
    if (field.degree == 2 && field.t == 1 && std::abs(field.domain_basis[1][0]) <= 1e-9 &&
        std::abs(field.domain_basis[0][1]) <= 1e-9)
        return ExactKind::rect2d;
    return ExactKind::none;
}

double inv_infinity_norm(const NumberField& field) {
    // max row sum of the inverse basis matrix, assembled column by column
    int n = field.degree;
    std::vector<double> row_sums((size_t)n, 0.0);
    for (int j = 0; j < n; ++j) {
        std::vector<double> e((size_t)n, 0.0);
        e[(size_t)j] = 1.0;
        std::vector<double> col = field.basis_coords(e);
        for (int i = 0; i < n; ++i) row_sums[(size_t)i] += std::abs(col[(size_t)i]);
    }
    double m = 0;
    for (double s : row_sums) m = std::max(m, s);
    return m;
}

double box_extent_inf(const NumberField& field, const std::vector<double>& psi) {
    double ext = 0;
    for (int rho = 0; rho < field.embedding_count(); ++rho) {
        double b = rho < field.s ? psi[(size_t)rho] : std::sqrt(std::max(0.0, psi[(size_t)rho]));
        ext = std::max(ext, b);
    }
    return ext;
}

std::vector<double> expanded_center(const NumberField& field, const EmbeddingPoint& p) {
    return field.expand(p);
}

bool box_touches_domain(const NumberField& field, ExactKind kind,
                        const std::vector<double>& center, const std::vector<double>& psi) {
    if (kind == ExactKind::dim1) {
        double w = psi[0];
        return center[0] + w >= 0.0 && center[0] - w <= field.domain_basis[0][0];
    }
    if (kind == ExactKind::rect2d) {
        double W = field.domain_basis[0][0], H = field.domain_basis[1][1];
        double r = std::sqrt(std::max(0.0, psi[0]));
        double dx = std::max({0.0, -center[0], center[0] - W});
        double dy = std::max({0.0, -center[1], center[1] - H});
        return dx * dx + dy * dy <= r * r;
    }
    return true;   // conservative for skew domains; harmless for measures
}

bool point_in_box(const NumberField& field, const std::vector<double>& x, const ApproxBox& box) {
    int idx = 0;
    for (int rho = 0; rho < field.s; ++rho) {
        if (std::abs(x[(size_t)idx] - box.center.re[(size_t)rho]) > box.bound[(size_t)rho])
            return false;
        ++idx;
    }
    for (int c = 0; c < field.t; ++c) {
        double dx = x[(size_t)idx] - box.center.cx[(size_t)c].real();
        double dy = x[(size_t)idx + 1] - box.center.cx[(size_t)c].imag();
        if (dx * dx + dy * dy > box.bound[(size_t)(field.s + c)]) return false;
        idx += 2;
    }
    return true;
}

bool point_in_set(const NumberField& field, const std::vector<double>& x, const ApproxSet& set) {
    for (const auto& box : set.boxes)
        if (point_in_box(field, x, box)) return true;
    return false;
}

// ---- exact 1d sweep ----

struct RatInterval {
    Rat lo, hi;
};

std::vector<RatInterval> merged_union(std::vector<RatInterval> v) {
    std::sort(v.begin(), v.end(), [](const RatInterval& a, const RatInterval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    std::vector<RatInterval> out;
    for (auto& iv : v) {
        if (!out.empty() && iv.lo <= out.back().hi)
            out.back().hi = std::max(out.back().hi, iv.hi);
        else
            out.push_back(iv);
    }
    return out;
}

std::vector<RatInterval> intersect_unions(const std::vector<RatInterval>& a,
                                          const std::vector<RatInterval>& b) {
    std::vector<RatInterval> out;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Rat lo = std::max(a[i].lo, b[j].lo);
        Rat hi = std::min(a[i].hi, b[j].hi);
        if (lo < hi) out.push_back({lo, hi});
        if (a[i].hi < b[j].hi)
            ++i;
        else
            ++j;
    }
    return out;
}

Rat union_length(const std::vector<RatInterval>& v) {
    Rat len = 0;
    for (const auto& iv : v) len += iv.hi - iv.lo;
    return len;
}

// Exact rational interval list of A_n inside [0,1]; requires degree 1 and an
// exact psi value.
std::optional<std::vector<RatInterval>> rational_intervals(const NumberField& field,
                                                           const ApproxSet& set) {
    if (field.degree != 1) return std::nullopt;
    if (!set.psi_exact[0]) return std::nullopt;
    Rat w = *set.psi_exact[0];
    if (w < 0) return std::nullopt;
    std::vector<RatInterval> v;
    if (w == 0 && !set.boxes.empty()) return std::vector<RatInterval>{};
    for (const auto& gamma : set.center_classes) {
        Rat val(gamma.numerator.coords[0]);
        val /= Rat(gamma.denominator);
        Rat t = val - rat_floor(val);
        Int k_lo = rat_floor(-w - t) + 1;   // smallest k with t + k + w >= 0
        while (t + Rat(k_lo) + w < 0) ++k_lo;
        while (t + Rat(k_lo - 1) + w >= 0) --k_lo;
        for (Int k = k_lo; t + Rat(k) - w <= 1; ++k) {
            Rat lo = t + Rat(k) - w, hi = t + Rat(k) + w;
            lo = std::max(lo, Rat(0));
            hi = std::min(hi, Rat(1));
            if (lo < hi) v.push_back({lo, hi});
        }
    }
    return merged_union(std::move(v));
}

std::vector<std::pair<double, double>> double_intervals(const NumberField& field,
                                                        const ApproxSet& set) {
    double W = field.domain_basis[0][0];
    std::vector<std::pair<double, double>> v;
    for (const auto& box : set.boxes) {
        double lo = std::max(0.0, box.center.re[0] - box.bound[0]);
        double hi = std::min(W, box.center.re[0] + box.bound[0]);
        if (lo < hi) v.emplace_back(lo, hi);
    }
    std::sort(v.begin(), v.end());
    std::vector<std::pair<double, double>> out;
    for (auto& iv : v) {
        if (!out.empty() && iv.first <= out.back().second)
            out.back().second = std::max(out.back().second, iv.second);
        else
            out.push_back(iv);
    }
    return out;
}

double double_union_length(const std::vector<std::pair<double, double>>& v) {
    double s = 0;
    for (auto& iv : v) s += iv.second - iv.first;
    return s;
}

std::vector<Disc> set_discs(const ApproxSet& set) {
    std::vector<Disc> discs;
    discs.reserve(set.boxes.size());
    for (const auto& box : set.boxes)
        discs.push_back(Disc{box.center.cx[0].real(), box.center.cx[0].imag(),
                             std::sqrt(std::max(0.0, box.bound[0]))});
    return discs;
}

MeasureEstimate monte_carlo(const NumberField& field, const ApproxSet& a, const ApproxSet* b,
                            const McParams& params, uint64_t stream) {
    CounterRng rng(params.seed, stream);
    int n = field.degree;
    uint64_t hits = kernels::block_count(params.samples, params.mode, [&](size_t i) {
        std::vector<double> x((size_t)n, 0.0);
        for (int j = 0; j < n; ++j) {
            double t = rng.uniform(i, (uint64_t)j);
            for (int r = 0; r < n; ++r) x[(size_t)r] += t * field.domain_basis[(size_t)j][(size_t)r];
        }
        if (!point_in_set(field, x, a)) return false;
        return b == nullptr || point_in_set(field, x, *b);
    });
    MeasureEstimate est;
    est.method = MeasureMethod::monte_carlo;
    est.samples = params.samples;
    est.seed = params.seed;
    double p = params.samples ? (double)hits / (double)params.samples : 0.0;
    est.value = field.domain_volume * p;
    est.stderr_value =
        field.domain_volume * std::sqrt(std::max(0.0, p * (1 - p) / (double)params.samples));
    return est;
}

MeasureEstimate measure_impl(const NumberField& field, const ApproxSet& a, const ApproxSet* b,
                             const McParams& params, uint64_t stream) {
    ExactKind kind = params.force_monte_carlo ? ExactKind::none : exact_kind(field);
    if (kind == ExactKind::dim1) {
        auto ia = rational_intervals(field, a);
        auto ib = b ? rational_intervals(field, *b) : std::nullopt;
        MeasureEstimate est;
        est.method = MeasureMethod::exact;
        if (ia && (!b || ib)) {
            Rat len = b ? union_length(intersect_unions(*ia, *ib)) : union_length(*ia);
            est.exact_value = len;
            est.value = to_double(len);
            return est;
        }
        auto da = double_intervals(field, a);
        if (!b) {
            est.value = double_union_length(da);
            return est;
        }
        auto db = double_intervals(field, *b);
        double len = 0;
        size_t i = 0, j = 0;
        while (i < da.size() && j < db.size()) {
            double lo = std::max(da[i].first, db[j].first);
            double hi = std::min(da[i].second, db[j].second);
            if (lo < hi) len += hi - lo;
            if (da[i].second < db[j].second)
                ++i;
            else
                ++j;
        }
        est.value = len;
        return est;
    }
    if (kind == ExactKind::rect2d) {
        double W = field.domain_basis[0][0], H = field.domain_basis[1][1];
        MeasureEstimate est;
        est.method = MeasureMethod::exact;
        est.value = b ? disc_union_intersection_area(set_discs(a), set_discs(*b), W, H)
                      : disc_union_area(set_discs(a), W, H);
        return est;
    }
    return monte_carlo(field, a, b, params, stream);
}

} // namespace

uint64_t ideal_stream(const Ideal& a) {
    uint64_t h = mix64(0x243f6a8885a308d3ULL);
    for (const auto& [q, k] : a.factors()) {
        h = mix64(h ^ (uint64_t)q.p);
        for (long c : q.local_factor) h = mix64(h ^ (uint64_t)(c + 1));
        h = mix64(h ^ (uint64_t)k);
    }
    return h;
}

uint64_t pair_stream(const Ideal& a, const Ideal& b) {
    uint64_t ha = ideal_stream(a), hb = ideal_stream(b);
    if (ha > hb) std::swap(ha, hb);
    return mix64(mix64(0x13198a2e03707344ULL ^ ha) ^ hb);
}

std::vector<FractionalElement> approximant_centers(PrimeFactory& factory, const Ideal& n) {
    const NumberField& field = factory.field();
    if (n.is_unit_ideal()) return {FractionalElement{field.zero(), Int(1)}};

    // Generator search: smallest-coordinate integral beta with (beta) = n,
    // certified by norm equality plus module membership.
    Int target = n.norm();
    double target_d = to_double(target);
    IntMat basis = hnf_of(field, n);
    long radius_cap = 1 + (long)std::ceil(4.0 * std::pow(target_d, 1.0 / field.degree));

    FieldElement beta;
    bool found =
        sweep_integral_elements(field, radius_cap, 40000000, [&](const std::vector<long>& coords) {
            FieldElement e = field.from_int_coords(coords);
            if (e.is_zero()) return false;
            if (abs(norm_element(field, e).get_num()) != target) return false;
            std::vector<Int> ic;
            for (long c : coords) ic.emplace_back(c);
            if (!hnf_contains(basis, ic)) return false;
            beta = e;
            return true;
        });
    if (!found)
        fail(errc::no_generator_found,
             "no generator found for the modulus (non-principal ideal or cap too small)");

    // Invertible residues modulo n from the HNF residue box.
    std::vector<IntMat> prime_bases;
    for (const auto& [q, k] : n.factors()) prime_bases.push_back(factory.prime_power_hnf(q, 1));

    FieldElement beta_inv = field.inverse(beta);
    std::vector<FractionalElement> centers;
    std::vector<Int> coords((size_t)field.degree, Int(0));
    std::function<void(int)> walk = [&](int pos) {
        if (pos == field.degree) {
            for (const auto& pb : prime_bases)
                if (hnf_contains(pb, coords)) return;
            std::vector<Rat> rc(coords.begin(), coords.end());
            FieldElement alpha = field.from_coords(std::move(rc));
            centers.push_back(fractional_from(field, field.mul(alpha, beta_inv)));
            return;
        }
        const IntMat& h = basis;
        for (Int c = 0; c < h[(size_t)pos][(size_t)pos]; ++c) {
            coords[(size_t)pos] = c;
            walk(pos + 1);
        }
        coords[(size_t)pos] = 0;
    };
    walk(0);

    if (Int((long)centers.size()) != euler_phi(n))
        fail(errc::computation, "center count does not match Euler phi");
    for (const auto& gamma : centers)
        if (!(denominator_ideal(factory, gamma) == n))
            fail(errc::computation, "center denominator mismatch");
    return centers;
}

ApproxSet build_approx_set(PrimeFactory& factory, const PsiSystem& sys, const Ideal& n) {
    const NumberField& field = factory.field();
    ApproxSet set;
    set.n = n;
    set.center_classes = approximant_centers(factory, n);
    for (int rho = 0; rho < field.embedding_count(); ++rho) {
        set.psi.push_back(psi_eval(sys, rho, n));
        set.psi_exact.push_back(psi_eval_exact(sys, rho, n));
    }
    for (double p : set.psi)
        if (!(p > 0)) return set;   // a vanishing coordinate empties the set

    ExactKind kind = exact_kind(field);
    double r_t = inv_infinity_norm(field) * box_extent_inf(field, set.psi);

    for (const auto& gamma : set.center_classes) {
        EmbeddingPoint p = embed(field, fractional_value(field, gamma));
        DomainReduction red = reduce_to_domain(field, p);
        std::vector<double> base = field.expand(red.point);
        std::vector<double> t = field.basis_coords(base);

        std::vector<long> klo((size_t)field.degree), khi((size_t)field.degree);
        for (int i = 0; i < field.degree; ++i) {
            klo[(size_t)i] = (long)std::floor(-r_t - t[(size_t)i] - 1e-12);
            khi[(size_t)i] = (long)std::ceil(1.0 + r_t - t[(size_t)i] + 1e-12);
        }
        std::vector<long> k((size_t)field.degree, 0);
        std::function<void(int)> place = [&](int pos) {
            if (pos == field.degree) {
                std::vector<double> center = base;
                for (int j = 0; j < field.degree; ++j)
                    for (int r = 0; r < field.degree; ++r)
                        center[(size_t)r] +=
                            (double)k[(size_t)j] * field.domain_basis[(size_t)j][(size_t)r];
                if (!box_touches_domain(field, kind, center, set.psi)) return;
                ApproxBox box;
                box.center = field.from_expanded(center);
                box.bound = set.psi;
                set.boxes.push_back(std::move(box));
                return;
            }
            for (long v = klo[(size_t)pos]; v <= khi[(size_t)pos]; ++v) {
                k[(size_t)pos] = v;
                place(pos + 1);
            }
        };
        place(0);
    }
    return set;
}

MeasureEstimate measure_of(const NumberField& field, const ApproxSet& a, const McParams& params) {
    return measure_impl(field, a, nullptr, params, ideal_stream(a.n));
}

MeasureEstimate measure_of(const NumberField& field, const ApproxSet& a, const ApproxSet& b,
                           const McParams& params) {
    return measure_impl(field, a, &b, params, pair_stream(a.n, b.n));
}

OverlapReport overlap_report(PrimeFactory& factory, const PsiSystem& sys, const Ideal& m,
                             const Ideal& n, const McParams& params) {
    if (m == n) fail(errc::equal_ideals, "overlap report needs distinct ideals");
    const NumberField& field = factory.field();
    OverlapReport report;
    report.geometry = pair_geometry(sys, m, n);

    ApproxSet am = build_approx_set(factory, sys, m);
    ApproxSet an = build_approx_set(factory, sys, n);
    report.lambda_m = measure_of(field, am, params);
    report.lambda_n = measure_of(field, an, params);
    report.lambda_mn = measure_of(field, am, an, params);
    report.regime = classify_regime(report.geometry, field.embedding_count());
    if (report.lambda_m.value > 0 && report.lambda_n.value > 0)
        report.ratio = report.lambda_mn.value /
                       (report.geometry.P * report.lambda_m.value * report.lambda_n.value);
    return report;
}

long pair_count_oracle(PrimeFactory& factory, const Ideal& m, const Ideal& n,
                       const std::vector<double>& deltas) {
    if (m == n) fail(errc::equal_ideals, "pair count needs distinct ideals");
    const NumberField& field = factory.field();
    if ((int)deltas.size() != field.embedding_count())
        fail(errc::config_invalid, "one bound per embedding required");

    // Reduce representatives into D_K exactly (subtract the lattice part
    // found by the numeric reduction).
    auto reduced_values = [&](const Ideal& a) {
        std::vector<FieldElement> out;
        for (const auto& gamma : approximant_centers(factory, a)) {
            FieldElement value = fractional_value(field, gamma);
            DomainReduction red = reduce_to_domain(field, embed(field, value));
            std::vector<Rat> shift(red.lattice.begin(), red.lattice.end());
            out.push_back(field.sub(value, field.from_coords(std::move(shift))));
        }
        return out;
    };
    std::vector<FieldElement> betas = reduced_values(m);
    std::vector<FieldElement> gammas = reduced_values(n);

    double ext = 0;
    for (int rho = 0; rho < field.embedding_count(); ++rho)
        ext = std::max(ext, rho < field.s ? deltas[(size_t)rho]
                                          : std::sqrt(std::max(0.0, deltas[(size_t)rho])));
    long K = 1 + (long)std::ceil(inv_infinity_norm(field) * ext);

    long count = 0;
    std::vector<long> k((size_t)field.degree, 0);
    for (const auto& beta : betas)
        for (const auto& gamma : gammas) {
            FieldElement diff = field.sub(beta, gamma);
            std::function<void(int)> scan = [&](int pos) {
                if (pos == field.degree) {
                    std::vector<Rat> shift(k.begin(), k.end());
                    FieldElement d = field.sub(diff, field.from_coords(std::move(shift)));
                    EmbeddingPoint p = embed(field, d);
                    for (int rho = 0; rho < field.embedding_count(); ++rho)
                        if (!(p.abs_rho(rho) < deltas[(size_t)rho])) return;
                    ++count;
                    return;
                }
                for (long v = -K; v <= K; ++v) {
                    k[(size_t)pos] = v;
                    scan(pos + 1);
                }
            };
            scan(0);
        }
    return count;
}

ExperimentReport quasi_independence_experiment(PrimeFactory& factory, const PsiSystem& sys,
                                               double R, const McParams& params) {
    const NumberField& field = factory.field();
    auto ideals = enumerate_ideals(factory, R, false);

    std::vector<ApproxSet> sets;
    sets.reserve(ideals.size());
    for (const auto& n : ideals) sets.push_back(build_approx_set(factory, sys, n));

    ExperimentReport report;
    std::vector<MeasureEstimate> singles(sets.size());
    kernels::block_map(singles, params.mode,
                       [&](size_t i) { return measure_of(field, sets[i], params); });
    for (const auto& est : singles) report.single_sum += est.value;

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = 0; j < sets.size(); ++j)
            if (ideals[i].norm() < ideals[j].norm()) pairs.emplace_back(i, j);

    report.rows.resize(pairs.size());
    kernels::block_map(report.rows, params.mode, [&](size_t idx) {
        auto [i, j] = pairs[idx];
        PairTraceRow row;
        row.m = ideals[i];
        row.n = ideals[j];
        row.lambda_m = singles[i];
        row.lambda_n = singles[j];
        row.lambda_mn = measure_of(field, sets[i], sets[j], params);
        PairGeometry geo = pair_geometry(sys, ideals[i], ideals[j]);
        row.D = geo.D;
        row.P = geo.P;
        row.tau = geo.tau;
        row.regime = classify_regime(geo, field.embedding_count());
        if (row.lambda_m.value > 0 && row.lambda_n.value > 0)
            row.ratio = row.lambda_mn.value / (geo.P * row.lambda_m.value * row.lambda_n.value);
        return row;
    });
    for (const auto& row : report.rows) report.pair_sum += row.lambda_mn.value;
    if (report.single_sum > 0)
        report.ratio = report.pair_sum / (report.single_sum * report.single_sum);
    return report;
}

} // namespace nfv
