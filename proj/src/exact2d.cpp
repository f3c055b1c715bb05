#include "nfvaaler/exact2d.hpp"

#include <algorithm>
#include <cmath>

namespace nfv {

namespace {

constexpr double kTol = 1e-13;

// Vertical boundary y(x) = c + sign * sqrt(r2 - (x-cx)^2); sign 0 is the
// constant c (a clip line).
struct Bound {
    double c = 0, cx = 0, r2 = 0;
    int sign = 0;

    double eval(double x) const {
        if (sign == 0) return c;
        double r = std::sqrt(r2);
        double u = std::clamp(x - cx, -r, r);
        return c + sign * std::sqrt(std::max(0.0, (r - u) * (r + u)));
    }

    // Closed-form integral over [x0, x1]. The chord height is computed as
    // (r-u)(r+u) and the angle via atan2, which stays well conditioned at
    // the rim where asin(u/r) loses eight digits.
    double integral(double x0, double x1) const {
        double base = c * (x1 - x0);
        if (sign == 0) return base;
        double r = std::sqrt(r2);
        auto prim = [&](double x) {
            double u = std::clamp(x - cx, -r, r);
            double h = std::sqrt(std::max(0.0, (r - u) * (r + u)));
            return 0.5 * (u * h + r2 * std::atan2(u, h));
        };
        return base + sign * (prim(x1) - prim(x0));
    }

    // Set-independent tie-break so symmetric queries stay bit-identical.
    bool operator<(const Bound& o) const {
        if (c != o.c) return c < o.c;
        if (cx != o.cx) return cx < o.cx;
        if (r2 != o.r2) return r2 < o.r2;
        return sign < o.sign;
    }
};

struct Run {
    double lo = 0, hi = 0;
    Bound blo, bhi;
};

std::vector<Run> union_runs(const std::vector<Disc>& discs, double x, double H) {
    std::vector<Run> slices;
    for (const Disc& d : discs) {
        double h2 = d.r * d.r - (x - d.cx) * (x - d.cx);
        if (h2 <= 0) continue;
        double h = std::sqrt(h2);
        Run run;
        run.lo = d.cy - h;
        run.blo = Bound{d.cy, d.cx, d.r * d.r, -1};
        run.hi = d.cy + h;
        run.bhi = Bound{d.cy, d.cx, d.r * d.r, +1};
        if (run.lo < 0) {
            run.lo = 0;
            run.blo = Bound{0, 0, 0, 0};
        }
        if (run.hi > H) {
            run.hi = H;
            run.bhi = Bound{H, 0, 0, 0};
        }
        if (run.lo < run.hi) slices.push_back(run);
    }
    std::sort(slices.begin(), slices.end(), [](const Run& a, const Run& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        if (a.hi != b.hi) return a.hi < b.hi;
        if (b.blo < a.blo) return false;
        if (a.blo < b.blo) return true;
        return a.bhi < b.bhi;
    });
    std::vector<Run> merged;
    for (const Run& s : slices) {
        if (!merged.empty() && s.lo <= merged.back().hi) {
            if (s.hi > merged.back().hi) {
                merged.back().hi = s.hi;
                merged.back().bhi = s.bhi;
            }
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

std::vector<Run> intersect_runs(const std::vector<Run>& a, const std::vector<Run>& b) {
    std::vector<Run> out;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Run run;
        if (a[i].lo > b[j].lo || (a[i].lo == b[j].lo && a[i].blo < b[j].blo)) {
            run.lo = a[i].lo;
            run.blo = a[i].blo;
        } else {
            run.lo = b[j].lo;
            run.blo = b[j].blo;
        }
        if (a[i].hi < b[j].hi || (a[i].hi == b[j].hi && a[i].bhi < b[j].bhi)) {
            run.hi = a[i].hi;
            run.bhi = a[i].bhi;
        } else {
            run.hi = b[j].hi;
            run.bhi = b[j].bhi;
        }
        // Slivers below kTol are tangency noise, not area.
        if (run.hi - run.lo > kTol) out.push_back(run);
        if (a[i].hi < b[j].hi)
            ++i;
        else
            ++j;
    }
    return out;
}

void canonicalize(std::vector<Disc>& discs) {
    std::sort(discs.begin(), discs.end(), [](const Disc& a, const Disc& b) {
        if (a.cx != b.cx) return a.cx < b.cx;
        if (a.cy != b.cy) return a.cy < b.cy;
        return a.r < b.r;
    });
    discs.erase(std::unique(discs.begin(), discs.end(),
                            [](const Disc& a, const Disc& b) {
                                return a.cx == b.cx && a.cy == b.cy && a.r == b.r;
                            }),
                discs.end());
    // drop degenerate discs
    discs.erase(std::remove_if(discs.begin(), discs.end(), [](const Disc& d) { return d.r <= 0; }),
                discs.end());
}

void push_clipline_crossings(const Disc& d, double y, std::vector<double>& xs) {
    double dy = d.cy - y;
    double h2 = d.r * d.r - dy * dy;
    if (h2 <= 0) return;
    double h = std::sqrt(h2);
    xs.push_back(d.cx - h);
    xs.push_back(d.cx + h);
}

void push_circle_crossings(const Disc& a, const Disc& b, std::vector<double>& xs) {
    double dx = b.cx - a.cx, dy = b.cy - a.cy;
    double d2 = dx * dx + dy * dy;
    if (d2 == 0) return;
    double d = std::sqrt(d2);
    if (d > a.r + b.r || d < std::abs(a.r - b.r)) return;
    double along = (d2 + a.r * a.r - b.r * b.r) / (2 * d);
    double h2 = a.r * a.r - along * along;
    double h = std::sqrt(std::max(0.0, h2));
    double ux = dx / d, uy = dy / d;
    xs.push_back(a.cx + along * ux - h * uy);
    xs.push_back(a.cx + along * ux + h * uy);
}

std::vector<double> breakpoints(const std::vector<Disc>& all, double W, double H) {
    std::vector<double> xs{0.0, W};
    for (const Disc& d : all) {
        xs.push_back(d.cx - d.r);
        xs.push_back(d.cx + d.r);
        push_clipline_crossings(d, 0.0, xs);
        push_clipline_crossings(d, H, xs);
    }
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) push_circle_crossings(all[i], all[j], xs);

    for (double& x : xs) x = std::clamp(x, 0.0, W);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [](double a, double b) { return std::abs(a - b) <= kTol; }),
             xs.end());
    return xs;
}

template <class RunsFn>
double sweep_area(const std::vector<double>& xs, RunsFn&& runs_at) {
    double area = 0;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        double x0 = xs[i], x1 = xs[i + 1];
        if (x1 - x0 <= kTol) continue;
        for (const Run& run : runs_at(0.5 * (x0 + x1)))
            area += run.bhi.integral(x0, x1) - run.blo.integral(x0, x1);
    }
    return area;
}

} // namespace

double disc_union_area(std::vector<Disc> a, double W, double H) {
    canonicalize(a);
    if (a.empty() || W <= 0 || H <= 0) return 0;
    auto xs = breakpoints(a, W, H);
    return sweep_area(xs, [&](double x) { return union_runs(a, x, H); });
}

double disc_union_intersection_area(std::vector<Disc> a, std::vector<Disc> b, double W, double H) {
    canonicalize(a);
    canonicalize(b);
    if (a.empty() || b.empty() || W <= 0 || H <= 0) return 0;
    std::vector<Disc> all = a;
    all.insert(all.end(), b.begin(), b.end());
    canonicalize(all);
    auto xs = breakpoints(all, W, H);
    return sweep_area(xs, [&](double x) {
        return intersect_runs(union_runs(a, x, H), union_runs(b, x, H));
    });
}

} // namespace nfv
