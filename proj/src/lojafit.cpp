#include "loja/lojafit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace loja {

double tol_fit() {
    static const double v = [] {
        if (const char* env = std::getenv("LOJA_TOL")) {
            try {
                double t = std::stod(env);
                if (t > 0) return t;
            } catch (const std::exception&) {
            }
        }
        return 1e-9;
    }();
    return v;
}

namespace {

constexpr double kLogZero = -750.0;  // below log(DBL_MIN)

double safe_log(double v) { return v > 0.0 ? std::log(v) : kLogZero; }

struct EnvelopeData {
    // samples with |g| > tol_g, sorted by |g| ascending
    std::vector<double> lf, lg;        // log |f|, log |g|
    std::vector<double> f_abs, g_abs;
    std::vector<size_t> origin;        // index into the caller's arrays
    size_t idx_median = 0;             // first index with |g| >= median
    size_t idx_p90 = 0;                // first index past the 90th percentile
    bool has_zero_f = false;           // some used sample has f == 0 exactly
    size_t zero_f_origin = 0;
};

EnvelopeData build_envelope_data(const std::vector<double>& f_vals, const std::vector<double>& g_vals,
                                 double tol_g) {
    EnvelopeData d;
    std::vector<size_t> order;
    for (size_t i = 0; i < f_vals.size(); ++i)
        if (std::fabs(g_vals[i]) > tol_g) order.push_back(i);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return std::fabs(g_vals[a]) < std::fabs(g_vals[b]); });
    for (size_t i : order) {
        double fa = std::fabs(f_vals[i]);
        double ga = std::fabs(g_vals[i]);
        d.f_abs.push_back(fa);
        d.g_abs.push_back(ga);
        d.lf.push_back(safe_log(fa));
        d.lg.push_back(std::log(ga));
        d.origin.push_back(i);
        if (fa == 0.0 && !d.has_zero_f) {
            d.has_zero_f = true;
            d.zero_f_origin = i;
        }
    }
    d.idx_median = d.lf.size() / 2;
    d.idx_p90 = (d.lf.size() * 9) / 10;
    return d;
}

double log_envelope(const EnvelopeData& d, double alpha, size_t begin, size_t end) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = begin; i < end; ++i) best = std::min(best, d.lf[i] - alpha * d.lg[i]);
    return best;
}

// Feasibility of an exponent: the envelope constant must clear the absolute
// floor, and restricted to |g| below the 90th percentile it must not be
// dominated by the small-|g| tail (removing the lower half of |g| may not
// raise it beyond low_slack). The second test is what pins the exponent: for
// too small an alpha the envelope minimum escapes to zero along g -> 0 and
// keeps falling under sample refinement.
bool alpha_feasible(const EnvelopeData& d, double alpha, const FitOptions& opt) {
    if (d.lf.empty()) return false;
    double log_full = log_envelope(d, alpha, 0, d.lf.size());
    if (log_full < std::log(opt.c_floor)) return false;
    if (d.lf.size() >= opt.min_stability_samples && d.idx_median < d.idx_p90) {
        double log_low_part = log_envelope(d, alpha, 0, d.idx_p90);
        double log_mid = log_envelope(d, alpha, d.idx_median, d.idx_p90);
        if (log_low_part < log_mid + std::log1p(-opt.low_slack)) return false;
    }
    return true;
}

std::vector<double> log_alpha_grid(const FitOptions& opt) {
    std::vector<double> alphas(opt.alpha_grid);
    double la = std::log(opt.alpha_min);
    double lb = std::log(opt.alpha_max);
    for (int i = 0; i < opt.alpha_grid; ++i)
        alphas[i] = std::exp(la + (lb - la) * i / (opt.alpha_grid - 1));
    return alphas;
}

struct EvalBatch {
    std::vector<double> f_vals, g_vals;
    std::vector<Point> points;
};

EvalBatch eval_pair(const PiecewiseFn& f, const PiecewiseFn& g, const Domain& D, size_t samples,
                    uint64_t seed) {
    EvalBatch out;
    Domain::Sample s = D.sample(samples, seed);
    for (const auto& x : s.points) {
        double fv, gv;
        try {
            fv = f.eval(x);
            gv = g.eval(x);
        } catch (const domain_error&) {
            continue;
        } catch (const eval_error&) {
            continue;
        }
        if (!std::isfinite(fv) || !std::isfinite(gv)) continue;
        out.f_vals.push_back(fv);
        out.g_vals.push_back(gv);
        out.points.push_back(x);
    }
    return out;
}

}  // namespace

double envelope_constant(const std::vector<double>& f_abs, const std::vector<double>& g_abs,
                         double alpha, double tol_g) {
    EnvelopeData d = build_envelope_data(f_abs, g_abs, tol_g);
    if (d.lf.empty()) throw error("envelope_constant: no samples with |g| > tol_g");
    if (d.has_zero_f) return 0.0;
    return std::exp(log_envelope(d, alpha, 0, d.lf.size()));
}

PowerLawFit fit_value_pairs(const std::vector<double>& f_vals, const std::vector<double>& g_vals,
                            const std::vector<Point>* points, const FitOptions& opt) {
    if (f_vals.size() != g_vals.size()) throw error("fit_value_pairs: length mismatch");
    PowerLawFit fit;
    fit.n_samples = f_vals.size();
    if (f_vals.empty()) {
        fit.note = "no samples";
        return fit;
    }

    for (size_t i = 0; i < g_vals.size(); ++i) {
        double ga = std::fabs(g_vals[i]);
        fit.sup_g = std::max(fit.sup_g, ga);
        if (ga <= opt.tol_g) {
            ++fit.n_zero_g;
            if (std::fabs(f_vals[i]) <= opt.tol_g) ++fit.n_zero_both;
        }
    }

    EnvelopeData d = build_envelope_data(f_vals, g_vals, opt.tol_g);
    if (d.lf.empty()) {
        // g vanishes everywhere: the inequality holds with any exponent
        fit.feasible = true;
        fit.degenerate = true;
        fit.alpha = 1.0;
        double fmin = std::numeric_limits<double>::infinity();
        for (double v : f_vals) fmin = std::min(fmin, std::fabs(v));
        fit.C = std::max(fmin, opt.c_floor);
        fit.note = "degenerate: g vanishes on all samples";
        return fit;
    }
    if (d.has_zero_f) {
        fit.feasible = false;
        fit.note = "zero of f where g is nonzero";
        if (points) fit.binding_points.push_back((*points)[d.zero_f_origin]);
        return fit;
    }

    std::vector<double> alphas = log_alpha_grid(opt);
    int first_ok = -1;
    for (int i = 0; i < static_cast<int>(alphas.size()); ++i) {
        if (alpha_feasible(d, alphas[i], opt)) {
            first_ok = i;
            break;
        }
    }
    if (first_ok < 0) {
        fit.feasible = false;
        fit.note = "no feasible exponent in the search range";
        return fit;
    }

    double hi = alphas[first_ok];
    if (first_ok > 0) {
        double lo = alphas[first_ok - 1];
        while ((hi - lo) / hi > opt.bisect_rel) {
            double mid = 0.5 * (lo + hi);
            if (alpha_feasible(d, mid, opt)) hi = mid; else lo = mid;
        }
    }

    fit.feasible = true;
    fit.alpha = hi;
    double log_c = log_envelope(d, hi, 0, d.lf.size());
    fit.C = std::exp(log_c);

    double min_res = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < d.lf.size(); ++i) {
        double res = d.f_abs[i] - fit.C * std::pow(d.g_abs[i], fit.alpha);
        min_res = std::min(min_res, res);
        if (points && res <= tol_fit() && fit.binding_points.size() < 8)
            fit.binding_points.push_back((*points)[d.origin[i]]);
    }
    fit.min_residual = min_res;
    return fit;
}

PowerLawFit fit_exponent(const PiecewiseFn& f, const PiecewiseFn& g, const Domain& D, size_t samples,
                         uint64_t seed, const FitOptions& opt) {
    if (D.empty()) throw error("fit_exponent: empty domain");
    EvalBatch b = eval_pair(f, g, D, samples, seed);
    return fit_value_pairs(b.f_vals, b.g_vals, &b.points, opt);
}

double PowerPhi::operator()(double t) const {
    double v = C * std::pow(std::fabs(t), alpha);
    return t < 0 ? -v : v;
}

std::vector<Violation> verify_inequality(const PiecewiseFn& f, const PiecewiseFn& g, const Domain& D,
                                         const PowerPhi& phi, size_t samples, uint64_t seed) {
    EvalBatch b = eval_pair(f, g, D, samples, seed);
    std::vector<Violation> out;
    for (size_t i = 0; i < b.f_vals.size(); ++i) {
        double lhs = std::fabs(phi(b.g_vals[i]));
        double rhs = std::fabs(b.f_vals[i]);
        if (lhs > rhs + tol_fit()) out.push_back({b.points[i], rhs, lhs});
    }
    return out;
}

StarCheck check_star_pairs(const std::vector<double>& f_vals, const std::vector<double>& g_vals,
                           const std::vector<Point>& points, const StarOptions& opt) {
    StarCheck out;
    if (f_vals.empty()) return out;
    std::vector<size_t> order(f_vals.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        double fa = std::fabs(f_vals[a]);
        double fb = std::fabs(f_vals[b]);
        if (fa != fb) return fa < fb;
        return lex_less(points[a], points[b]);
    });
    size_t decile = std::max<size_t>(1, order.size() / 10);
    double max_f = 0.0;
    for (size_t k = 0; k < decile; ++k) max_f = std::max(max_f, std::fabs(f_vals[order[k]]));
    out.decile_max_f = max_f;
    if (max_f > opt.eps_star) return out;  // decile not resolved: pass at this resolution
    out.assessed = true;
    double worst = 0.0;
    for (size_t k = 0; k < decile; ++k) {
        double ga = std::fabs(g_vals[order[k]]);
        if (ga >= opt.c_gap && ga > worst) {
            worst = ga;
            out.witness = points[order[k]];
        }
    }
    if (out.witness) {
        out.passed = false;
        out.witness_g = worst;
    }
    return out;
}

StarCheck check_star_condition(const PiecewiseFn& f, const PiecewiseFn& g, const Domain& D,
                               size_t samples, uint64_t seed, const StarOptions& opt) {
    if (!(opt.c_gap > 0)) throw error("check_star_condition: c_gap must be positive");
    EvalBatch b = eval_pair(f, g, D, samples, seed);
    return check_star_pairs(b.f_vals, b.g_vals, b.points, opt);
}

BoundCheck check_g_bounded(const PiecewiseFn& g, const Domain& D, size_t samples, uint64_t seed,
                           double bound_probe) {
    if (!(bound_probe > 0)) throw error("check_g_bounded: bound_probe must be positive");
    Domain::Sample s = D.sample(samples, seed);
    BoundCheck out;
    for (const auto& x : s.points) {
        double v;
        try {
            v = g.eval(x);
        } catch (const error&) {
            continue;
        }
        if (!std::isfinite(v)) {
            out.sup_g = std::numeric_limits<double>::infinity();
            out.arg_sup = x;
            break;
        }
        if (std::fabs(v) > out.sup_g) {
            out.sup_g = std::fabs(v);
            out.arg_sup = x;
        }
    }
    out.passed = out.sup_g <= bound_probe;
    return out;
}

ValuePairCloud value_pair_cloud(const PiecewiseFn& f, const PiecewiseFn& g, const Domain& D,
                                size_t samples, uint64_t seed) {
    EvalBatch b = eval_pair(f, g, D, samples, seed);
    return {std::move(b.f_vals), std::move(b.g_vals), std::move(b.points)};
}

PowerLawFit separation_fit(const ValuePairCloud& cloud, const FitOptions& opt) {
    if (cloud.s.empty()) throw error("separation_fit: empty cloud");
    std::vector<double> lhs(cloud.s.size()), rhs(cloud.s.size());
    for (size_t i = 0; i < cloud.s.size(); ++i) {
        lhs[i] = std::fabs(cloud.s[i]);
        rhs[i] = std::fabs(cloud.s[i]) + std::fabs(cloud.t[i]);  // 1-norm distance to the origin
    }
    return fit_value_pairs(lhs, rhs, cloud.x.empty() ? nullptr : &cloud.x, opt);
}

PowerLawFit reverse_fit(const PiecewiseFn& f, const PiecewiseFn& g, const Domain& D, size_t samples,
                        uint64_t seed, int n_max) {
    EvalBatch b = eval_pair(f, g, D, samples, seed);
    PowerLawFit fit;
    fit.is_reverse = true;
    fit.n_samples = b.f_vals.size();
    if (b.f_vals.empty()) {
        fit.note = "no samples";
        return fit;
    }
    const double tol_g = 1e-12;
    std::vector<double> fa, ga;
    for (size_t i = 0; i < b.f_vals.size(); ++i) {
        double gv = std::fabs(b.g_vals[i]);
        double fv = std::fabs(b.f_vals[i]);
        fit.sup_g = std::max(fit.sup_g, gv);
        if (gv <= tol_g) {
            ++fit.n_zero_g;
            if (fv <= tol_g) ++fit.n_zero_both;
            else {
                fit.feasible = false;
                fit.note = "zero of g where f is nonzero";
                fit.binding_points.push_back(b.points[i]);
                return fit;
            }
        } else {
            fa.push_back(fv);
            ga.push_back(gv);
        }
    }
    if (fa.empty()) {
        fit.feasible = true;
        fit.degenerate = true;
        fit.alpha = 1.0;
        fit.C = 1.0;
        fit.note = "degenerate: f and g vanish on all samples";
        return fit;
    }

    // upper envelope max |f|^N / |g|; N is feasible when the envelope is not
    // dominated by the small-|g| tail (mirror of the forward stability test)
    std::vector<size_t> order(fa.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return ga[x] < ga[y]; });
    size_t idx_median = order.size() / 2;
    size_t idx_p90 = (order.size() * 9) / 10;

    auto log_upper = [&](int n, size_t begin, size_t end) {
        double best = -std::numeric_limits<double>::infinity();
        for (size_t k = begin; k < end; ++k) {
            size_t i = order[k];
            best = std::max(best, n * safe_log(fa[i]) - std::log(ga[i]));
        }
        return best;
    };

    for (int n = 1; n <= n_max; ++n) {
        bool stable = true;
        if (order.size() >= 32 && idx_median < idx_p90) {
            double full = log_upper(n, 0, idx_p90);
            double mid = log_upper(n, idx_median, idx_p90);
            if (full > mid - std::log1p(-0.02)) stable = false;
        }
        if (!stable) continue;
        fit.feasible = true;
        fit.alpha = n;
        fit.C = std::exp(log_upper(n, 0, order.size()));
        double min_res = std::numeric_limits<double>::infinity();
        for (size_t k = 0; k < order.size(); ++k) {
            size_t i = order[k];
            double res = fit.C * ga[i] - std::pow(fa[i], n);
            min_res = std::min(min_res, res);
        }
        fit.min_residual = min_res;
        return fit;
    }
    fit.feasible = false;
    fit.note = "no stable integer exponent up to " + std::to_string(n_max);
    return fit;
}

MinSelector min_selector(const std::vector<PiecewiseFn>& phis, double eps_scan, double eps_floor,
                         int grid) {
    if (phis.empty()) throw error("min_selector: empty candidate list");
    const double tol = tol_fit();
    // oddness and zero-at-zero screening on a coarse symmetric grid
    for (const auto& phi : phis) {
        if (std::fabs(phi.eval1(0.0)) > tol) throw error("min_selector: candidate with phi(0) != 0");
        for (int k = 1; k <= 16; ++k) {
            double t = eps_scan * k / 16.0;
            if (std::fabs(phi.eval1(-t) + phi.eval1(t)) > tol * (1.0 + std::fabs(phi.eval1(t))))
                throw error("min_selector: candidate is not odd at sampling resolution");
        }
    }

    MinSelector out;
    for (double eps = eps_scan; eps >= eps_floor; eps *= 0.5) {
        for (size_t i = 0; i < phis.size(); ++i) {
            bool selects = true;
            for (int k = -(grid / 2); k <= grid / 2 && selects; ++k) {
                double t = eps * k / (grid / 2);
                double vi = phis[i].eval1(t);
                double m = std::fabs(vi);
                for (const auto& other : phis) m = std::min(m, std::fabs(other.eval1(t)));
                double target = (t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0)) * m;
                if (std::fabs(vi - target) > tol * (1.0 + m)) selects = false;
            }
            if (selects) {
                out.found = true;
                out.index = i;
                out.eps = eps;
                return out;
            }
        }
    }
    return out;
}

}  // namespace loja
