#pragma once

#include <optional>

#include "loja/geometry.hpp"

namespace loja {

/// Global fit tolerance; LOJA_TOL in the environment overrides the default.
double tol_fit();

/// Result of fitting the lower-envelope inequality |f| >= C |g|^alpha over a
/// sample set (or the reversed form |f|^N <= C |g| when is_reverse is set,
/// with alpha holding N).
struct PowerLawFit {
    double alpha = 0.0;
    double C = 0.0;
    bool feasible = false;
    bool degenerate = false;   // g vanished on every sample; inequality vacuous
    bool is_reverse = false;
    size_t n_samples = 0;
    size_t n_zero_g = 0;       // samples with |g| <= tol_g, excluded from the envelope
    size_t n_zero_both = 0;    // of those, samples where |f| <= tol_g as well
    double min_residual = 0.0; // min over used samples of |f| - C|g|^alpha
    double sup_g = 0.0;
    std::vector<Point> binding_points;
    std::string note;
};

struct FitOptions {
    double alpha_min = 0.05;
    double alpha_max = 40.0;
    int alpha_grid = 400;
    double bisect_rel = 1e-3;
    double c_floor = 1e-12;
    double tol_g = 1e-12;
    // Envelope stability: the constant restricted to samples with |g| below
    // the 90th percentile must not improve by more than low_slack when the
    // lower half of |g| is removed; otherwise the envelope is escaping to
    // zero along g -> 0 and the exponent is not yet feasible.
    double low_slack = 0.02;
    size_t min_stability_samples = 32;
};

/// Envelope constant C(alpha) = min over samples with |g| > tol_g of
/// |f| / |g|^alpha, computed in log space.
double envelope_constant(const std::vector<double>& f_abs, const std::vector<double>& g_abs,
                         double alpha, double tol_g = 1e-12);

/// Core fit on precomputed value pairs; points (optional) carry the sample
/// locations for binding-witness reporting.
PowerLawFit fit_value_pairs(const std::vector<double>& f_vals, const std::vector<double>& g_vals,
                            const std::vector<Point>* points = nullptr, const FitOptions& opt = {});

/// Samples the domain and fits |f| >= C |g|^alpha.
PowerLawFit fit_exponent(const PiecewiseFn& f, const PiecewiseFn& g, const Domain& D,
                         size_t samples, uint64_t seed, const FitOptions& opt = {});

/// Odd power-law bound phi(t) = sign(t) * C * |t|^alpha; p-flat at zero
/// whenever alpha >= p + 1.
struct PowerPhi {
    double C = 1.0;
    double alpha = 2.0;
    int p = 1;

    double operator()(double t) const;
};

struct Violation {
    Point x;
    double f_abs;
    double phi_g_abs;
};

/// All sample points where |phi(g(x))| > |f(x)| + tol_fit.
std::vector<Violation> verify_inequality(const PiecewiseFn& f, const PiecewiseFn& g, const Domain& D,
                                         const PowerPhi& phi, size_t samples, uint64_t seed);

/// Sampled form of the sequence condition "f -> 0 forces g -> 0": among the
/// lowest decile of |f| values (when that decile is itself below eps_star),
/// no sample may keep |g| >= c_gap.
struct StarCheck {
    bool passed = true;
    bool assessed = false;      // the small-|f| decile was resolved at eps_star
    std::optional<Point> witness;
    double witness_g = 0.0;
    double decile_max_f = 0.0;
};

struct StarOptions {
    double c_gap = 0.1;
    double eps_star = 1e-3;
};

StarCheck check_star_condition(const PiecewiseFn& f, const PiecewiseFn& g, const Domain& D,
                               size_t samples, uint64_t seed, const StarOptions& opt = {});

StarCheck check_star_pairs(const std::vector<double>& f_vals, const std::vector<double>& g_vals,
                           const std::vector<Point>& points, const StarOptions& opt = {});

struct BoundCheck {
    bool passed = true;
    double sup_g = 0.0;
    std::optional<Point> arg_sup;
};

/// Empirical boundedness probe: fails when sup |g| over the samples exceeds
/// bound_probe.
BoundCheck check_g_bounded(const PiecewiseFn& g, const Domain& D, size_t samples, uint64_t seed,
                           double bound_probe = 1e6);

/// Value-pair cloud {(f(x), g(x))} over the sampled domain.
struct ValuePairCloud {
    std::vector<double> s;  // f values
    std::vector<double> t;  // g values
    std::vector<Point> x;   // source samples
};

ValuePairCloud value_pair_cloud(const PiecewiseFn& f, const PiecewiseFn& g, const Domain& D,
                                size_t samples, uint64_t seed);

/// Fits |s| >= C (|s| + |t|)^alpha over the cloud (1-norm separation of the
/// cloud from the t-axis relative to the origin).
PowerLawFit separation_fit(const ValuePairCloud& cloud, const FitOptions& opt = {});

/// Fits the reversed inequality |f|^N <= C |g| with the smallest stable
/// integer N; C is the exact upper envelope max |f|^N / |g|.
PowerLawFit reverse_fit(const PiecewiseFn& f, const PiecewiseFn& g, const Domain& D,
                        size_t samples, uint64_t seed, int n_max = 8);

/// For odd continuous functions phi_i with phi_i(0) = 0, finds (i0, eps) such
/// that sign(t) * min_i |phi_i(t)| coincides with phi_{i0} on [-eps, eps].
struct MinSelector {
    bool found = false;
    size_t index = 0;
    double eps = 0.0;
};

MinSelector min_selector(const std::vector<PiecewiseFn>& phis, double eps_scan,
                         double eps_floor = 1e-8, int grid = 129);

}  // namespace loja
