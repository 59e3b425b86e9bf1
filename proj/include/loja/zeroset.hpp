#pragma once

#include <optional>

#include "loja/geometry.hpp"

namespace loja {

/// Numerical estimate of the generalized zero set of a (possibly
/// discontinuous) function: points of the closed domain approached by samples
/// with |f| below the threshold.
struct ZeroSetEstimate {
    struct Witness {
        Point sample;          // nearby sample with small |f|
        double f_abs = 0.0;
    };

    PointSet candidates;                 // cluster representatives + boundary limit points
    std::vector<Witness> witnesses;      // aligned with candidates order
    double eps = 0.0;
    double delta = 0.0;
    double pitch = 0.0;
    size_t sample_count = 0;
    size_t raw_candidate_count = 0;      // samples with |f| <= eps before clustering
};

struct ZeroSetOptions {
    double eps = 1e-4;
    double delta = 1e-2;
    size_t samples = 10000;
    uint64_t seed = 42;
};

/// Samples D (grid including the boundary, plus seeded random points),
/// keeps samples with |f| <= eps, reduces them to a deterministic delta-net
/// (greedy over the lexicographic order) and finally adds boundary grid
/// points lying within delta of a kept sample, so limit zeros on the closure
/// of D are represented even when f itself is large there.
ZeroSetEstimate gamma_zero_set(const PiecewiseFn& f, const Domain& D, const ZeroSetOptions& opt);

struct InclusionCheck {
    bool holds = true;
    std::optional<Point> violator;
    double g_at_violator = 0.0;
};

/// Checks |g| <= tol_incl at every candidate of the estimate: the sampled
/// form of "generalized zeros of f are zeros of g".
InclusionCheck zero_inclusion(const ZeroSetEstimate& est, const PiecewiseFn& g, double tol_incl = 1e-6);

}  // namespace loja
