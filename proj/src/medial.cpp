#include "loja/medial.hpp"

#include <algorithm>
#include <cmath>

namespace loja {

ClosedSetSample ClosedSetSample::from_points(std::vector<Point> pts) {
    if (pts.empty()) throw empty_set_error("closed-set sample must be nonempty");
    int dim = static_cast<int>(pts[0].size());
    return ClosedSetSample{PointSet(dim, std::move(pts)), std::nullopt};
}

ClosedSetSample ClosedSetSample::from_implicit(PiecewiseFn fn, const Domain& D, int m_per_axis) {
    Domain::Sample s = D.grid(m_per_axis);
    std::vector<Point> kept;
    for (const auto& x : s.points) {
        try {
            if (fn.eval(x) <= 0.0) kept.push_back(x);
        } catch (const error&) {
        }
    }
    if (kept.empty()) throw empty_set_error("implicit description selects no grid points");
    return ClosedSetSample{PointSet(D.dim(), std::move(kept)), std::move(fn)};
}

double ClosedSetSample::pitch() const {
    if (points.size() < 2) return 0.0;
    std::vector<double> nn;
    nn.reserve(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            best = std::min(best, dist(points[i], points[j]));
        }
        nn.push_back(best);
    }
    std::sort(nn.begin(), nn.end());
    return nn[nn.size() / 2];
}

PointSet closest_points(const ClosedSetSample& X, std::span<const double> x, double tol_med) {
    if (!(tol_med > 0)) throw error("closest_points: tol_med must be positive");
    double d = dist_point_set(x, X.points);
    std::vector<Point> hits;
    for (const auto& y : X.points)
        if (dist(x, y) <= d + tol_med) hits.push_back(y);
    return PointSet(X.points.dim(), std::move(hits));
}

double default_tol_med(const ClosedSetSample& X) {
    double p = X.pitch();
    return p > 0 ? 2.0 * p : kTolPt;
}

namespace {

Point snap_to_set(const PointSet& S, std::span<const double> a) {
    double best = std::numeric_limits<double>::infinity();
    Point out;
    for (const auto& y : S) {
        double d = dist(a, y);
        if (d < best) {
            best = d;
            out = y;
        }
    }
    return out;
}

}  // namespace

PointSet n_region(const ClosedSetSample& X, std::span<const double> a, const Domain& D,
                  size_t samples, uint64_t seed, double tol_med) {
    Point aa = snap_to_set(X.points, a);
    Domain::Sample s = D.sample(samples, seed);
    std::vector<Point> hits;
    for (const auto& x : s.points) {
        double d = dist_point_set(x, X.points);
        if (dist(x, aa) <= d + tol_med) hits.push_back(x);
    }
    return PointSet(D.dim(), std::move(hits));
}

MedialAxisEstimate medial_axis(const ClosedSetSample& X, const Domain& D, size_t samples,
                               uint64_t seed, double tol_med) {
    Domain::Sample s = D.sample(samples, seed);
    MedialAxisEstimate est;
    std::vector<const Point*> realizers;
    for (const auto& x : s.points) {
        double nearest = std::numeric_limits<double>::infinity();
        double second = std::numeric_limits<double>::infinity();
        for (const auto& y : X.points) {
            double d = dist(x, y);
            if (d < nearest) {
                second = nearest;
                nearest = d;
            } else if (d < second) {
                second = d;
            }
        }
        realizers.clear();
        for (const auto& y : X.points)
            if (dist(x, y) <= nearest + tol_med) realizers.push_back(&y);
        if (realizers.size() >= 2) {
            double gap = std::isfinite(second) ? second - nearest : 0.0;
            double spread = 0.0;
            for (size_t i = 0; i < realizers.size(); ++i)
                for (size_t j = i + 1; j < realizers.size(); ++j)
                    spread = std::max(spread, dist(*realizers[i], *realizers[j]));
            est.points.push_back({x, static_cast<int>(realizers.size()), gap, spread});
        }
    }
    std::sort(est.points.begin(), est.points.end(),
              [](const auto& a, const auto& b) { return lex_less(a.x, b.x); });
    return est;
}

PointSet MedialAxisEstimate::point_set(int dim) const {
    std::vector<Point> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back(p.x);
    return PointSet(dim, std::move(pts));
}

ClosednessVerdict check_closed(const std::vector<ResolutionScan>& scans, double near_factor,
                               double shrink_factor) {
    if (scans.size() < 2) throw error("check_closed needs scans at two or more resolutions");
    const ResolutionScan& coarse = scans[scans.size() - 2];
    const ResolutionScan& fine = scans.back();
    ClosednessVerdict out;
    if (fine.members.empty() || coarse.members.empty()) return out;
    for (const auto& u : fine.universe) {
        if (fine.members.contains(u, kTolPt)) continue;
        double df = dist_point_set(u, fine.members);
        if (df > near_factor * fine.pitch) continue;
        double dc = dist_point_set(u, coarse.members);
        if (dc < shrink_factor * df) continue;  // boundary is stationary: not an accumulation point
        out.all_witnesses.push_back(u);
        if (!out.witness_found || lex_less(u, out.witness)) {
            out.witness_found = true;
            out.witness = u;
            out.d_fine = df;
            out.d_coarse = dc;
        }
    }
    std::sort(out.all_witnesses.begin(), out.all_witnesses.end(), lex_less);
    return out;
}

bool n_regions_meet(const ClosedSetSample& X, std::span<const double> a, std::span<const double> b,
                    double window_radius, size_t scan_points, double tol_med) {
    size_t n = a.size();
    if (b.size() != n) throw dimension_error("n_regions_meet: dimension mismatch");
    double dab = dist(a, b);
    if (dab <= kTolPt) return true;  // same point of X
    // walk the perpendicular bisector plane through the midpoint; in R^1 the
    // bisector is the midpoint alone, in R^2 a line
    Point mid(n), dir(n, 0.0);
    for (size_t i = 0; i < n; ++i) mid[i] = 0.5 * (a[i] + b[i]);
    if (n == 1) {
        double d = dist_point_set(mid, X.points);
        return std::fabs(mid[0] - a[0]) <= d + tol_med && std::fabs(mid[0] - b[0]) <= d + tol_med;
    }
    if (n != 2) throw error("n_regions_meet supports dimensions 1 and 2");
    dir[0] = -(b[1] - a[1]) / dab;
    dir[1] = (b[0] - a[0]) / dab;
    Point z(2);
    for (size_t k = 0; k < scan_points; ++k) {
        double t = -window_radius + 2.0 * window_radius * k / (scan_points - 1);
        z[0] = mid[0] + t * dir[0];
        z[1] = mid[1] + t * dir[1];
        double d = dist_point_set(z, X.points);
        if (dist(z, a) <= d + tol_med && dist(z, b) <= d + tol_med) return true;
    }
    return false;
}

PointSet n_weak_preimage(const ClosedSetSample& X, std::span<const double> a, double window_radius,
                         size_t scan_points, double tol_med) {
    Point aa = snap_to_set(X.points, a);
    std::vector<Point> members;
    for (const auto& x : X.points)
        if (n_regions_meet(X, aa, x, window_radius, scan_points, tol_med)) members.push_back(x);
    return PointSet(X.points.dim(), std::move(members));
}

MultifunLojaResult medial_loja(const ClosedSetSample& X, std::span<const double> a, const Domain& K,
                               MedialKind kind, SetMetric metric, const MedialLojaOptions& opt) {
    double tol_med = opt.tol_med > 0 ? opt.tol_med : default_tol_med(X);
    if (kind == MedialKind::closest) {
        auto F = SampledMultifunction::from_callback(
            K, opt.k_grid, X.points.dim(),
            [&](const Point& x) { return closest_points(X, x, tol_med); });
        return multifun_loja_fit(F, a, K, PreimageKind::upper, metric);
    }

    // distance-realizer multifunction over the X samples themselves
    Point aa = snap_to_set(X.points, a);
    bool isolated = true;
    for (const auto& y : X.points)
        if (dist(aa, y) > kTolPt && K.contains(y)) { isolated = false; break; }
    if (isolated)
        throw isolated_point_error("realizer multifunction needs a non-isolated base point in K");

    Domain window = opt.n_window.empty() ? K : opt.n_window;
    Domain::Sample zgrid = window.grid(opt.n_window_grid);
    std::vector<Point> domain_pts;
    for (const auto& y : X.points)
        if (K.contains(y)) domain_pts.push_back(y);
    auto F = SampledMultifunction::from_points(
        std::move(domain_pts), window.dim(), [&](const Point& y) {
            std::vector<Point> vals;
            for (const auto& z : zgrid.points) {
                double d = dist_point_set(z, X.points);
                if (dist(z, y) <= d + tol_med) vals.push_back(z);
            }
            return PointSet(window.dim(), std::move(vals));
        });
    return multifun_loja_fit(F, aa, K, PreimageKind::upper, metric);
}

}  // namespace loja
