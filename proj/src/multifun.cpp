#include "loja/multifun.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"

namespace loja {

SampledMultifunction::SampledMultifunction(int domain_dim, int value_dim, std::vector<Point> samples,
                                           std::vector<PointSet> values)
    : domain_dim_(domain_dim), value_dim_(value_dim) {
    if (samples.size() != values.size()) throw error("multifunction: samples/values length mismatch");
    for (size_t i = 0; i < samples.size(); ++i) {
        if (static_cast<int>(samples[i].size()) != domain_dim)
            throw dimension_error("multifunction domain sample dimension mismatch");
        if (values[i].empty()) continue;  // outside dom F
        if (values[i].dim() != value_dim)
            throw dimension_error("multifunction value dimension mismatch");
        samples_.push_back(std::move(samples[i]));
        values_.push_back(std::move(values[i]));
    }
}

SampledMultifunction SampledMultifunction::from_branches(const std::vector<PiecewiseFn>& branches,
                                                         const Domain& D, int m_per_axis) {
    if (branches.empty()) throw error("multifunction needs at least one branch");
    Domain::Sample s = D.grid(m_per_axis);
    std::vector<Point> samples;
    std::vector<PointSet> values;
    for (const auto& x : s.points) {
        std::vector<Point> vals;
        for (const auto& b : branches) {
            if (!b.defined_at(x)) continue;
            try {
                vals.push_back({b.eval(x)});
            } catch (const eval_error&) {
            }
        }
        samples.push_back(x);
        values.emplace_back(1, std::move(vals));
    }
    SampledMultifunction F(D.dim(), 1, std::move(samples), std::move(values));
    F.generator_ = branches;
    return F;
}

PointSet SampledMultifunction::regenerate(std::span<const double> x) const {
    if (generator_.empty()) throw error("multifunction has no generator");
    std::vector<Point> vals;
    for (const auto& b : generator_) {
        if (!b.defined_at(x)) continue;
        try {
            vals.push_back({b.eval(x)});
        } catch (const eval_error&) {
        }
    }
    return PointSet(1, std::move(vals));
}

SampledMultifunction SampledMultifunction::from_callback(const Domain& D, int m_per_axis, int value_dim,
                                                         const std::function<PointSet(const Point&)>& fn) {
    Domain::Sample s = D.grid(m_per_axis);
    return from_points(std::move(s.points), value_dim, fn);
}

SampledMultifunction SampledMultifunction::from_points(std::vector<Point> pts, int value_dim,
                                                       const std::function<PointSet(const Point&)>& fn) {
    if (pts.empty()) throw error("multifunction needs domain samples");
    std::vector<PointSet> values;
    values.reserve(pts.size());
    for (const auto& x : pts) values.push_back(fn(x));
    int ddim = static_cast<int>(pts[0].size());
    return SampledMultifunction(ddim, value_dim, std::move(pts), std::move(values));
}

SampledMultifunction SampledMultifunction::from_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open multifunction file: " + path);
    std::vector<Point> samples;
    std::vector<PointSet> values;
    int ddim = 0, vdim = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        Point x = j.at("x").get<Point>();
        std::vector<Point> vals;
        for (const auto& v : j.at("values")) vals.push_back(v.get<Point>());
        if (ddim == 0) ddim = static_cast<int>(x.size());
        if (vdim == 0 && !vals.empty()) vdim = static_cast<int>(vals[0].size());
        samples.push_back(std::move(x));
        values.emplace_back(vdim == 0 ? 1 : vdim, std::move(vals));
    }
    if (vdim == 0) vdim = 1;
    return SampledMultifunction(ddim, vdim, std::move(samples), std::move(values));
}

void SampledMultifunction::to_jsonl(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw error("cannot write multifunction file: " + path);
    for (size_t i = 0; i < samples_.size(); ++i) {
        nlohmann::ordered_json j;
        j["x"] = samples_[i];
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : values_[i]) arr.push_back(v);
        j["values"] = std::move(arr);
        out << j.dump() << "\n";
    }
}

size_t SampledMultifunction::locate(std::span<const double> a, double tol) const {
    double best = std::numeric_limits<double>::infinity();
    size_t best_i = samples_.size();
    for (size_t i = 0; i < samples_.size(); ++i) {
        double d = dist(a, samples_[i]);
        if (d < best) {
            best = d;
            best_i = i;
        }
    }
    if (best_i == samples_.size() || best > tol)
        throw domain_error("point is not in dom F at sampling resolution");
    return best_i;
}

const PointSet& SampledMultifunction::value_at(std::span<const double> a, double tol) const {
    return values_[locate(a, tol)];
}

std::vector<double> default_radii(double r0, int count) {
    std::vector<double> r(count);
    for (int i = 0; i < count; ++i) r[i] = r0 * std::pow(0.5, i);
    return r;
}

LimitEstimate kuratowski_limits(const SampledMultifunction& F, std::span<const double> a,
                                const std::vector<double>& radii, double tol_cluster) {
    if (radii.empty()) throw error("kuratowski_limits: no radii");
    std::vector<double> sorted_radii = radii;
    std::sort(sorted_radii.begin(), sorted_radii.end(), std::greater<double>());

    // shells are punctured balls around a; keep the nonempty prefix
    std::vector<std::vector<size_t>> shells;
    std::vector<double> used;
    for (double r : sorted_radii) {
        std::vector<size_t> shell;
        for (size_t i = 0; i < F.size(); ++i) {
            double d = dist(a, F.samples()[i]);
            if (d > kTolPt && d <= r) shell.push_back(i);
        }
        if (shell.empty()) break;
        shells.push_back(std::move(shell));
        used.push_back(r);
    }
    if (shells.empty())
        throw isolated_point_error("no domain samples near the point: limits undefined");

    // candidate values are all value points seen in the outermost shell
    std::vector<Point> cands;
    for (size_t i : shells[0])
        for (const auto& y : F.value(i)) cands.push_back(y);
    PointSet candidates(F.value_dim(), std::move(cands), tol_cluster * 1e-3);

    auto min_over_shell = [&](const Point& y, const std::vector<size_t>& shell) {
        double m = std::numeric_limits<double>::infinity();
        for (size_t i : shell) m = std::min(m, dist_point_set(y, F.value(i)));
        return m;
    };
    auto max_over_shell = [&](const Point& y, const std::vector<size_t>& shell) {
        double m = 0.0;
        for (size_t i : shell) m = std::max(m, dist_point_set(y, F.value(i)));
        return m;
    };

    auto estimate_at = [&](size_t shell_count) {
        std::vector<Point> sup_pts, inf_pts;
        for (const auto& y : candidates) {
            bool in_sup = true;
            for (size_t k = 0; k < shell_count && in_sup; ++k)
                if (min_over_shell(y, shells[k]) > tol_cluster) in_sup = false;
            if (in_sup) sup_pts.push_back(y);
            if (max_over_shell(y, shells[shell_count - 1]) <= tol_cluster) inf_pts.push_back(y);
        }
        std::pair<PointSet, PointSet> out{PointSet(F.value_dim(), inf_pts),
                                          PointSet(F.value_dim(), sup_pts)};
        return out;
    };

    LimitEstimate est;
    est.radii_used = used;
    auto final_est = estimate_at(shells.size());
    est.liminf = std::move(final_est.first);
    est.limsup = std::move(final_est.second);
    if (shells.size() >= 2) {
        auto prev = estimate_at(shells.size() - 1);
        double dsup = hausdorff_ext(prev.second, est.limsup, 2.0);
        double dinf = hausdorff_ext(prev.first, est.liminf, 2.0);
        est.converged = std::max(dsup, dinf) <= tol_cluster;
    }
    return est;
}

SemicontinuityFlags classify_semicontinuity(const SampledMultifunction& F, std::span<const double> a,
                                            const std::vector<double>& radii, double tol_cluster) {
    const PointSet& fa = F.value_at(a);
    LimitEstimate lim = kuratowski_limits(F, a, radii, tol_cluster);
    // limit members sit within tol_cluster of a value in the innermost shell,
    // which itself spreads around the true limit; compare with matching slack
    double tol_set = 1.5 * tol_cluster;
    SemicontinuityFlags flags;
    flags.outer = subset_within(lim.limsup, fa, tol_set);
    flags.inner = subset_within(fa, lim.liminf, tol_set);
    flags.upper = flags.outer && subset_within(fa, lim.limsup, tol_set);
    flags.lower = flags.inner && subset_within(lim.liminf, fa, tol_set);
    flags.continuous = flags.upper && flags.lower;
    return flags;
}

PreimageKind preimage_kind_from_string(const std::string& s) {
    if (s == "strong") return PreimageKind::strong;
    if (s == "lower") return PreimageKind::lower;
    if (s == "upper") return PreimageKind::upper;
    if (s == "weak") return PreimageKind::weak;
    throw error("unknown preimage kind: " + s);
}

std::string to_string(PreimageKind k) {
    switch (k) {
        case PreimageKind::strong: return "strong";
        case PreimageKind::lower: return "lower";
        case PreimageKind::upper: return "upper";
        case PreimageKind::weak: return "weak";
    }
    return "?";
}

namespace {

bool sets_meet(const PointSet& A, const PointSet& B, double tol) {
    for (const auto& a : A)
        if (B.contains(a, tol)) return true;
    return false;
}

}  // namespace

PointSet preimage(const SampledMultifunction& F, std::span<const double> a, PreimageKind kind,
                  double tol) {
    const PointSet& fa = F.value_at(a);
    std::vector<Point> members;
    for (size_t i = 0; i < F.size(); ++i) {
        const PointSet& fx = F.value(i);
        bool in = false;
        switch (kind) {
            case PreimageKind::strong: in = sets_equal_within(fx, fa, tol); break;
            case PreimageKind::lower: in = subset_within(fx, fa, tol); break;
            case PreimageKind::upper: in = subset_within(fa, fx, tol); break;
            case PreimageKind::weak: in = sets_meet(fx, fa, tol); break;
        }
        if (in) members.push_back(F.samples()[i]);
    }
    return PointSet(F.domain_dim(), std::move(members));
}

SetMetric set_metric_from_string(const std::string& s) {
    if (s == "hausdorff") return SetMetric::hausdorff;
    if (s == "kuratowski") return SetMetric::kuratowski;
    throw error("unknown set metric: " + s);
}

double set_distance(const PointSet& A, const PointSet& B, SetMetric metric) {
    if (metric == SetMetric::kuratowski) return kuratowski_dist(A, B);
    return hausdorff(A, B);
}

MultifunLojaResult multifun_loja_fit(const SampledMultifunction& F, std::span<const double> a,
                                     const Domain& K, PreimageKind kind, SetMetric metric,
                                     const FitOptions& fit_opt, const StarOptions& star_opt) {
    MultifunLojaResult out;
    if (!K.contains(a)) throw error("base point lies outside K");
    const PointSet& fa = F.value_at(a);
    out.preimage_set = preimage(F, a, kind);
    if (out.preimage_set.empty()) throw error("preimage is empty");  // cannot happen: a belongs to it

    std::vector<double> fvals, gvals;
    std::vector<Point> pts;
    for (size_t i = 0; i < F.size(); ++i) {
        const Point& x = F.samples()[i];
        if (!K.contains(x)) continue;
        fvals.push_back(set_distance(F.value(i), fa, metric));
        gvals.push_back(dist_point_set(x, out.preimage_set));
        pts.push_back(x);
    }
    if (fvals.empty()) throw error("no multifunction samples inside K");
    out.fit = fit_value_pairs(fvals, gvals, &pts, fit_opt);
    out.star = check_star_pairs(fvals, gvals, pts, star_opt);
    return out;
}

}  // namespace loja
