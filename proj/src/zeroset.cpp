#include "loja/zeroset.hpp"

#include <algorithm>
#include <cmath>

namespace loja {

ZeroSetEstimate gamma_zero_set(const PiecewiseFn& f, const Domain& D, const ZeroSetOptions& opt) {
    if (D.empty()) throw error("gamma_zero_set: empty domain");
    if (!(opt.eps > 0.0) || !(opt.delta > 0.0)) throw error("gamma_zero_set: eps and delta must be positive");

    Domain::Sample s = D.sample(opt.samples, opt.seed);

    struct Raw {
        Point x;
        double f_abs;
    };
    std::vector<Raw> raw;
    std::vector<Point> boundary;
    for (size_t i = 0; i < s.points.size(); ++i) {
        const Point& x = s.points[i];
        if (s.on_boundary[i]) boundary.push_back(x);
        double v;
        try {
            v = f.eval(x);
        } catch (const domain_error&) {
            continue;  // outside dom f
        } catch (const eval_error&) {
            continue;
        }
        if (!std::isfinite(v)) continue;
        if (std::fabs(v) <= opt.eps) raw.push_back({x, std::fabs(v)});
    }
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return lex_less(a.x, b.x); });

    // greedy delta-net over the sorted raw candidates: every raw candidate is
    // within delta of some representative
    struct Rep {
        Point x;
        Point witness;
        double f_abs;
    };
    std::vector<Rep> reps;
    for (const auto& r : raw) {
        bool assigned = false;
        for (auto& rep : reps) {
            if (dist(r.x, rep.x) <= opt.delta) {
                if (r.f_abs < rep.f_abs) {
                    rep.witness = r.x;
                    rep.f_abs = r.f_abs;
                }
                assigned = true;
                break;
            }
        }
        if (!assigned) reps.push_back({r.x, r.x, r.f_abs});
    }

    // boundary grid points approached by candidates: limit zeros on the
    // closure that the threshold test itself cannot pick up
    for (const auto& b : boundary) {
        double best = std::numeric_limits<double>::infinity();
        const Raw* near = nullptr;
        for (const auto& r : raw) {
            double d = dist(b, r.x);
            if (d < best) {
                best = d;
                near = &r;
            }
        }
        if (!near || best > opt.delta) continue;
        bool present = false;
        for (const auto& rep : reps)
            if (dist(b, rep.x) <= kTolPt) { present = true; break; }
        if (!present) reps.push_back({b, near->x, near->f_abs});
    }

    std::sort(reps.begin(), reps.end(), [](const Rep& a, const Rep& b) { return lex_less(a.x, b.x); });

    ZeroSetEstimate est;
    est.eps = opt.eps;
    est.delta = opt.delta;
    est.pitch = s.pitch;
    est.sample_count = s.points.size();
    est.raw_candidate_count = raw.size();
    std::vector<Point> pts;
    pts.reserve(reps.size());
    for (const auto& rep : reps) {
        pts.push_back(rep.x);
        est.witnesses.push_back({rep.witness, rep.f_abs});
    }
    est.candidates = PointSet(D.dim(), std::move(pts));  // reps already sorted and distinct
    return est;
}

InclusionCheck zero_inclusion(const ZeroSetEstimate& est, const PiecewiseFn& g, double tol_incl) {
    InclusionCheck out;
    for (const auto& x : est.candidates) {
        double v;
        try {
            v = g.eval(x);
        } catch (const error&) {
            continue;
        }
        if (std::fabs(v) > tol_incl) {
            out.holds = false;
            out.violator = x;
            out.g_at_violator = v;
            return out;
        }
    }
    return out;
}

}  // namespace loja
