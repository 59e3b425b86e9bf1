#include "loja/domain.hpp"

#include <cmath>
#include <sstream>

namespace loja {

Domain::Domain(std::vector<double> lo, std::vector<double> hi, std::optional<Guard> guard)
    : lo_(std::move(lo)), hi_(std::move(hi)), guard_(std::move(guard)) {
    if (lo_.size() != hi_.size()) throw dimension_error("domain bounds dimension mismatch");
    for (size_t i = 0; i < lo_.size(); ++i)
        if (!(lo_[i] <= hi_[i])) throw error("domain has lo > hi on axis " + std::to_string(i + 1));
}

Domain Domain::interval(double a, double b) { return Domain({a}, {b}); }

Domain Domain::box2(double ax, double bx, double ay, double by) {
    return Domain({ax, ay}, {bx, by});
}

Domain Domain::parse(const std::string& spec) {
    std::vector<double> lo, hi;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.empty()) continue;
        size_t comma = part.find(',');
        if (comma == std::string::npos) throw error("bad domain spec '" + spec + "': expected a,b pairs");
        try {
            lo.push_back(std::stod(part.substr(0, comma)));
            hi.push_back(std::stod(part.substr(comma + 1)));
        } catch (const std::exception&) {
            throw error("bad domain spec '" + spec + "'");
        }
    }
    if (lo.empty()) throw error("empty domain spec");
    return Domain(std::move(lo), std::move(hi));
}

bool Domain::contains(std::span<const double> x) const {
    if (x.size() != lo_.size()) return false;
    for (size_t i = 0; i < lo_.size(); ++i)
        if (x[i] < lo_[i] || x[i] > hi_[i]) return false;
    if (guard_ && !guard_->holds(x)) return false;
    return true;
}

double Domain::diameter() const {
    double s = 0.0;
    for (size_t i = 0; i < lo_.size(); ++i) s += (hi_[i] - lo_[i]) * (hi_[i] - lo_[i]);
    return std::sqrt(s);
}

double Domain::grid_value(int axis, int k, int m) const {
    if (m < 2) return lo_[axis];
    return lo_[axis] + (static_cast<double>(k) * (hi_[axis] - lo_[axis])) / (m - 1);
}

Domain::Sample Domain::grid(int m_per_axis) const {
    if (empty()) throw error("sampling an empty domain");
    int n = dim();
    int m = std::max(2, m_per_axis);
    Sample out;
    out.grid_count = 0;
    for (int i = 0; i < n; ++i)
        out.pitch = std::max(out.pitch, (hi_[i] - lo_[i]) / (m - 1));

    std::vector<int> idx(n, 0);
    Point p(n);
    for (;;) {
        bool boundary = false;
        for (int i = 0; i < n; ++i) {
            p[i] = grid_value(i, idx[i], m);
            if (idx[i] == 0 || idx[i] == m - 1) boundary = true;
        }
        if (!guard_ || guard_->holds(p)) {
            out.points.push_back(p);
            out.on_boundary.push_back(boundary ? 1 : 0);
        }
        int axis = n - 1;
        while (axis >= 0 && ++idx[axis] == m) idx[axis--] = 0;
        if (axis < 0) break;
    }
    out.grid_count = out.points.size();
    return out;
}

Domain::Sample Domain::sample(size_t total, uint64_t seed) const {
    if (empty()) throw error("sampling an empty domain");
    int n = dim();
    size_t grid_target = std::max<size_t>(2, total / 2);
    int m = n == 1 ? static_cast<int>(grid_target)
                   : std::max(2, static_cast<int>(std::floor(
                                     std::pow(static_cast<double>(grid_target), 1.0 / n) + 1e-9)));
    Sample out = grid(m);

    size_t grid_total = 1;
    for (int i = 0; i < n; ++i) grid_total *= static_cast<size_t>(m);
    size_t randoms = total > grid_total ? total - grid_total : 0;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Point p(n);
    for (size_t r = 0; r < randoms; ++r) {
        for (int i = 0; i < n; ++i) p[i] = lo_[i] + unit(rng) * (hi_[i] - lo_[i]);
        if (!guard_ || guard_->holds(p)) {
            out.points.push_back(p);
            out.on_boundary.push_back(0);
        }
    }
    return out;
}

std::vector<OverlapWarning> overlapping_guards(const PiecewiseFn& fn, const Domain& D,
                                               size_t samples, uint64_t seed, size_t max_warnings) {
    std::vector<OverlapWarning> out;
    const auto& branches = fn.branches();
    Domain::Sample s = D.sample(samples, seed);
    for (const auto& x : s.points) {
        size_t first = branches.size();
        for (size_t i = 0; i < branches.size(); ++i) {
            bool holds;
            try {
                holds = branches[i].matches(x);
            } catch (const error&) {
                continue;
            }
            if (!holds) continue;
            if (first == branches.size()) {
                first = i;
            } else {
                out.push_back({x, first, i});
                break;
            }
        }
        if (out.size() >= max_warnings) break;
    }
    return out;
}

}  // namespace loja
