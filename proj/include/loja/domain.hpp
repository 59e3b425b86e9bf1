#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "loja/expr.hpp"

namespace loja {

using Point = std::vector<double>;

/// Axis-aligned box in R^n with an optional guard predicate. Sampling
/// produces a deterministic inclusive grid (boundary points always present)
/// plus seeded uniform random points.
class Domain {
public:
    Domain() = default;
    Domain(std::vector<double> lo, std::vector<double> hi, std::optional<Guard> guard = std::nullopt);

    static Domain interval(double a, double b);
    static Domain box2(double ax, double bx, double ay, double by);

    /// Parses "a1,b1;a2,b2;...".
    static Domain parse(const std::string& spec);

    int dim() const { return static_cast<int>(lo_.size()); }
    const std::vector<double>& lo() const { return lo_; }
    const std::vector<double>& hi() const { return hi_; }
    const std::optional<Guard>& guard() const { return guard_; }
    bool empty() const { return lo_.empty(); }

    bool contains(std::span<const double> x) const;
    double diameter() const;

    /// Inclusive per-axis grid value: lo + (k*(hi-lo))/(m-1), exact at friendly
    /// endpoints and interior lattice fractions.
    double grid_value(int axis, int k, int m) const;

    struct Sample {
        std::vector<Point> points;      // grid points first, then random points
        double pitch = 0.0;             // largest per-axis grid spacing
        size_t grid_count = 0;
        std::vector<uint8_t> on_boundary;  // flags aligned with points
    };

    /// Full tensor grid with m points per axis (m >= 2); guard-filtered.
    Sample grid(int m_per_axis) const;

    /// Roughly half grid / half random, `total` points before guard filtering.
    Sample sample(size_t total, uint64_t seed) const;

private:
    std::vector<double> lo_, hi_;
    std::optional<Guard> guard_;
};

struct OverlapWarning {
    Point x;
    size_t branch_a = 0;
    size_t branch_b = 0;
};

/// Lint pass: sample points of D where two or more branch guards hold.
/// Evaluation is well-defined anyway (first match wins), but overlapping
/// guards make branch order significant.
std::vector<OverlapWarning> overlapping_guards(const PiecewiseFn& fn, const Domain& D,
                                               size_t samples, uint64_t seed, size_t max_warnings = 16);

}  // namespace loja
