#pragma once

#include <functional>
#include <optional>

#include "loja/lojafit.hpp"

namespace loja {

struct isolated_point_error : error {
    using error::error;
};

inline constexpr double kTolCluster = 1e-2;  // value matching tolerance for limits

/// Finite map from domain samples to finite value sets. Samples with an empty
/// value set are dropped on construction: the stored samples are dom F.
class SampledMultifunction {
public:
    SampledMultifunction() = default;
    SampledMultifunction(int domain_dim, int value_dim, std::vector<Point> samples,
                         std::vector<PointSet> values);

    /// F(x) = set of branch values at x; branches undefined at x contribute
    /// nothing. Domain samples form a grid with m points per axis.
    static SampledMultifunction from_branches(const std::vector<PiecewiseFn>& branches,
                                              const Domain& D, int m_per_axis);

    /// Domain samples mapped through a value-set callback (empty set = outside
    /// dom F).
    static SampledMultifunction from_callback(const Domain& D, int m_per_axis, int value_dim,
                                              const std::function<PointSet(const Point&)>& fn);
    static SampledMultifunction from_points(std::vector<Point> samples, int value_dim,
                                            const std::function<PointSet(const Point&)>& fn);

    static SampledMultifunction from_jsonl(const std::string& path);
    void to_jsonl(const std::string& path) const;

    int domain_dim() const { return domain_dim_; }
    int value_dim() const { return value_dim_; }
    size_t size() const { return samples_.size(); }
    const std::vector<Point>& samples() const { return samples_; }
    const PointSet& value(size_t i) const { return values_[i]; }

    /// Index of the domain sample within tol of a; throws domain_error when a
    /// is not in dom F at sampling resolution.
    size_t locate(std::span<const double> a, double tol = kTolPt) const;
    const PointSet& value_at(std::span<const double> a, double tol = kTolPt) const;

    /// Branch functions retained by from_branches; empty when the values were
    /// supplied directly.
    const std::vector<PiecewiseFn>& generator() const { return generator_; }
    bool has_generator() const { return !generator_.empty(); }

    /// Re-evaluates the generator at an arbitrary point (possibly outside the
    /// stored samples). Stored values agree with regenerated ones.
    PointSet regenerate(std::span<const double> x) const;

private:
    int domain_dim_ = 0;
    int value_dim_ = 0;
    std::vector<Point> samples_;
    std::vector<PointSet> values_;
    std::vector<PiecewiseFn> generator_;
};

std::vector<double> default_radii(double r0 = 0.5, int count = 13);

/// Kuratowski limit estimates from shrinking punctured balls around a.
struct LimitEstimate {
    PointSet liminf;
    PointSet limsup;
    std::vector<double> radii_used;
    bool converged = false;
};

LimitEstimate kuratowski_limits(const SampledMultifunction& F, std::span<const double> a,
                                const std::vector<double>& radii = default_radii(),
                                double tol_cluster = kTolCluster);

struct SemicontinuityFlags {
    bool outer = false;   // limsup inside F(a)
    bool inner = false;   // F(a) inside liminf
    bool upper = false;   // limsup equals F(a)
    bool lower = false;   // liminf equals F(a)
    bool continuous = false;
    bool none() const { return !(outer || inner || upper || lower); }
};

SemicontinuityFlags classify_semicontinuity(const SampledMultifunction& F, std::span<const double> a,
                                            const std::vector<double>& radii = default_radii(),
                                            double tol_cluster = kTolCluster);

enum class PreimageKind { strong, lower, upper, weak };

PreimageKind preimage_kind_from_string(const std::string& s);
std::string to_string(PreimageKind k);

/// Domain samples x with, respectively: F(x) == F(a); F(x) subset of F(a);
/// F(a) subset of F(x); F(x) meets F(a) — all within tol_pt.
PointSet preimage(const SampledMultifunction& F, std::span<const double> a, PreimageKind kind,
                  double tol = kTolPt);

enum class SetMetric { hausdorff, kuratowski };

SetMetric set_metric_from_string(const std::string& s);

double set_distance(const PointSet& A, const PointSet& B, SetMetric metric);

/// Per-sample pairs (dist(F(x), F(a)), d(x, preimage)) feeding the envelope
/// fit; feasibility with positive C is the sampled verdict for the
/// corresponding inequality.
struct MultifunLojaResult {
    PowerLawFit fit;
    PointSet preimage_set;
    StarCheck star;
};

MultifunLojaResult multifun_loja_fit(const SampledMultifunction& F, std::span<const double> a,
                                     const Domain& K, PreimageKind kind, SetMetric metric,
                                     const FitOptions& fit_opt = {}, const StarOptions& star_opt = {});

}  // namespace loja
