#pragma once

#include <span>
#include <string>
#include <vector>

#include "loja/domain.hpp"

namespace loja {

inline constexpr double kTolPt = 1e-9;      // point identity tolerance
inline constexpr double kTolSphere = 1e-9;  // unit-norm tolerance on the sphere
inline constexpr double kTolPole = 1e-12;   // projection pole exclusion

struct empty_set_error : error {
    using error::error;
};

struct pole_error : error {
    using error::error;
};

double dist(std::span<const double> a, std::span<const double> b);
bool lex_less(const Point& a, const Point& b);

/// Finite set of points in R^n, stored lexicographically sorted and
/// deduplicated within tol_pt.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(int dim) : dim_(dim) {}
    PointSet(int dim, std::vector<Point> pts, double tol_pt = kTolPt);

    static PointSet single(Point p);
    static PointSet from_csv(const std::string& path);
    void to_csv(const std::string& path) const;

    int dim() const { return dim_; }
    bool empty() const { return pts_.empty(); }
    size_t size() const { return pts_.size(); }
    const Point& operator[](size_t i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    bool contains(std::span<const double> p, double tol = kTolPt) const;

private:
    int dim_ = 0;
    std::vector<Point> pts_;
};

/// min over a in A of |x - a|; throws on empty A or dimension mismatch.
double dist_point_set(std::span<const double> x, const PointSet& A);

/// sup over a in A of d(a, B); throws when either set is empty.
double directed_hausdorff(const PointSet& A, const PointSet& B);

/// Hausdorff metric on nonempty finite sets, exact pairwise computation.
double hausdorff(const PointSet& A, const PointSet& B);

/// Extended Hausdorff: ambient_diam + 1 when exactly one set is empty,
/// 0 when both are empty.
double hausdorff_ext(const PointSet& A, const PointSet& B, double ambient_diam);

bool subset_within(const PointSet& A, const PointSet& B, double tol);
bool sets_equal_within(const PointSet& A, const PointSet& B, double tol);

/// Stereographic projection from the north pole of S^n onto R^n (the
/// hyperplane x_{n+1} = -1 with the last coordinate dropped). The input is a
/// point of R^{n+1} on the unit sphere with x_{n+1} < 1 - kTolPole.
std::vector<double> stereo_project(std::span<const double> x);

/// Inverse of stereo_project; maps R^n onto S^n minus the north pole.
/// stereo_lift(y) = (4 y / (|y|^2 + 4), (|y|^2 - 4) / (|y|^2 + 4)).
std::vector<double> stereo_lift(std::span<const double> y);

/// Finite subset of the unit sphere S^n in R^{n+1}; construction validates
/// unit norms within tol_sphere.
class SpherePointSet {
public:
    SpherePointSet() = default;
    SpherePointSet(int ambient_dim, std::vector<Point> pts, double tol_sphere = kTolSphere);

    /// Lifts a planar set and adjoins the north pole.
    static SpherePointSet lift_with_pole(const PointSet& A, int ambient_dim);

    const PointSet& points() const { return pts_; }

private:
    PointSet pts_;
};

/// Metric on finite samples of closed subsets of R^n (including the empty
/// set): Hausdorff distance between stereographic lifts with the north pole
/// adjoined. Exactly one empty input gives diam S^n + 1 = 3; two empty
/// inputs give 0.
double kuratowski_dist(const PointSet& K, const PointSet& L);

}  // namespace loja
