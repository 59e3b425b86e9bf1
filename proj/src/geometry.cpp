#include "loja/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace loja {

double dist(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw dimension_error("point dimension mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

bool lex_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PointSet::PointSet(int dim, std::vector<Point> pts, double tol_pt) : dim_(dim) {
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != dim)
            throw dimension_error("point of dimension " + std::to_string(p.size()) +
                                  " in set of dimension " + std::to_string(dim));
    std::sort(pts.begin(), pts.end(), lex_less);
    // exact pairwise dedup for small sets, adjacent dedup for large ones
    // (large sets come from grids that are already well separated)
    if (pts.size() <= 4096) {
        for (const auto& p : pts) {
            bool dup = false;
            for (const auto& q : pts_)
                if (dist(p, q) <= tol_pt) { dup = true; break; }
            if (!dup) pts_.push_back(p);
        }
    } else {
        for (const auto& p : pts) {
            if (!pts_.empty() && dist(p, pts_.back()) <= tol_pt) continue;
            pts_.push_back(p);
        }
    }
}

PointSet PointSet::single(Point p) {
    int d = static_cast<int>(p.size());
    return PointSet(d, {std::move(p)});
}

PointSet PointSet::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open point file: " + path);
    std::vector<Point> pts;
    int dim = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("dim=");
            if (pos != std::string::npos) dim = std::stoi(line.substr(pos + 4));
            continue;
        }
        Point p;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) p.push_back(std::stod(field));
        if (!p.empty()) pts.push_back(std::move(p));
    }
    if (pts.empty()) return dim > 0 ? PointSet(dim) : PointSet();
    if (dim == 0) dim = static_cast<int>(pts[0].size());
    return PointSet(dim, std::move(pts));
}

void PointSet::to_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw error("cannot write point file: " + path);
    out << "# dim=" << dim_ << "\n";
    out.precision(17);
    for (const auto& p : pts_) {
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) out << ",";
            out << p[i];
        }
        out << "\n";
    }
}

bool PointSet::contains(std::span<const double> p, double tol) const {
    for (const auto& q : pts_)
        if (dist(p, q) <= tol) return true;
    return false;
}

double dist_point_set(std::span<const double> x, const PointSet& A) {
    if (A.empty()) throw empty_set_error("distance to an empty set");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : A) best = std::min(best, dist(x, a));
    return best;
}

double directed_hausdorff(const PointSet& A, const PointSet& B) {
    if (A.empty() || B.empty()) throw empty_set_error("directed Hausdorff needs nonempty sets");
    double worst = 0.0;
    for (const auto& a : A) worst = std::max(worst, dist_point_set(a, B));
    return worst;
}

double hausdorff(const PointSet& A, const PointSet& B) {
    if (A.empty() || B.empty())
        throw empty_set_error("hausdorff needs nonempty sets; use hausdorff_ext for the empty convention");
    if (A.dim() != B.dim()) throw dimension_error("hausdorff dimension mismatch");
    return std::max(directed_hausdorff(A, B), directed_hausdorff(B, A));
}

double hausdorff_ext(const PointSet& A, const PointSet& B, double ambient_diam) {
    if (ambient_diam < 0) throw error("ambient diameter must be non-negative");
    if (A.empty() && B.empty()) return 0.0;
    if (A.empty() || B.empty()) return ambient_diam + 1.0;
    return hausdorff(A, B);
}

bool subset_within(const PointSet& A, const PointSet& B, double tol) {
    if (A.empty()) return true;
    if (B.empty()) return false;
    return directed_hausdorff(A, B) <= tol;
}

bool sets_equal_within(const PointSet& A, const PointSet& B, double tol) {
    if (A.empty() && B.empty()) return true;
    if (A.empty() || B.empty()) return false;
    return hausdorff(A, B) <= tol;
}

std::vector<double> stereo_project(std::span<const double> x) {
    if (x.size() < 2) throw dimension_error("sphere point needs dimension >= 2");
    double last = x.back();
    if (last >= 1.0 - kTolPole) throw pole_error("stereographic projection at the pole");
    std::vector<double> y(x.size() - 1);
    for (size_t i = 0; i + 1 < x.size(); ++i) y[i] = -2.0 * x[i] / (last - 1.0);
    return y;
}

std::vector<double> stereo_lift(std::span<const double> y) {
    double n2 = 0.0;
    for (double v : y) n2 += v * v;
    std::vector<double> x(y.size() + 1);
    double denom = n2 + 4.0;
    for (size_t i = 0; i < y.size(); ++i) x[i] = 4.0 * y[i] / denom;
    x.back() = (n2 - 4.0) / denom;
    return x;
}

SpherePointSet::SpherePointSet(int ambient_dim, std::vector<Point> pts, double tol_sphere) {
    for (const auto& p : pts) {
        double n = dist(p, Point(p.size(), 0.0));
        if (std::fabs(n - 1.0) > tol_sphere)
            throw error("sphere point has norm " + std::to_string(n));
    }
    pts_ = PointSet(ambient_dim, std::move(pts));
}

SpherePointSet SpherePointSet::lift_with_pole(const PointSet& A, int ambient_dim) {
    std::vector<Point> lifted;
    lifted.reserve(A.size() + 1);
    for (const auto& p : A) lifted.push_back(stereo_lift(p));
    Point pole(ambient_dim, 0.0);
    pole.back() = 1.0;
    lifted.push_back(std::move(pole));
    return SpherePointSet(ambient_dim, std::move(lifted));
}

double kuratowski_dist(const PointSet& K, const PointSet& L) {
    if (K.empty() && L.empty()) return 0.0;
    if (K.empty() || L.empty()) return 3.0;  // diam S^n + 1
    if (K.dim() != L.dim()) throw dimension_error("kuratowski_dist dimension mismatch");
    int ambient = K.dim() + 1;
    SpherePointSet hk = SpherePointSet::lift_with_pole(K, ambient);
    SpherePointSet hl = SpherePointSet::lift_with_pole(L, ambient);
    return hausdorff(hk.points(), hl.points());
}

}  // namespace loja
