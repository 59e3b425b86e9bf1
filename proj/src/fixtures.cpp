#include "loja/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace loja::fixtures {

std::vector<std::string> tags() {
    return {"ex3_8", "ex3_9", "ex4_9", "ex5_14", "ex5_16", "ex5_18",
            "ex6_4", "ex6_6", "prop6_circle", "twopoint"};
}

bool has_tag(const std::string& tag) {
    auto t = tags();
    return std::find(t.begin(), t.end(), tag) != t.end();
}

FunctionPair ex3_8() {
    FunctionPair fx;
    fx.f = parse_function("x1", 1);
    fx.g = parse_function("piecewise{ x1 < 1 : 1/(1 - x1) ; x1 == 1 : 1 }", 1);
    fx.domain = Domain::interval(0.0, 1.0);
    return fx;
}

FunctionPair ex3_9() {
    FunctionPair fx;
    fx.f = parse_function("0", 1);
    fx.g = parse_function("piecewise{ x1 > 0 : 0 ; x1 == 0 : 1 }", 1);
    fx.domain = Domain::interval(0.0, 1.0);
    return fx;
}

FunctionPair ex4_9(int m_ceiling) {
    if (m_ceiling < 1) throw error("ex4_9 needs M >= 1");
    FunctionPair fx;
    fx.g = parse_function("x1 - floor(x1)", 1);
    // one branch per unit interval; the exponent is constant on each
    std::ostringstream src;
    src << "piecewise{ x1 < 1 : 1";
    for (int n = 1; n < m_ceiling; ++n)
        src << " ; x1 < " << (n + 1) << " : (x1 - " << n << ")^" << n;
    src << " ; x1 == " << m_ceiling << " : 0 }";
    fx.f = parse_function(src.str(), 1);
    fx.domain = Domain::interval(0.0, static_cast<double>(m_ceiling));
    return fx;
}

SampledMultifunction MultifunctionFixture::build() const {
    return SampledMultifunction::from_branches(branches, domain, grid_per_axis);
}

MultifunctionFixture ex5_14() {
    MultifunctionFixture fx;
    fx.branches.push_back(parse_function(
        "piecewise{ x1 > 0 && x1 < 4 : sqrt(x1) ; x1 == 4 : 2 ; x1 > 4 && x1 < 5 : 5 - x1 }", 1));
    fx.branches.push_back(parse_function("piecewise{ x1 == 4 : 1 }", 1));
    fx.domain = Domain::interval(0.0, 5.0);
    fx.grid_per_axis = 5001;  // pitch 1e-3; hits 1 and 4 exactly
    return fx;
}

MultifunctionFixture ex5_16() {
    MultifunctionFixture fx;
    fx.branches.push_back(parse_function("piecewise{ x1 >= -1 && x1 < 4 : (x1 - 2)^2 }", 1));
    fx.branches.push_back(parse_function("piecewise{ x1 >= -1 && x1 <= 6 : 1 }", 1));
    fx.branches.push_back(parse_function("piecewise{ x1 >= -1 && x1 <= 6 : 2 }", 1));
    fx.domain = Domain::interval(-1.0, 6.0);
    fx.grid_per_axis = 7001;  // pitch 1e-3; hits 0 and 4 exactly
    return fx;
}

MultifunctionFixture ex5_18() {
    MultifunctionFixture fx;
    fx.branches.push_back(parse_function("piecewise{ x1 > -1 && x1 <= 1 : x1^2 }", 1));
    fx.branches.push_back(parse_function("piecewise{ x1 > -1 && x1 <= 1 : x1^2 + 1 }", 1));
    fx.domain = Domain::interval(-1.0, 1.0);
    fx.grid_per_axis = 5000;  // even count: no sample lands on 0
    return fx;
}

ClosedSetFixture ex6_4() {
    ClosedSetFixture fx;
    fx.X = ClosedSetSample::from_points({{0.0}, {1.0}});
    fx.domain = Domain::interval(0.0, 1.0);
    return fx;
}

ClosedSetFixture ex6_6(double arc_pitch) {
    if (!(arc_pitch > 0) || arc_pitch > 0.25) throw error("ex6_6 arc pitch out of range");
    std::vector<Point> pts;
    pts.push_back({0.0, 0.0});
    int steps = static_cast<int>(std::lround(0.5 / arc_pitch));
    for (int k = 0; k <= steps; ++k) {
        double x = 0.5 + (static_cast<double>(k) * 0.5) / steps;
        pts.push_back({x, -(x - 1.0) * (x - 1.0)});
    }
    ClosedSetFixture fx;
    fx.X = ClosedSetSample::from_points(std::move(pts));
    fx.domain = Domain::box2(-2.0, 2.0, -2.0, 2.0);
    return fx;
}

ClosedSetFixture prop6_circle(int points) {
    if (points < 3) throw error("circle sample needs at least 3 points");
    std::vector<Point> pts;
    pts.reserve(points);
    for (int k = 0; k < points; ++k) {
        double th = 2.0 * M_PI * k / points;
        pts.push_back({std::cos(th), std::sin(th)});
    }
    ClosedSetFixture fx;
    fx.X = ClosedSetSample::from_points(std::move(pts));
    fx.domain = Domain::box2(-0.9, 0.9, -0.9, 0.9);
    return fx;
}

ClosedSetFixture twopoint() {
    ClosedSetFixture fx;
    fx.X = ClosedSetSample::from_points({{-1.0, 0.0}, {1.0, 0.0}});
    fx.domain = Domain::box2(-2.0, 2.0, -2.0, 2.0);
    return fx;
}

}  // namespace loja::fixtures
