#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "loja/fixtures.hpp"
#include "loja/zeroset.hpp"

using namespace loja;

namespace {

double hausdorff_to_interval(const PointSet& est, double a, double b) {
    REQUIRE(!est.empty());
    double sup_out = 0.0;
    for (const auto& p : est) sup_out = std::max(sup_out, std::max({a - p[0], p[0] - b, 0.0}));
    double sup_in = 0.0;
    const int refs = 10001;
    for (int k = 0; k < refs; ++k) {
        Point r{a + (b - a) * k / (refs - 1)};
        sup_in = std::max(sup_in, dist_point_set(r, est));
    }
    return std::max(sup_out, sup_in);
}

}  // namespace

TEST_CASE("identically zero function covers the interval") {
    auto f = parse_function("0", 1);
    ZeroSetOptions opt;
    auto est = gamma_zero_set(f, Domain::interval(0.0, 1.0), opt);
    CHECK(hausdorff_to_interval(est.candidates, 0.0, 1.0) <= opt.delta + est.pitch);
    CHECK(est.candidates.contains(Point{0.0}, 1e-12));
    CHECK(est.candidates.contains(Point{1.0}, 1e-12));
}

TEST_CASE("limit zeros on the boundary are picked up") {
    // g vanishes on (0,1] but g(0) = 1; the point 0 is still a limit of
    // near-zero samples and must appear in the estimate
    auto fx = fixtures::ex3_9();
    ZeroSetOptions opt;
    auto est = gamma_zero_set(fx.g, fx.domain, opt);
    CHECK(est.candidates.contains(Point{0.0}, 1e-12));
    CHECK(hausdorff_to_interval(est.candidates, 0.0, 1.0) <= opt.delta + est.pitch);

    // every candidate has a witness sample with small |f| within delta
    for (size_t i = 0; i < est.candidates.size(); ++i) {
        CHECK(est.witnesses[i].f_abs <= opt.eps);
        CHECK(dist(est.candidates[i], est.witnesses[i].sample) <= opt.delta + 1e-12);
    }
}

TEST_CASE("positive function has empty estimate") {
    auto f = parse_function("x1^2 + 1");
    ZeroSetOptions opt;
    opt.eps = 0.5;
    auto est = gamma_zero_set(f, Domain::interval(-1.0, 1.0), opt);
    CHECK(est.candidates.empty());
}

TEST_CASE("continuous function: estimate shrinks to the zero set") {
    auto f = parse_function("x1 * (x1 - 1)");
    Domain D = Domain::interval(-0.5, 1.5);
    // thresholds track the sampling pitch on the way down
    PointSet truth(1, {{0.0}, {1.0}});
    double prev = 1e9;
    for (auto [eps, samples] : {std::pair{1e-2, 10000ul}, {1e-3, 40000ul}}) {
        ZeroSetOptions opt;
        opt.eps = eps;
        opt.samples = samples;
        auto est = gamma_zero_set(f, D, opt);
        REQUIRE(!est.candidates.empty());
        double h = hausdorff(est.candidates, truth);
        CHECK(h <= opt.delta + est.pitch + eps);
        CHECK(h <= prev + 1e-12);
        prev = h;
    }
}

TEST_CASE("refinement never adds candidates far from the previous estimate") {
    auto f = parse_function("x1 * (x1 - 1)");
    Domain D = Domain::interval(-0.5, 1.5);
    ZeroSetOptions coarse{1e-3, 1e-2, 10000, 42};
    ZeroSetOptions fine{5e-4, 1e-2, 40000, 42};
    auto e1 = gamma_zero_set(f, D, coarse);
    auto e2 = gamma_zero_set(f, D, fine);
    REQUIRE(!e1.candidates.empty());
    for (const auto& p : e2.candidates)
        CHECK(dist_point_set(p, e1.candidates) <= coarse.delta);
}

TEST_CASE("zero-inclusion predicate distinguishes the flat-zero pair") {
    auto fx = fixtures::ex3_9();
    ZeroSetOptions opt;
    auto est_f = gamma_zero_set(fx.f, fx.domain, opt);
    // generalized zeros of f fill [0,1]; g is 1 at the point 0, so the
    // inclusion into the zero set of g fails with witness 0
    auto incl = zero_inclusion(est_f, fx.g);
    CHECK_FALSE(incl.holds);
    REQUIRE(incl.violator.has_value());
    CHECK(std::fabs((*incl.violator)[0]) <= 1e-9);
    CHECK(incl.g_at_violator == 1.0);

    // the same predicate holds for a pair with matching zeros
    auto f2 = parse_function("x1");
    auto est2 = gamma_zero_set(f2, Domain::interval(0.0, 1.0), opt);
    CHECK(zero_inclusion(est2, f2, 2e-2).holds);
}

TEST_CASE("parameter validation") {
    auto f = parse_function("x1");
    ZeroSetOptions bad;
    bad.eps = 0.0;
    CHECK_THROWS_AS(gamma_zero_set(f, Domain::interval(0, 1), bad), error);
    ZeroSetOptions bad2;
    bad2.delta = -1.0;
    CHECK_THROWS_AS(gamma_zero_set(f, Domain::interval(0, 1), bad2), error);
}

TEST_CASE("two dimensional zero curve") {
    auto f = parse_function("x1^2 + x2^2 - 1");
    Domain D = Domain::box2(-1.5, 1.5, -1.5, 1.5);
    ZeroSetOptions opt;
    opt.eps = 2e-3;
    opt.delta = 5e-2;
    opt.samples = 60000;
    auto est = gamma_zero_set(f, D, opt);
    REQUIRE(!est.candidates.empty());
    for (const auto& p : est.candidates) {
        double r = std::sqrt(p[0] * p[0] + p[1] * p[1]);
        CHECK(std::fabs(r - 1.0) <= 0.01);
    }
}
