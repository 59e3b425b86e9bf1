#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "loja/fixtures.hpp"
#include "loja/lojafit.hpp"

using namespace loja;

TEST_CASE("envelope fit recovers the square-root pair") {
    auto f = parse_function("x1");
    auto g = parse_function("x1^2");
    auto fit = fit_exponent(f, g, Domain::interval(0.0, 1.0), 10000, 42);
    REQUIRE(fit.feasible);
    CHECK(fit.alpha == doctest::Approx(0.5).epsilon(0.05));
    CHECK(fit.C == doctest::Approx(1.0).epsilon(0.05));
    CHECK(fit.min_residual >= -tol_fit());
    CHECK(fit.min_residual <= tol_fit());
    CHECK(!fit.binding_points.empty());
}

TEST_CASE("identity pair gives alpha 1 C 1") {
    auto f = parse_function("x1");
    auto fit = fit_exponent(f, f, Domain::interval(0.0, 1.0), 10000, 42);
    REQUIRE(fit.feasible);
    CHECK(fit.alpha == doctest::Approx(1.0).epsilon(0.05));
    CHECK(fit.C == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("staircase fixture: minimal exponent grows without bound") {
    double prev = 0.0;
    for (int m : {3, 5, 8, 12}) {
        auto fx = fixtures::ex4_9(m);
        auto fit = fit_exponent(fx.f, fx.g, fx.domain, 10000 * static_cast<size_t>(m), 42);
        REQUIRE(fit.feasible);
        CHECK(fit.alpha > prev);
        CHECK(fit.alpha > m - 2.0);  // empirically snaps near M-1
        prev = fit.alpha;
    }
    CHECK(prev > 6.0);
}

TEST_CASE("zero of f where g is nonzero is infeasible") {
    auto fx = fixtures::ex3_9();
    auto fit = fit_exponent(fx.f, fx.g, fx.domain, 10000, 42);
    CHECK_FALSE(fit.feasible);
}

TEST_CASE("unbounded-g fixture is infeasible and fails the bound probe") {
    auto fx = fixtures::ex3_8();
    auto fit = fit_exponent(fx.f, fx.g, fx.domain, 10000, 42);
    CHECK_FALSE(fit.feasible);

    auto bound = check_g_bounded(fx.g, Domain::interval(0.0, 1.0 - 1e-8), 10000, 42);
    CHECK_FALSE(bound.passed);
    CHECK(bound.sup_g > 1e6);

    auto bound2 = check_g_bounded(parse_function("x1^2"), Domain::interval(0.0, 1.0), 10000, 42);
    CHECK(bound2.passed);
    CHECK(bound2.sup_g == doctest::Approx(1.0));

    auto bound3 = check_g_bounded(parse_function("0", 1), Domain::interval(0.0, 1.0), 1000, 42);
    CHECK(bound3.passed);
    CHECK(bound3.sup_g == 0.0);
}

TEST_CASE("degenerate all-zero g") {
    auto f = parse_function("x1 + 1");
    auto g = parse_function("0", 1);
    auto fit = fit_exponent(f, g, Domain::interval(0.0, 1.0), 1000, 42);
    CHECK(fit.feasible);
    CHECK(fit.degenerate);
    CHECK(fit.alpha == 1.0);
    CHECK(fit.C == doctest::Approx(1.0));
}

TEST_CASE("envelope constant monotone under sample growth") {
    // adding samples can only lower the envelope constant at fixed alpha
    std::vector<double> f_small, g_small, f_big, g_big;
    for (int k = 1; k <= 100; ++k) {
        double x = k / 100.0;
        f_small.push_back(x);
        g_small.push_back(x * x);
    }
    f_big = f_small;
    g_big = g_small;
    for (int k = 1; k <= 1000; ++k) {
        double x = k / 1000.0;
        f_big.push_back(x);
        g_big.push_back(x * x);
    }
    for (double alpha : {0.3, 0.5, 1.0, 2.0})
        CHECK(envelope_constant(f_big, g_big, alpha) <= envelope_constant(f_small, g_small, alpha) + 1e-15);
}

TEST_CASE("scale covariance: C scales with f, alpha unchanged") {
    auto f = parse_function("x1");
    auto g = parse_function("x1^2");
    Domain D = Domain::interval(0.0, 1.0);
    auto base = fit_exponent(f, g, D, 5000, 42);
    for (const char* src : {"10 * x1", "0.5 * x1"}) {
        auto fit = fit_exponent(parse_function(src), g, D, 5000, 42);
        double lambda = src[0] == '1' ? 10.0 : 0.5;
        REQUIRE(fit.feasible);
        CHECK(fit.alpha == base.alpha);
        CHECK(fit.C == doctest::Approx(lambda * base.C).epsilon(1e-12));
    }
}

TEST_CASE("verify_inequality lists violations") {
    auto f = parse_function("x1");
    Domain D = Domain::interval(0.0, 1.0);
    CHECK(verify_inequality(f, f, D, PowerPhi{0.5, 2.0, 1}, 2000, 42).empty());
    CHECK(!verify_inequality(f, f, D, PowerPhi{2.0, 1.0, 1}, 2000, 42).empty());
    auto g0 = parse_function("0", 1);
    CHECK(verify_inequality(f, g0, D, PowerPhi{5.0, 1.0, 1}, 2000, 42).empty());
}

TEST_CASE("star condition") {
    auto f = parse_function("x1");
    Domain D = Domain::interval(0.0, 1.0);
    CHECK(check_star_condition(f, f, D, 10000, 42).passed);

    auto fx = fixtures::ex3_9();
    auto star = check_star_condition(fx.f, fx.g, fx.domain, 10000, 42);
    CHECK_FALSE(star.passed);
    REQUIRE(star.witness.has_value());
    CHECK(std::fabs((*star.witness)[0]) <= 1e-2);
    CHECK(star.witness_g == 1.0);

    // the unbounded-g pair passes: |f| has no resolved cluster at zero
    auto fx8 = fixtures::ex3_8();
    CHECK(check_star_condition(fx8.f, fx8.g, fx8.domain, 10000, 42).passed);
}

TEST_CASE("value pair cloud and separation fit") {
    auto x = parse_function("x1");
    Domain D = Domain::interval(0.0, 1.0);
    auto diag = value_pair_cloud(x, x, D, 10000, 42);
    for (size_t i = 0; i < diag.s.size(); ++i) CHECK(diag.s[i] == diag.t[i]);
    auto fit = separation_fit(diag);
    REQUIRE(fit.feasible);
    CHECK(fit.alpha == doctest::Approx(1.0).epsilon(0.05));
    CHECK(fit.C == doctest::Approx(0.5).epsilon(0.05));

    // a cloud with a point on the vertical axis separates nothing
    ValuePairCloud bad;
    bad.s = {0.0, 0.5};
    bad.t = {1.0, 0.5};
    CHECK_FALSE(separation_fit(bad).feasible);

    auto sq = value_pair_cloud(x, parse_function("x1^2"), D, 10000, 42);
    auto fit2 = separation_fit(sq);
    REQUIRE(fit2.feasible);
    CHECK(fit2.alpha == doctest::Approx(1.0).epsilon(0.1));
    CHECK(fit2.C == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("reverse fit") {
    Domain D = Domain::interval(0.0, 1.0);
    auto sq = parse_function("x1^2");
    auto lin = parse_function("x1");

    // |x^2|^N <= C|x| already holds at N = 1 with C = 1 (binding at x = 1)
    auto r1 = reverse_fit(sq, lin, D, 10000, 42);
    REQUIRE(r1.feasible);
    CHECK(r1.alpha == 1.0);
    CHECK(r1.C == doctest::Approx(1.0).epsilon(0.05));

    // |x|^N <= C|x^2| needs N = 2
    auto r2 = reverse_fit(lin, sq, D, 10000, 42);
    REQUIRE(r2.feasible);
    CHECK(r2.alpha == 2.0);
    CHECK(r2.C == doctest::Approx(1.0).epsilon(0.05));

    auto r3 = reverse_fit(lin, lin, D, 10000, 42);
    REQUIRE(r3.feasible);
    CHECK(r3.alpha == 1.0);
    CHECK(r3.C == doctest::Approx(1.0).epsilon(0.05));

    auto r4 = reverse_fit(lin, parse_function("0", 1), Domain::interval(0.01, 1.0), 1000, 42);
    CHECK_FALSE(r4.feasible);
}

TEST_CASE("min selector") {
    auto lin = parse_function("x1");
    auto dbl = parse_function("2 * x1");
    auto cub = parse_function("x1^3");
    auto cub5 = parse_function("x1^3 + x1^5");

    auto s1 = min_selector({lin, dbl}, 1.0);
    REQUIRE(s1.found);
    CHECK(s1.index == 0);

    auto s2 = min_selector({lin, cub}, 1.0);
    REQUIRE(s2.found);
    CHECK(s2.index == 1);

    auto s3 = min_selector({cub, cub5}, 1.0);
    REQUIRE(s3.found);
    CHECK(s3.index == 0);

    CHECK_THROWS_AS(min_selector({parse_function("x1 + 1")}, 1.0), error);
    CHECK_THROWS_AS(min_selector({parse_function("x1^2")}, 1.0), error);
}

TEST_CASE("odd power bound: oddness, monotonicity, flatness") {
    PowerPhi phi{0.7, 3.0, 2};  // alpha >= p + 1
    double prev = phi(-1.0);
    for (int k = -15; k <= 16; ++k) {
        double t = k / 16.0;
        CHECK(phi(-t) == -phi(t));
        if (k > -16) CHECK(phi(t) >= prev);
        prev = phi(t);
    }
    // p-flat at zero: |phi(t)| / |t|^p vanishes as t -> 0
    double ratio_big = std::fabs(phi(0.1)) / std::pow(0.1, phi.p);
    double ratio_small = std::fabs(phi(0.001)) / std::pow(0.001, phi.p);
    CHECK(ratio_small < ratio_big / 10.0);
    CHECK(phi(0.0) == 0.0);
}

TEST_CASE("classic inequality holds for matched-zero pairs") {
    // continuous pairs whose zeros coincide on the box admit a feasible fit
    Domain D = Domain::interval(0.0, 1.0);
    struct Pair {
        const char* f;
        const char* g;
    };
    for (const auto& [fs, gs] : {Pair{"x1^2", "x1 * (2 - x1)"}, Pair{"x1", "x1^3"},
                                 Pair{"abs(x1 - 0.5)", "(x1 - 0.5)^2"}}) {
        auto fit = fit_exponent(parse_function(fs), parse_function(gs), D, 10000, 42);
        CHECK(fit.feasible);
        CHECK(fit.C > 0.0);
    }
}
