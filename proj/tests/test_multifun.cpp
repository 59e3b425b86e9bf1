#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <random>

#include "loja/fixtures.hpp"
#include "loja/multifun.hpp"

using namespace loja;

namespace {

SampledMultifunction constant_mf(double lo, double hi, int m, std::vector<double> values) {
    std::vector<Point> vals;
    for (double v : values) vals.push_back({v});
    PointSet vset(1, vals);
    return SampledMultifunction::from_callback(Domain::interval(lo, hi), m, 1,
                                               [&](const Point&) { return vset; });
}

}  // namespace

TEST_CASE("construction drops empty values and locates points") {
    auto F = fixtures::ex5_14().build();
    CHECK(F.domain_dim() == 1);
    // endpoints 0 and 5 carry no branch: outside dom F
    CHECK_THROWS_AS(F.locate(Point{0.0}), domain_error);
    CHECK_THROWS_AS(F.locate(Point{5.0}), domain_error);
    const PointSet& at4 = F.value_at(Point{4.0});
    CHECK(at4.size() == 2);
    CHECK(at4.contains(Point{1.0}));
    CHECK(at4.contains(Point{2.0}));
}

TEST_CASE("limits of the constant multifunction") {
    auto F = constant_mf(0.0, 1.0, 501, {0.0, 1.0});
    auto lim = kuratowski_limits(F, Point{0.5});
    CHECK(sets_equal_within(lim.liminf, lim.limsup, 1e-9));
    CHECK(lim.limsup.contains(Point{0.0}, 1e-6));
    CHECK(lim.limsup.contains(Point{1.0}, 1e-6));
    CHECK(lim.converged);
    CHECK(classify_semicontinuity(F, Point{0.5}).continuous);
}

TEST_CASE("limits of the identity multifunction") {
    auto F = SampledMultifunction::from_callback(Domain::interval(0.0, 1.0), 1001, 1,
                                                 [](const Point& x) { return PointSet::single({x[0]}); });
    auto lim = kuratowski_limits(F, Point{0.5});
    CHECK(lim.limsup.size() >= 1);
    CHECK(dist_point_set(Point{0.5}, lim.limsup) <= 1e-2);
    CHECK(dist_point_set(Point{0.5}, lim.liminf) <= 1e-2);
    for (const auto& y : lim.limsup) CHECK(std::fabs(y[0] - 0.5) <= 1e-2 + 1e-12);
}

TEST_CASE("liminf is contained in limsup") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_int_distribution<int> vsize(1, 3);
    std::uniform_int_distribution<int> vpick(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point> samples;
        std::vector<PointSet> values;
        for (int i = 0; i < 60; ++i) {
            samples.push_back({coord(rng)});
            std::vector<Point> vals;
            for (int v = vsize(rng); v > 0; --v) vals.push_back({0.5 * vpick(rng)});
            values.emplace_back(1, std::move(vals));
        }
        SampledMultifunction F(1, 1, std::move(samples), std::move(values));
        Point a = F.samples()[trial % F.size()];
        try {
            auto lim = kuratowski_limits(F, a);
            for (const auto& y : lim.liminf) CHECK(lim.limsup.contains(y, 1e-6));
        } catch (const isolated_point_error&) {
        }
    }
}

TEST_CASE("one-sided branch jump: limsup sees both sides, liminf neither") {
    auto F = fixtures::ex5_14().build();
    auto lim = kuratowski_limits(F, Point{4.0});
    CHECK(dist_point_set(Point{2.0}, lim.limsup) <= 1e-2);
    CHECK(dist_point_set(Point{1.0}, lim.limsup) <= 1e-2);
    CHECK(lim.liminf.empty());

    auto flags = classify_semicontinuity(F, Point{4.0});
    CHECK(flags.upper);
    CHECK(flags.outer);
    CHECK_FALSE(flags.lower);
    CHECK_FALSE(flags.inner);
    CHECK_FALSE(flags.continuous);
}

TEST_CASE("three-branch fixture is lower semicontinuous at the jump") {
    auto G = fixtures::ex5_16().build();
    auto flags = classify_semicontinuity(G, Point{4.0});
    CHECK(flags.lower);
    CHECK(flags.inner);
    CHECK_FALSE(flags.upper);
    // at an interior continuity point everything holds
    CHECK(classify_semicontinuity(G, Point{1.0}).continuous);
}

TEST_CASE("closest-point multifunction of a two-point set is upper but not lower") {
    auto X = fixtures::ex6_4().X;
    auto F = SampledMultifunction::from_callback(
        Domain::interval(0.0, 1.0), 1001, 1,
        [&](const Point& x) { return closest_points(X, x, 1e-6); });
    auto flags = classify_semicontinuity(F, Point{0.5});
    CHECK(flags.upper);
    CHECK(flags.outer);
    CHECK_FALSE(flags.lower);
}

TEST_CASE("isolated point raises") {
    std::vector<Point> samples{{0.0}, {10.0}};
    std::vector<PointSet> values{PointSet::single({0.0}), PointSet::single({1.0})};
    SampledMultifunction F(1, 1, std::move(samples), std::move(values));
    CHECK_THROWS_AS(kuratowski_limits(F, Point{0.0}), isolated_point_error);
}

TEST_CASE("preimages of the parabola-pair fixture") {
    auto H = fixtures::ex5_18().build();
    double pitch = 2.0 / 4999.0;
    for (auto kind : {PreimageKind::strong, PreimageKind::lower, PreimageKind::upper, PreimageKind::weak}) {
        auto S = preimage(H, Point{1.0}, kind);
        CHECK(sets_equal_within(S, PointSet::single({1.0}), pitch));
    }
}

TEST_CASE("weak preimage catches a value collision when the grid hits it") {
    // on a grid containing 0 exactly, the value set there meets the one at 1
    auto fx = fixtures::ex5_18();
    auto H = SampledMultifunction::from_branches(fx.branches, fx.domain, 5001);
    auto weak = preimage(H, Point{1.0}, PreimageKind::weak);
    CHECK(weak.contains(Point{0.0}));
    CHECK(weak.contains(Point{1.0}));
    auto strong = preimage(H, Point{1.0}, PreimageKind::strong);
    CHECK(sets_equal_within(strong, PointSet::single({1.0}), 1e-9));
}

TEST_CASE("preimage distances of the branch fixtures") {
    auto F = fixtures::ex5_14().build();
    auto s = preimage(F, Point{1.0}, PreimageKind::strong);
    CHECK(std::fabs(dist_point_set(Point{4.0}, s) - 3.0) <= 1e-3);

    auto G = fixtures::ex5_16().build();
    auto sg = preimage(G, Point{0.0}, PreimageKind::strong);
    CHECK(std::fabs(dist_point_set(Point{4.0}, sg) - 4.0) <= 1e-3);
}

TEST_CASE("preimage lattice on fixtures") {
    for (auto F : {fixtures::ex5_14().build(), fixtures::ex5_16().build(), fixtures::ex5_18().build()}) {
        Point a = F.samples()[F.size() / 3];
        auto s = preimage(F, a, PreimageKind::strong);
        auto lo = preimage(F, a, PreimageKind::lower);
        auto up = preimage(F, a, PreimageKind::upper);
        auto wk = preimage(F, a, PreimageKind::weak);
        for (const auto& x : s) {
            CHECK(lo.contains(x));
            CHECK(up.contains(x));
        }
        for (const auto& x : lo) CHECK(wk.contains(x));
        for (const auto& x : up) CHECK(wk.contains(x));
        CHECK(s.contains(a));
    }
}

TEST_CASE("hausdorff convergence pushes values into the limsup") {
    // along samples approaching -1 the value sets converge to H(1) in the
    // Hausdorff metric, and the limit estimate at -1 contains H(1)
    auto H = fixtures::ex5_18().build();
    const PointSet& h1 = H.value_at(Point{1.0});
    double x = -1.0 + 2.0 / 4999.0;
    CHECK(hausdorff(H.value_at(Point{x}, 1e-3), h1) <= 1e-3);
    auto lim = kuratowski_limits(H, Point{-1.0});
    for (const auto& y : h1) CHECK(dist_point_set(y, lim.limsup) <= 1e-2);

    // closed-values transfer: with the kuratowski metric in place of the
    // hausdorff one, convergence still forces the inner-limit values into
    // the target set
    CHECK(kuratowski_dist(H.value_at(Point{x}, 1e-3), h1) <= 2e-3);
    for (const auto& y : lim.liminf) CHECK(dist_point_set(y, h1) <= 1.5e-2);
}

TEST_CASE("stored values agree with the generator") {
    auto fx = fixtures::ex5_14();
    auto F = fx.build();
    REQUIRE(F.has_generator());
    CHECK(F.generator().size() == 2);
    for (size_t i = 0; i < F.size(); i += 97) {
        auto regen = F.regenerate(F.samples()[i]);
        CHECK(sets_equal_within(regen, F.value(i), kTolPt));
    }
    // extension to a point that is not a stored sample
    auto v = F.regenerate(Point{0.1234});
    CHECK(v.size() == 1);
    CHECK(v[0][0] == doctest::Approx(std::sqrt(0.1234)).epsilon(1e-12));
}

TEST_CASE("multifunction envelope fit on the jump fixture") {
    auto F = fixtures::ex5_14().build();
    Domain K = Domain::interval(3.5, 4.5);
    auto r = multifun_loja_fit(F, Point{4.0}, K, PreimageKind::upper, SetMetric::hausdorff);
    CHECK(r.fit.feasible);
    CHECK(r.fit.C > 0.0);
    CHECK(r.preimage_set.contains(Point{4.0}));
}

TEST_CASE("constant multifunction gives a degenerate-feasible fit") {
    auto X = fixtures::ex6_4().X;
    Domain K = Domain::interval(0.0, 0.45);
    // 451 points: pitch 1e-3, the base point 0.25 lands on the grid exactly
    auto F = SampledMultifunction::from_callback(
        K, 451, 1, [&](const Point& x) { return closest_points(X, x, 1e-6); });
    auto r = multifun_loja_fit(F, Point{0.25}, K, PreimageKind::upper, SetMetric::hausdorff);
    CHECK(r.fit.feasible);
    CHECK(r.fit.degenerate);
}

TEST_CASE("half-open domain breaks the star condition for the strong preimage") {
    auto fx = fixtures::ex5_18();
    auto H = fx.build();
    StarOptions opt;
    opt.c_gap = 1.0;
    opt.eps_star = 0.25;
    auto r = multifun_loja_fit(H, Point{1.0}, fx.domain, PreimageKind::strong, SetMetric::hausdorff,
                               FitOptions{}, opt);
    CHECK_FALSE(r.star.passed);
    REQUIRE(r.star.witness.has_value());
    CHECK((*r.star.witness)[0] < -0.9);

    // on a compact sub-domain the same fit is feasible
    Domain K = Domain::interval(0.0, 1.0);
    auto Hc = SampledMultifunction::from_branches(fx.branches, K, 1001);
    auto rc = multifun_loja_fit(Hc, Point{1.0}, K, PreimageKind::strong, SetMetric::hausdorff);
    CHECK(rc.fit.feasible);
}

TEST_CASE("jsonl round trip") {
    auto F = fixtures::ex5_14().build();
    std::string path = "test_mf_roundtrip.jsonl";
    F.to_jsonl(path);
    auto G = SampledMultifunction::from_jsonl(path);
    REQUIRE(G.size() == F.size());
    CHECK(sets_equal_within(G.value_at(Point{4.0}), F.value_at(Point{4.0}), 1e-12));
    std::remove(path.c_str());
}
