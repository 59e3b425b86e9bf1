#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loja/paper_suite.hpp"

using namespace loja;

TEST_CASE("fit report carries the documented fields") {
    PowerLawFit fit;
    fit.alpha = 0.5;
    fit.C = 1.0;
    fit.feasible = true;
    fit.n_samples = 100;
    fit.sup_g = 2.0;
    json j = fit_to_json(fit);
    for (const char* key : {"alpha", "C", "feasible", "n_samples", "min_residual", "binding_points",
                            "star_condition", "g_bounded", "sup_g"})
        CHECK(j.contains(key));
    CHECK(j["star_condition"] == "skipped");
}

TEST_CASE("stable dump strips timings and is reproducible") {
    RunReport r;
    r.command = "paper-suite";
    r.seed = 42;
    r.criteria.push_back({1, "demo", true, "ok"});
    r.timings["criteria_ms"] = 1234;
    std::string a = r.stable_dump();
    r.timings["criteria_ms"] = 9999;
    std::string b = r.stable_dump();
    CHECK(a == b);
    CHECK(a.find("timings") == std::string::npos);
    CHECK(r.to_json()["schema"] == 1);
    CHECK(r.all_pass());
    r.criteria.push_back({2, "bad", false, ""});
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("plot data extraction") {
    json report;
    report["fixtures"]["demo"]["plots"]["envelope"] = {{0.0, 1.0, "samples"}, {0.5, 2.0, "fit"}};
    std::string csv = emit_plot_data(report, "envelope");
    CHECK(csv.find("x,y,series") == 0);
    CHECK(csv.find("samples") != std::string::npos);
    CHECK(csv.find("fit") != std::string::npos);
    CHECK_THROWS_AS(emit_plot_data(report, "axis"), error);
}

TEST_CASE("fixture reports run and carry verdicts") {
    json p;
    p["M"] = 3;
    json j = run_fixture_report("ex4_9", 42, p);
    CHECK(j["tag"] == "ex4_9");
    CHECK(j["pass"].get<bool>());
    CHECK(j["alpha_min_feasible"].get<double>() > 1.0);

    json j8 = run_fixture_report("ex3_8", 42);
    CHECK(j8["pass"].get<bool>());
    CHECK(j8["fit"]["g_bounded"] == "fail");
    CHECK(j8["fit"]["star_condition"] == "pass");

    CHECK_THROWS_AS(run_fixture_report("nope", 42), error);
}
