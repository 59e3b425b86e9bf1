#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "loja/fixtures.hpp"
#include "loja/paper_suite.hpp"
#include "loja/zeroset.hpp"

namespace {

using loja::json;

loja::Point parse_point(const std::string& spec) {
    loja::Point p;
    std::stringstream ss(spec);
    std::string field;
    while (std::getline(ss, field, ',')) p.push_back(std::stod(field));
    if (p.empty()) throw loja::error("empty point spec");
    return p;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw loja::error("cannot write " + out_path);
    out << content << "\n";
}

loja::PiecewiseFn load_fn_arg(const std::string& arg, int arity = 0) {
    // inline source when it does not name a readable file
    std::ifstream probe(arg);
    if (probe.good()) return loja::load_function(arg, arity);
    return loja::parse_function(arg, arity);
}

json fit_report(const loja::PowerLawFit& fit, const std::optional<loja::StarCheck>& star,
                const std::optional<loja::BoundCheck>& bound, uint64_t seed) {
    json j;
    j["schema"] = 1;
    j["seed"] = seed;
    json fj = loja::fit_to_json(fit);
    if (star) fj["star_condition"] = star->passed ? "pass" : "fail";
    if (bound) {
        fj["g_bounded"] = bound->passed ? "pass" : "fail";
        fj["sup_g"] = bound->sup_g;
    }
    for (auto& [k, v] : fj.items()) j[k] = v;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"set-valued analysis toolkit: piecewise functions, Hausdorff/Kuratowski metrics, "
                 "power-law envelope fits, multifunction preimages, medial axes"};
    app.require_subcommand(1);

    uint64_t seed = 42;
    size_t samples = 10000;
    std::string out_path;
    std::string format = "json";
    app.add_option("--seed", seed, "global random seed")->capture_default_str();

    // parse
    auto* cmd_parse = app.add_subcommand("parse", "parse a function and print its canonical form");
    std::string parse_src;
    int parse_arity = 0;
    cmd_parse->add_option("--fn", parse_src, "function file or inline source")->required();
    cmd_parse->add_option("--arity", parse_arity, "declared arity (0 = infer)");

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a function at a point");
    std::string eval_src, eval_at;
    cmd_eval->add_option("--fn", eval_src, "function file or inline source")->required();
    cmd_eval->add_option("--at", eval_at, "point \"x1,x2,...\"")->required();

    // zeroset
    auto* cmd_zero = app.add_subcommand("zeroset", "estimate the generalized zero set");
    std::string zero_src, zero_domain;
    loja::ZeroSetOptions zero_opt;
    cmd_zero->add_option("--fn", zero_src)->required();
    cmd_zero->add_option("--domain", zero_domain, "box \"a1,b1;a2,b2\"")->required();
    cmd_zero->add_option("--eps", zero_opt.eps)->capture_default_str();
    cmd_zero->add_option("--delta", zero_opt.delta)->capture_default_str();
    cmd_zero->add_option("--samples", zero_opt.samples)->capture_default_str();
    cmd_zero->add_option("--out", out_path, "output file (default stdout)");
    cmd_zero->add_option("--format", format, "json|csv")->capture_default_str();

    // fit
    auto* cmd_fit = app.add_subcommand("fit", "fit the power-law envelope |f| >= C|g|^alpha");
    std::string fit_f, fit_g, fit_domain;
    bool fit_reverse = false, fit_star = false, fit_bounded = false;
    cmd_fit->add_option("--f", fit_f)->required();
    cmd_fit->add_option("--g", fit_g)->required();
    cmd_fit->add_option("--domain", fit_domain)->required();
    cmd_fit->add_option("--samples", samples)->capture_default_str();
    cmd_fit->add_flag("--reverse", fit_reverse, "fit |f|^N <= C|g| instead");
    cmd_fit->add_flag("--check-star", fit_star, "also run the sequence-condition check");
    cmd_fit->add_flag("--check-bounded", fit_bounded, "also run the boundedness probe");
    cmd_fit->add_option("--out", out_path);

    // hausdorff / kuratowski
    auto* cmd_h = app.add_subcommand("hausdorff", "Hausdorff distance between point-set files");
    std::string set_a, set_b;
    bool h_ext = false;
    double h_diam = 0.0;
    cmd_h->add_option("--A", set_a)->required();
    cmd_h->add_option("--B", set_b)->required();
    cmd_h->add_flag("--ext", h_ext, "use the empty-set convention");
    cmd_h->add_option("--ambient-diam", h_diam, "ambient diameter for --ext");

    auto* cmd_k = app.add_subcommand("kuratowski", "Kuratowski distance between point-set files");
    cmd_k->add_option("--A", set_a)->required();
    cmd_k->add_option("--B", set_b)->required();

    // multifunction commands
    std::string mf_file, mf_branches, mf_domain, mf_at, mf_kind = "strong", mf_metric = "hausdorff";
    int mf_grid = 1001;
    auto add_mf_source = [&](CLI::App* cmd) {
        cmd->add_option("--mf", mf_file, "multifunction JSON-lines file");
        cmd->add_option("--branches", mf_branches, "comma-separated branch function files");
        cmd->add_option("--domain", mf_domain, "sampling box for --branches");
        cmd->add_option("--grid", mf_grid, "grid points per axis for --branches");
        cmd->add_option("--at", mf_at, "base point")->required();
    };
    auto* cmd_classify = app.add_subcommand("classify", "semicontinuity flags at a point");
    add_mf_source(cmd_classify);
    auto* cmd_pre = app.add_subcommand("preimage", "multifunction preimage scan");
    add_mf_source(cmd_pre);
    cmd_pre->add_option("--kind", mf_kind, "strong|lower|upper|weak")->capture_default_str();
    cmd_pre->add_option("--out", out_path);
    auto* cmd_mfloja = app.add_subcommand("mfloja", "multifunction envelope fit");
    add_mf_source(cmd_mfloja);
    cmd_mfloja->add_option("--kind", mf_kind)->capture_default_str();
    cmd_mfloja->add_option("--metric", mf_metric, "hausdorff|kuratowski")->capture_default_str();
    std::string mfloja_k;
    cmd_mfloja->add_option("--fit-domain", mfloja_k, "box K for the fit (default: sampling box)");

    // medial commands
    std::string med_x, med_domain, med_at, med_kind = "m";
    double med_tol = -1.0;
    auto* cmd_medial = app.add_subcommand("medial", "medial axis estimate");
    cmd_medial->add_option("--X", med_x, "point-set CSV of the closed set")->required();
    cmd_medial->add_option("--domain", med_domain)->required();
    cmd_medial->add_option("--samples", samples)->capture_default_str();
    cmd_medial->add_option("--tol", med_tol, "realization tolerance (default: 2x sample pitch)");
    cmd_medial->add_option("--out", out_path);

    auto* cmd_nregion = app.add_subcommand("nregion", "realizer region of a base point");
    cmd_nregion->add_option("--X", med_x)->required();
    cmd_nregion->add_option("--at", med_at)->required();
    cmd_nregion->add_option("--domain", med_domain)->required();
    cmd_nregion->add_option("--samples", samples)->capture_default_str();
    cmd_nregion->add_option("--tol", med_tol);
    cmd_nregion->add_option("--out", out_path);

    auto* cmd_medloja = app.add_subcommand("medloja", "envelope fit for the closest-point or realizer multifunction");
    std::string med_metric;
    cmd_medloja->add_option("--X", med_x)->required();
    cmd_medloja->add_option("--at", med_at)->required();
    cmd_medloja->add_option("--domain", med_domain, "box K")->required();
    cmd_medloja->add_option("--kind", med_kind, "m|N")->capture_default_str();
    cmd_medloja->add_option("--metric", med_metric, "hausdorff|kuratowski (default per kind)");
    cmd_medloja->add_option("--tol", med_tol);
    std::string med_window;
    cmd_medloja->add_option("--window", med_window, "value-sampling box for kind N");

    // paper-suite
    auto* cmd_suite = app.add_subcommand("paper-suite", "run the full regression matrix");
    std::string only_tag;
    std::vector<std::string> suite_params;
    cmd_suite->add_option("--only", only_tag, "run a single fixture tag");
    cmd_suite->add_option("--param", suite_params, "fixture parameter NAME=VALUE");
    cmd_suite->add_option("--out", out_path);

    // plot-data
    auto* cmd_plot = app.add_subcommand("plot-data", "extract tidy CSV from a report");
    std::string plot_report, plot_what;
    cmd_plot->add_option("--report", plot_report)->required();
    cmd_plot->add_option("--what", plot_what, "envelope|axis|cloud")->required();
    cmd_plot->add_option("--out", out_path);

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_parse) {
            auto fn = load_fn_arg(parse_src, parse_arity);
            std::cout << loja::to_string(fn) << "\n";
            return 0;
        }
        if (*cmd_eval) {
            auto fn = load_fn_arg(eval_src);
            auto x = parse_point(eval_at);
            std::cout.precision(17);
            std::cout << fn.eval(x) << "\n";
            return 0;
        }
        if (*cmd_zero) {
            auto fn = load_fn_arg(zero_src);
            auto D = loja::Domain::parse(zero_domain);
            zero_opt.seed = seed;
            auto est = loja::gamma_zero_set(fn, D, zero_opt);
            if (format == "csv") {
                std::ostringstream csv;
                csv.precision(17);
                for (const auto& p : est.candidates) {
                    for (size_t i = 0; i < p.size(); ++i) csv << (i ? "," : "") << p[i];
                    csv << "\n";
                }
                write_output(out_path, csv.str());
            } else {
                json j;
                j["schema"] = 1;
                j["seed"] = seed;
                j["eps"] = est.eps;
                j["delta"] = est.delta;
                j["pitch"] = est.pitch;
                j["sample_count"] = est.sample_count;
                j["raw_candidates"] = est.raw_candidate_count;
                j["candidates"] = loja::point_set_to_json(est.candidates);
                write_output(out_path, j.dump(2));
            }
            return 0;
        }
        if (*cmd_fit) {
            auto f = load_fn_arg(fit_f);
            auto g = load_fn_arg(fit_g);
            auto D = loja::Domain::parse(fit_domain);
            loja::PowerLawFit fit = fit_reverse ? loja::reverse_fit(f, g, D, samples, seed)
                                                : loja::fit_exponent(f, g, D, samples, seed);
            std::optional<loja::StarCheck> star;
            std::optional<loja::BoundCheck> bound;
            if (fit_star) star = loja::check_star_condition(f, g, D, samples, seed);
            if (fit_bounded) bound = loja::check_g_bounded(g, D, samples, seed);
            json j = fit_report(fit, star, bound, seed);
            write_output(out_path, j.dump(2));
            bool checks_ok = (!star || star->passed) && (!bound || bound->passed);
            return checks_ok ? 0 : 1;
        }
        if (*cmd_h) {
            auto A = loja::PointSet::from_csv(set_a);
            auto B = loja::PointSet::from_csv(set_b);
            std::cout.precision(17);
            std::cout << (h_ext ? loja::hausdorff_ext(A, B, h_diam) : loja::hausdorff(A, B)) << "\n";
            return 0;
        }
        if (*cmd_k) {
            auto A = loja::PointSet::from_csv(set_a);
            auto B = loja::PointSet::from_csv(set_b);
            std::cout.precision(17);
            std::cout << loja::kuratowski_dist(A, B) << "\n";
            return 0;
        }
        if (*cmd_classify || *cmd_pre || *cmd_mfloja) {
            loja::SampledMultifunction F;
            if (!mf_file.empty()) {
                F = loja::SampledMultifunction::from_jsonl(mf_file);
            } else if (!mf_branches.empty()) {
                if (mf_domain.empty()) throw loja::error("--branches needs --domain");
                std::vector<loja::PiecewiseFn> branches;
                std::stringstream ss(mf_branches);
                std::string item;
                while (std::getline(ss, item, ',')) branches.push_back(load_fn_arg(item));
                F = loja::SampledMultifunction::from_branches(branches, loja::Domain::parse(mf_domain),
                                                              mf_grid);
            } else {
                throw loja::error("provide --mf or --branches");
            }
            auto a = parse_point(mf_at);
            if (*cmd_classify) {
                auto flags = loja::classify_semicontinuity(F, a);
                json j = {{"outer", flags.outer}, {"inner", flags.inner}, {"upper", flags.upper},
                          {"lower", flags.lower}, {"continuous", flags.continuous}};
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            if (*cmd_pre) {
                auto S = loja::preimage(F, a, loja::preimage_kind_from_string(mf_kind));
                json j;
                j["kind"] = mf_kind;
                j["preimage"] = loja::point_set_to_json(S);
                write_output(out_path, j.dump(2));
                return 0;
            }
            loja::Domain K = mfloja_k.empty()
                                 ? (mf_domain.empty() ? loja::Domain::parse("0,1") : loja::Domain::parse(mf_domain))
                                 : loja::Domain::parse(mfloja_k);
            auto r = loja::multifun_loja_fit(F, a, K, loja::preimage_kind_from_string(mf_kind),
                                             loja::set_metric_from_string(mf_metric));
            json j = fit_report(r.fit, r.star, std::nullopt, seed);
            j["preimage_size"] = r.preimage_set.size();
            write_output(out_path, j.dump(2));
            return r.fit.feasible ? 0 : 1;
        }
        if (*cmd_medial) {
            auto X = loja::ClosedSetSample{loja::PointSet::from_csv(med_x), std::nullopt};
            auto D = loja::Domain::parse(med_domain);
            double tol = med_tol > 0 ? med_tol : loja::default_tol_med(X);
            auto est = loja::medial_axis(X, D, samples, seed, tol);
            std::ostringstream csv;
            csv.precision(17);
            for (const auto& p : est.points) {
                for (double v : p.x) csv << v << ",";
                csv << p.multiplicity << "," << p.gap << "\n";
            }
            write_output(out_path, csv.str());
            return 0;
        }
        if (*cmd_nregion) {
            auto X = loja::ClosedSetSample{loja::PointSet::from_csv(med_x), std::nullopt};
            auto D = loja::Domain::parse(med_domain);
            double tol = med_tol > 0 ? med_tol : loja::default_tol_med(X);
            auto S = loja::n_region(X, parse_point(med_at), D, samples, seed, tol);
            std::ostringstream csv;
            csv.precision(17);
            for (const auto& p : S) {
                for (size_t i = 0; i < p.size(); ++i) csv << (i ? "," : "") << p[i];
                csv << "\n";
            }
            write_output(out_path, csv.str());
            return 0;
        }
        if (*cmd_medloja) {
            auto X = loja::ClosedSetSample{loja::PointSet::from_csv(med_x), std::nullopt};
            auto K = loja::Domain::parse(med_domain);
            loja::MedialKind kind = med_kind == "N" ? loja::MedialKind::normal : loja::MedialKind::closest;
            loja::SetMetric metric = med_metric.empty()
                                         ? (kind == loja::MedialKind::normal ? loja::SetMetric::kuratowski
                                                                             : loja::SetMetric::hausdorff)
                                         : loja::set_metric_from_string(med_metric);
            loja::MedialLojaOptions opt;
            opt.tol_med = med_tol;
            if (!med_window.empty()) opt.n_window = loja::Domain::parse(med_window);
            auto r = loja::medial_loja(X, parse_point(med_at), K, kind, metric, opt);
            json j = fit_report(r.fit, r.star, std::nullopt, seed);
            std::cout << j.dump(2) << "\n";
            return r.fit.feasible ? 0 : 1;
        }
        if (*cmd_suite) {
            if (!only_tag.empty()) {
                if (!loja::fixtures::has_tag(only_tag)) throw loja::error("unknown fixture tag: " + only_tag);
                json params = json::object();
                for (const auto& p : suite_params) {
                    auto eq = p.find('=');
                    if (eq == std::string::npos) throw loja::error("bad --param, expected NAME=VALUE");
                    params[p.substr(0, eq)] = std::stod(p.substr(eq + 1));
                }
                json j = loja::run_fixture_report(only_tag, seed, params);
                write_output(out_path, j.dump(2));
                return j["pass"].get<bool>() ? 0 : 1;
            }
            loja::RunReport report = loja::run_paper_suite(seed);
            for (const auto& c : report.criteria)
                std::cerr << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name
                          << "\n";
            write_output(out_path, report.to_json().dump(2));
            return report.all_pass() ? 0 : 1;
        }
        if (*cmd_plot) {
            std::ifstream in(plot_report);
            if (!in) throw loja::error("cannot open report: " + plot_report);
            json report = json::parse(in);
            write_output(out_path, loja::emit_plot_data(report, plot_what));
            return 0;
        }
    } catch (const loja::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
