#include "loja/report.hpp"

#include <sstream>

namespace loja {

bool RunReport::all_pass() const {
    for (const auto& c : criteria)
        if (!c.pass) return false;
    for (const auto& [tag, fx] : fixtures.items())
        if (fx.contains("pass") && !fx["pass"].get<bool>()) return false;
    return true;
}

json RunReport::to_json() const {
    json j;
    j["schema"] = schema;
    j["command"] = command;
    j["seed"] = seed;
    auto arr = json::array();
    for (const auto& c : criteria) {
        json cj;
        cj["id"] = c.id;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["details"] = c.details;
        arr.push_back(std::move(cj));
    }
    j["criteria"] = std::move(arr);
    j["fixtures"] = fixtures;
    j["all_pass"] = all_pass();
    j["timings"] = timings;
    return j;
}

std::string RunReport::stable_dump() const {
    json j = to_json();
    j.erase("timings");
    return j.dump(2);
}

json fit_to_json(const PowerLawFit& fit) {
    json j;
    j["alpha"] = fit.alpha;
    j["C"] = fit.C;
    j["feasible"] = fit.feasible;
    j["n_samples"] = fit.n_samples;
    j["min_residual"] = fit.min_residual;
    auto bp = json::array();
    for (const auto& p : fit.binding_points) bp.push_back(p);
    j["binding_points"] = std::move(bp);
    j["star_condition"] = "skipped";
    j["g_bounded"] = "skipped";
    j["sup_g"] = fit.sup_g;
    j["degenerate"] = fit.degenerate;
    j["reverse"] = fit.is_reverse;
    j["n_zero_g"] = fit.n_zero_g;
    j["n_zero_both"] = fit.n_zero_both;
    if (!fit.note.empty()) j["note"] = fit.note;
    return j;
}

json star_to_json(const StarCheck& star) {
    json j;
    j["result"] = star.passed ? "pass" : "fail";
    j["assessed"] = star.assessed;
    j["decile_max_f"] = star.decile_max_f;
    if (star.witness) {
        j["witness"] = *star.witness;
        j["witness_g"] = star.witness_g;
    }
    return j;
}

json bound_to_json(const BoundCheck& bound) {
    json j;
    j["result"] = bound.passed ? "pass" : "fail";
    j["sup_g"] = bound.sup_g;
    if (bound.arg_sup) j["arg_sup"] = *bound.arg_sup;
    return j;
}

json point_set_to_json(const PointSet& s, size_t cap) {
    auto arr = json::array();
    size_t n = std::min(cap, s.size());
    for (size_t i = 0; i < n; ++i) arr.push_back(s[i]);
    json j;
    j["size"] = s.size();
    j["points"] = std::move(arr);
    return j;
}

std::string emit_plot_data(const json& report, const std::string& what) {
    const json* block = nullptr;
    std::string source;
    if (report.contains("fixtures")) {
        for (const auto& [tag, fx] : report["fixtures"].items()) {
            if (fx.contains("plots") && fx["plots"].contains(what)) {
                block = &fx["plots"][what];
                source = tag;
                break;
            }
        }
    }
    if (!block && report.contains("plots") && report["plots"].contains(what))
        block = &report["plots"][what];
    if (!block) throw error("report has no plot data for selector '" + what + "'");

    std::ostringstream out;
    out.precision(17);
    out << "x,y,series\n";
    for (const auto& row : *block) {
        std::string series = row.size() > 2 ? row[2].get<std::string>() : source;
        out << row[0].get<double>() << "," << row[1].get<double>() << "," << series << "\n";
    }
    return out.str();
}

}  // namespace loja
