#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "loja/lojafit.hpp"
#include "loja/medial.hpp"

namespace loja {

using json = nlohmann::ordered_json;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
};

/// Deterministic run report: identical flags and seed give byte-identical
/// JSON once the "timings" subtree is stripped.
struct RunReport {
    int schema = 1;
    std::string command;
    uint64_t seed = 42;
    std::vector<CriterionResult> criteria;
    json fixtures = json::object();
    json timings = json::object();

    bool all_pass() const;
    json to_json() const;
    /// Serialized form with timing fields removed, for determinism checks.
    std::string stable_dump() const;
};

json fit_to_json(const PowerLawFit& fit);
json star_to_json(const StarCheck& star);
json bound_to_json(const BoundCheck& bound);
json point_set_to_json(const PointSet& s, size_t cap = 1000);

/// Tidy CSV (x, y, series) extracted from a report: selectors "envelope",
/// "axis", "cloud" look up the matching plot block embedded in any fixture.
std::string emit_plot_data(const json& report, const std::string& what);

}  // namespace loja
