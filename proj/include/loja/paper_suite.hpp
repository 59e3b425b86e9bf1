#pragma once

#include "loja/report.hpp"

namespace loja {

/// Runs the full regression matrix (criteria 1..13). The determinism
/// criterion recomputes the matrix a second time and compares the stable
/// serializations.
RunReport run_paper_suite(uint64_t seed);

/// Focused report for a single fixture tag; params carries per-fixture
/// parameters (e.g. {"M": 12}).
json run_fixture_report(const std::string& tag, uint64_t seed, const json& params = json::object());

}  // namespace loja
