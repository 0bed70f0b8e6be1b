#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgvac/scenario.hpp"

namespace kgvac {

struct CheckResult {
    std::string id;        // stable check identifier
    std::string detail;    // where/what was measured
    double value = 0.0;    // residual or measured quantity
    double tolerance = 0.0;
    bool greater_is_pass = false; // margin-type checks pass when value > tolerance
    bool passed = false;
    bool skipped = false;
    std::string note;
};

struct SuiteReport {
    Scenario scenario;
    int orientation = 0;
    std::vector<CheckResult> checks;
    nlohmann::ordered_json calibration = nlohmann::ordered_json::array();
    bool passed = true;
    double elapsed_seconds = 0.0;

    const CheckResult* find(const std::string& id) const;
};

SuiteReport run_suite(const Scenario& scenario);

nlohmann::ordered_json report_to_json(const SuiteReport& report, bool include_timing);
nlohmann::ordered_json merge_reports(const std::vector<nlohmann::ordered_json>& reports);

// Per-mode trajectory table: t, mode_index, Y, Z, residual_I..IV (CSV).
std::string modes_csv(const Scenario& scenario);

} // namespace kgvac
