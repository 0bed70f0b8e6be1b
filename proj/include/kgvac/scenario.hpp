#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kgvac/catalog.hpp"

namespace kgvac {

// One reproducible verification scenario, parsed from the flat key-value
// config format (see docs/scenario-format.md).
struct Scenario {
    std::string name = "scenario";
    // [spacetime]
    Family family = Family::Static;
    double mass = 0.0;
    double coupling = 0.0;
    double hubble = 0.0;
    int dim_weight = 3;
    std::string lapse = "one";
    std::string scale = "one";
    // [lattice]
    int points = 16;
    double length = 6.283185307179586;
    double curvature_offset = 0.0;
    std::string lapse_profile = "uniform";
    std::string metric_profile = "uniform";
    // [time]
    double start = -2.0;
    double stop = 2.0;
    int samples = 5;
    // [suite]
    std::string checks = "all";
    double rk4_step = 1e-3;
    double tolerance_scale = 1.0;
    std::uint64_t seed = 20260809;
    double transport_start = 0.0;
    double transport_stop = 1.0;
    int probe_modes = 4;
    // [vacuum] explicit branch constants (defaults used when absent)
    std::optional<double> c1, c2, c3;

    bool operator==(const Scenario&) const = default;
};

// Parse/serialize. Parse errors carry line and column; unknown sections or
// keys are rejected.
Scenario parse_scenario(const std::string& text);
std::string serialize_scenario(const Scenario& s);

Scenario load_scenario_file(const std::string& path);

// Materializes the spacetime spec (validates family constraints).
SpacetimeSpec to_spec(const Scenario& s);

// Named spatial profile over [0, L): "uniform" | "sin_bump:<base>:<amp>" |
// "cos_bump:<base>:<amp>".
std::function<double(double)> parse_profile(const std::string& text, double length);

} // namespace kgvac
