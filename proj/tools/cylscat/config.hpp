#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "cylscat/fields.hpp"
#include "cylscat/verify.hpp"

namespace cylscat::cli {

enum class Mode { Incident, Analytic };

/// A scenario read from a flat INI file with [geometry], [media], [run] and
/// optional [analytic] and [fieldmap] sections.
struct ScenarioConfig {
    ScenarioConfig(std::string outer_geometry, std::string inner_geometry, BoundaryCurve outer_curve,
                   BoundaryCurve inner_curve)
        : outer_name(std::move(outer_geometry)),
          inner_name(std::move(inner_geometry)),
          outer(std::move(outer_curve)),
          inner(std::move(inner_curve)) {}

    std::string outer_name, inner_name;
    BoundaryCurve outer, inner;
    MediumConfig medium;
    Mode mode = Mode::Incident;
    std::vector<int> n_list{64};
    int far_directions = 64;
    /// Filled in analytic mode.
    std::optional<AnalyticScenario> analytic;
    std::optional<FieldMapSpec> fieldmap;
};

/// Parses "1.5", "pi", "-pi/4", "2*pi/3", "pi/2". Multiples of pi are built
/// as pi * a / b so that pi/2 is exactly std::numbers::pi / 2.
double parse_angle(const std::string& text);

/// Throws ConfigError on malformed input, unknown geometry names and missing
/// fields required by the mode.
ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::string& path);

}  // namespace cylscat::cli
