#pragma once

// Sweep configuration from a JSON file plus command-line style overrides.

#include <optional>
#include <string>

#include "qdiscord/sweep.hpp"

namespace qd {

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
};

/// Model-specific defaults (aligned: theta in [0, pi/2]; chains: n = 50,
/// chi = 0.5, B / J_x in [0, 1.5]).
SweepConfig default_sweep_config(Model model);

/// Parse a JSON document over the defaults of `model`. Unknown keys and
/// malformed values throw ConfigError.
SweepConfig sweep_config_from_json_text(const std::string& text, Model model);
SweepConfig load_sweep_config(const std::string& path, Model model);

/// "min:max:points".
GridSpec parse_grid(const std::string& text);
/// Comma list of D, I1, I2, I3, C and Iq(q) / Iq=q / Iq:q.
std::vector<MeasureSpec> parse_measures(const std::string& text);
/// "all" or a comma list of separations.
void parse_separations(const std::string& text, SweepConfig& cfg);
/// Explicit "csv"/"json", else inferred from the path suffix (csv default).
OutputFormat parse_format(const std::optional<std::string>& name, const std::string& path);

FactorizeConfig factorize_config_from_json_text(const std::string& text);
FactorizeConfig load_factorize_config(const std::string& path);
Geometry parse_geometry(const std::string& name);

}  // namespace qd
