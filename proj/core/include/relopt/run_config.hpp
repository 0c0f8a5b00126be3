#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relopt/contract.hpp"
#include "relopt/models.hpp"
#include "relopt/monte_carlo.hpp"
#include "relopt/quadrature.hpp"

namespace relopt {

/// A fully resolved pricing run: model, contract, and numerical settings.
/// Parsed from flat `section.key = value` text; unknown keys are hard errors.
struct RunConfig {
    std::string model;  // gbm | two_gbm | ou | two_ou | shifted_two_ou
    RoContract contract;
    ModelSpec model_spec = GbmParams{42.77, 0.3, 0.0};
    McConfig mc;
    QuadratureConfig quad;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

using KeyValueMap = std::map<std::string, std::string>;

/// Splits config text into key/value pairs. '#' starts a comment; blank
/// lines are skipped; duplicate keys are errors.
KeyValueMap parse_key_values(const std::string& text, const std::string& source_name);

/// Builds and validates a RunConfig, consuming exactly the known keys for
/// the selected model. Throws ParameterError listing any unknown key.
RunConfig build_run_config(const KeyValueMap& kv);

RunConfig parse_run_config(const std::string& text, const std::string& source_name = "<config>");
RunConfig load_run_config(const std::string& path);

/// Canonical, complete key/value rendering (defaults included) in a fixed
/// order; doubles use 17 significant digits so parsing is the exact inverse.
std::vector<std::pair<std::string, std::string>> to_key_values(const RunConfig& cfg);
std::string serialize_run_config(const RunConfig& cfg);

/// Rebuilds the config with one key replaced (used by parameter sweeps).
RunConfig with_override(const RunConfig& base, const std::string& key, double value);

} // namespace relopt
