#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jorder/io.hpp"

namespace jorder {

/// Built-in instance aliases: q, qq, torus2, torus3, sym2q, sym3q, spin3q,
/// dual-q, dual-sym2q, zint, trivial-n.
const std::vector<std::pair<std::string, AlgebraDescriptor>>& builtin_instances();

/// Resolves an alias or a name declared in an optional config document
/// ({"instances": {name: descriptor, ...}}).
AlgebraDescriptor find_instance(const std::string& name, const Json* config = nullptr);

/// Named suite bundle from the config ({"suites": {name: ["pco", ...]}}).
std::optional<std::vector<std::string>> find_suite_bundle(const std::string& name,
                                                          const Json* config);

/// Interval catalog declared in the config over a given instance:
/// {"catalogs": {name: [[point, point], ...]}} with chart-point entries.
std::vector<ChartInterval> load_catalog(const std::string& name, const AlgebraDescriptor& d,
                                        const Json& config);

/// Loads and validates a config file.
Json load_config(const std::string& path);

} // namespace jorder
