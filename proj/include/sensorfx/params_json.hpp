#pragma once

#include <string>

#include <json.hpp>

#include "sensorfx/effects.hpp"
#include "sensorfx/sampling.hpp"

/// JSON forms of AugmentationParams and ParamRanges. Parsing is strict:
/// unknown keys and wrongly typed values throw InvalidArgument. Omitted
/// sections fall back to identity parameters (params) or built-in defaults
/// (ranges).
///
/// Params:
///   {"chromatic_aberration": {"S", "t_r": [x, y], "t_g": [x, y], "t_b": [x, y]},
///    "blur": {"sigma"}, "exposure": {"delta_S", "A"}, "noise": {"a", "b"},
///    "color_shift": {"dL", "da", "db"}, "noise_seed": <uint64>}
///
/// Ranges (config file):
///   {"chromatic_aberration": {"enabled", "S": [lo, hi], "t": [lo, hi]},
///    "blur": {"enabled", "sigma": [lo, hi]},
///    "exposure": {"enabled", "delta_S": [lo, hi], "A": <number> | [lo, hi]},
///    "noise": {"enabled", "a": [lo, hi], "b": [lo, hi]},
///    "color_shift": {"enabled", "dL": [lo, hi], "da": [lo, hi], "db": [lo, hi]}}
namespace sensorfx {

using Json = nlohmann::ordered_json;

Json params_to_json(const AugmentationParams& p);
AugmentationParams params_from_json(const Json& j);

Json ranges_to_json(const ParamRanges& r);
ParamRanges ranges_from_json(const Json& j);

/// Parses text; syntax errors become InvalidArgument.
Json parse_json(const std::string& text, const std::string& what);
ParamRanges load_ranges(const std::string& path);

} // namespace sensorfx
