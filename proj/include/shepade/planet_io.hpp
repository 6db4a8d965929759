#pragma once

// Planet documents, e.g.
//   {"kind": "polyprofile", "s2": ["1", "0", "0", "0", "-1"], "z_min": "-1", "z_max": "1"}
//   {"kind": "cylinder", "a": "1/2", "L": "sqrt(3)", "rho": "1", "G": "1"}
// Numbers are exact strings (fractions, decimals, sqrt(k), q*sqrt(k)) or
// JSON integers.

#include "shepade/planet.hpp"

#include "json.hpp"

#include <filesystem>
#include <string_view>

namespace shepade {

/// Throws InputError naming the offending field.
ShapeProfile planet_from_json(const nlohmann::json& doc);
/// Throws InputError with line and column for malformed JSON.
ShapeProfile parse_planet(std::string_view text);
ShapeProfile load_planet(const std::filesystem::path& path);

/// Exact strings; planet_from_json(planet_to_json(p)) reproduces p.
nlohmann::ordered_json planet_to_json(const ShapeProfile& profile);

}  // namespace shepade
