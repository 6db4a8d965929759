#include "shepade/planet_io.hpp"

#include "shepade/errors.hpp"

#include <fstream>
#include <sstream>

namespace shepade {

namespace {

using nlohmann::json;

std::string exact_text(const json& value, const std::string& field) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  if (value.is_number()) throw InputError("field '" + field + "': write non-integers as strings so they stay exact");
  throw InputError("field '" + field + "': expected a number string, got " + std::string(value.type_name()));
}

Surd surd_field(const json& doc, const std::string& field, const char* fallback = nullptr) {
  if (!doc.contains(field)) {
    if (fallback) return Surd::parse(fallback);
    throw InputError("missing field '" + field + "'");
  }
  try {
    return Surd::parse(exact_text(doc.at(field), field));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError("field '" + field + "': " + e.what());
  }
}

Rational rational_field(const json& doc, const std::string& field) {
  Surd s = surd_field(doc, field, "1");
  if (!s.is_rational()) throw InputError("field '" + field + "' must be rational");
  return s.coeff();
}

}  // namespace

ShapeProfile planet_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("planet document must be a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) throw InputError("missing string field 'kind'");
  const std::string kind = doc.at("kind").get<std::string>();
  const Rational rho = rational_field(doc, "rho");
  const Rational G = rational_field(doc, "G");
  try {
    if (kind == "spheroid") return ShapeProfile::spheroid(surd_field(doc, "a"), surd_field(doc, "b"), rho, G);
    if (kind == "cylinder") return ShapeProfile::cylinder(surd_field(doc, "a"), surd_field(doc, "L"), rho, G);
    if (kind == "polyprofile") {
      if (!doc.contains("s2") || !doc.at("s2").is_array() || doc.at("s2").empty())
        throw InputError("field 's2' must be a non-empty array of coefficients, constant term first");
      std::vector<Rational> c;
      for (std::size_t k = 0; k < doc.at("s2").size(); ++k) {
        const std::string field = "s2[" + std::to_string(k) + "]";
        try {
          c.push_back(parse_rational(exact_text(doc.at("s2")[k], field)));
        } catch (const InputError&) {
          throw;
        } catch (const std::exception& e) {
          throw InputError("field '" + field + "': " + e.what());
        }
      }
      return ShapeProfile::polynomial(RatPoly(std::move(c)), surd_field(doc, "z_min"), surd_field(doc, "z_max"), rho, G);
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("field 'kind': unknown kind '" + kind + "' (spheroid, cylinder, polyprofile)");
}

ShapeProfile parse_planet(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError("planet JSON line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     e.what());
  }
  return planet_from_json(doc);
}

ShapeProfile load_planet(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open planet file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_planet(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

nlohmann::ordered_json planet_to_json(const ShapeProfile& profile) {
  nlohmann::ordered_json doc;
  switch (profile.kind()) {
    case ShapeKind::spheroid:
      doc["kind"] = "spheroid";
      doc["a"] = profile.a().to_string();
      doc["b"] = profile.b().to_string();
      break;
    case ShapeKind::cylinder:
      doc["kind"] = "cylinder";
      doc["a"] = profile.a().to_string();
      doc["L"] = profile.length().to_string();
      break;
    case ShapeKind::polynomial: {
      doc["kind"] = "polyprofile";
      auto& s2 = doc["s2"] = nlohmann::ordered_json::array();
      for (const auto& c : profile.s2().coeffs()) s2.push_back(c.get_str());
      doc["z_min"] = profile.z_min().to_string();
      doc["z_max"] = profile.z_max().to_string();
      break;
    }
  }
  doc["rho"] = profile.rho().get_str();
  doc["G"] = profile.G().get_str();
  return doc;
}

}  // namespace shepade
