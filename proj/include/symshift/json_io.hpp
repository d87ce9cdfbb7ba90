#pragma once

// JSON envelope for ideals: {"n": 4, "generators": [[1,2,2,4],[0,2,3,4]]}.
// Symmetric ideals list partitions (validated nondecreasing with the offending
// index named); oracle ideals list arbitrary exponent vectors.  Serialization
// is byte-stable: generators in sorted order, schema version stamped.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "symshift/symideal.hpp"

namespace symshift {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

inline std::vector<Exponent> parse_generator_rows(const Json& j, bool as_partitions) {
  if (!j.is_object()) throw std::invalid_argument("input: expected a JSON object");
  if (!j.contains("n")) throw std::invalid_argument("input: missing field 'n'");
  if (!j.at("n").is_number_integer()) throw std::invalid_argument("input: field 'n' must be an integer");
  const int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("input: field 'n' must be positive");
  if (!j.contains("generators")) throw std::invalid_argument("input: missing field 'generators'");
  const Json& gens = j.at("generators");
  if (!gens.is_array()) throw std::invalid_argument("input: field 'generators' must be an array");
  std::vector<Exponent> rows;
  for (size_t r = 0; r < gens.size(); ++r) {
    const Json& row = gens[r];
    const std::string where = "generators[" + std::to_string(r) + "]";
    if (!row.is_array()) throw std::invalid_argument("input: " + where + " must be an array");
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("input: " + where + " has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(n));
    Exponent e(static_cast<size_t>(n));
    for (size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer())
        throw std::invalid_argument("input: " + where + "[" + std::to_string(c) + "] must be an integer");
      e[c] = row[c].get<Int>();
      if (e[c] < 0)
        throw std::invalid_argument("input: " + where + "[" + std::to_string(c) + "] must be nonnegative");
    }
    if (as_partitions) {
      if (auto bad = partition_violation(e))
        throw std::invalid_argument("input: " + where + "[" + std::to_string(*bad) +
                                    "] breaks the nondecreasing order");
    }
    rows.push_back(std::move(e));
  }
  return rows;
}

inline SymmetricIdeal symideal_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  return from_partitions(n, parse_generator_rows(j, true));
}

inline MonomialIdeal monoideal_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  return make_ideal(n, parse_generator_rows(j, false));
}

inline Json to_json(const SymmetricIdeal& I) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = I.n;
  j["generators"] = Json::array();
  for (const auto& lam : I.lambdas) j["generators"].push_back(lam);
  return j;
}

inline Json to_json(const MonomialIdeal& I) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = I.n;
  j["generators"] = Json::array();
  for (const auto& g : I.gens) j["generators"].push_back(g);
  return j;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

inline SymmetricIdeal load_symideal(const std::string& path) { return symideal_from_json(load_json_file(path)); }
inline MonomialIdeal load_monoideal(const std::string& path) { return monoideal_from_json(load_json_file(path)); }

}  // namespace symshift
