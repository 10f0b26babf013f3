// zg/element_io.hpp
//
// JSON exchange format for ring elements:
//   {"group": "<built-in name or file path>", "coeffs": {"<element index>": c, ...}}
// Coefficient values may be JSON integers or decimal strings (for values
// beyond 64 bits). Zero coefficients are accepted on input and dropped.

#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <memory>
#include <string>

#include <json.hpp>

#include "zg/errors.hpp"
#include "zg/group_ring.hpp"

namespace zg {

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

// The "group" field of an element file, used to resolve the group when the
// caller did not name one.
inline std::string element_json_group(const nlohmann::json& j) {
  if (!j.is_object()) throw parse_error("element JSON must be an object");
  if (!j.contains("group") || !j.at("group").is_string())
    throw parse_error("element JSON needs a string 'group' field");
  return j.at("group").get<std::string>();
}

inline int_t coeff_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return int_t(v.get<long long>());
  if (v.is_string()) return parse_int(v.get<std::string>());
  throw parse_error("coefficient must be an integer or a decimal string");
}

// Decode the coefficient table against an already built group. The group is
// resolved once by the caller so all elements of a run share one instance.
inline ring_element element_from_json(const nlohmann::json& j,
                                      std::shared_ptr<const group> gptr) {
  if (!j.is_object()) throw parse_error("element JSON must be an object");
  if (!j.contains("coeffs") || !j.at("coeffs").is_object())
    throw parse_error("element JSON needs an object 'coeffs' field");
  ring_element u(std::move(gptr));
  for (const auto& [key, value] : j.at("coeffs").items()) {
    long long idx;
    try {
      std::size_t pos = 0;
      idx = std::stoll(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw parse_error("coefficient key '" + key + "' is not an element index");
    }
    if (idx < 0 || idx >= u.grp().order())
      throw parse_error("element index " + key + " outside 0.." +
                        std::to_string(u.grp().order() - 1));
    int_t c = coeff_from_json(value);
    if (u.coeff(static_cast<int32_t>(idx)) != 0)
      throw parse_error("duplicate coefficient key '" + key + "'");
    u.add_term(static_cast<int32_t>(idx), c);
  }
  return u;
}

// Coefficients as a JSON object; values that fit in 64 bits are emitted as
// numbers, larger ones as decimal strings.
inline nlohmann::json coeffs_to_json(const std::map<int32_t, int_t>& coeffs) {
  nlohmann::json out = nlohmann::json::object();
  static const int_t lo = std::numeric_limits<long long>::min();
  static const int_t hi = std::numeric_limits<long long>::max();
  for (const auto& [g, c] : coeffs) {
    if (c >= lo && c <= hi)
      out[std::to_string(g)] = static_cast<long long>(c);
    else
      out[std::to_string(g)] = c.str();
  }
  return out;
}

inline nlohmann::json element_to_json(const ring_element& u) {
  nlohmann::json j;
  j["group"] = u.grp().id();
  j["coeffs"] = coeffs_to_json(u.coeffs());
  return j;
}

}  // namespace zg
