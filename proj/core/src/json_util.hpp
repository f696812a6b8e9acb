#pragma once

// Strict field access helpers shared by the JSON readers.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ridematch/types.hpp"

namespace ridematch::detail {

inline void require_object(const nlohmann::json& j, std::string_view what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
}

inline void reject_unknown(const nlohmann::json& j, std::string_view what,
                           std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) {
      throw ParseError(std::string(what) + ": unknown field '" + key + "'");
    }
  }
}

inline const nlohmann::json& require_field(const nlohmann::json& j,
                                           const char* key,
                                           std::string_view what) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string(what) + ": missing field '" + key + "'");
  }
  return *it;
}

inline std::int64_t require_int(const nlohmann::json& j, const char* key,
                                std::string_view what) {
  const auto& v = require_field(j, key, what);
  if (!v.is_number_integer()) {
    throw ParseError(std::string(what) + ": field '" + key +
                     "' must be an integer");
  }
  return v.get<std::int64_t>();
}

inline double require_number(const nlohmann::json& j, const char* key,
                             std::string_view what) {
  const auto& v = require_field(j, key, what);
  if (!v.is_number()) {
    throw ParseError(std::string(what) + ": field '" + key +
                     "' must be a number");
  }
  return v.get<double>();
}

inline std::string require_string(const nlohmann::json& j, const char* key,
                                  std::string_view what) {
  const auto& v = require_field(j, key, what);
  if (!v.is_string()) {
    throw ParseError(std::string(what) + ": field '" + key +
                     "' must be a string");
  }
  return v.get<std::string>();
}

inline const nlohmann::json& require_array(const nlohmann::json& j,
                                           const char* key,
                                           std::string_view what) {
  const auto& v = require_field(j, key, what);
  if (!v.is_array()) {
    throw ParseError(std::string(what) + ": field '" + key +
                     "' must be an array");
  }
  return v;
}

}  // namespace ridematch::detail
