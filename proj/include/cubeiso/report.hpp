#pragma once

#include "cubeiso/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cubeiso
{

/// Outcome of one verification command, serialized as a single JSON object.
struct Report
{
  std::string check_name;
  std::map<std::string, nlohmann::json> parameters;
  bool passed = true;
  std::map<std::string, std::uint64_t> counters;
  std::map<std::string, nlohmann::json> extrema;
  std::int64_t runtime_ms = 0;
  /// Extra human-readable lines for stderr; not part of the JSON.
  std::vector<std::string> notes;

  void set_rational_parameter( const std::string& key, const Rational& value );
  void set_parameter( const std::string& key, nlohmann::json value );
  /// Non-finite values become null.
  void set_extremum( const std::string& key, Real value );
  void set_rational_extremum( const std::string& key, const Rational& value );
  void set_extremum( const std::string& key, nlohmann::json value );

  nlohmann::json to_json() const;
  /// The JSON text with runtime_ms zeroed, for determinism checks.
  std::string canonical_dump() const;
  /// One-line human summary.
  std::string summary() const;
};

/// Real -> JSON number, or null when not finite.
nlohmann::json real_to_json( Real value );

} // namespace cubeiso
