#include "cubeiso/report.hpp"

#include <cmath>
#include <sstream>

namespace cubeiso
{

nlohmann::json real_to_json( Real value )
{
  if ( !std::isfinite( value ) )
    return nullptr;
  return static_cast<double>( value );
}

void Report::set_rational_parameter( const std::string& key, const Rational& value )
{
  parameters[key] = format_rational( value );
}

void Report::set_parameter( const std::string& key, nlohmann::json value )
{
  parameters[key] = std::move( value );
}

void Report::set_extremum( const std::string& key, Real value )
{
  extrema[key] = real_to_json( value );
}

void Report::set_rational_extremum( const std::string& key, const Rational& value )
{
  extrema[key] = format_rational( value );
}

void Report::set_extremum( const std::string& key, nlohmann::json value )
{
  extrema[key] = std::move( value );
}

nlohmann::json Report::to_json() const
{
  nlohmann::json j;
  j["check_name"] = check_name;
  j["parameters"] = nlohmann::json::object();
  for ( const auto& [k, v] : parameters )
    j["parameters"][k] = v;
  j["passed"] = passed;
  j["counters"] = nlohmann::json::object();
  for ( const auto& [k, v] : counters )
    j["counters"][k] = v;
  j["extrema"] = nlohmann::json::object();
  for ( const auto& [k, v] : extrema )
    j["extrema"][k] = v;
  j["runtime_ms"] = runtime_ms;
  return j;
}

std::string Report::canonical_dump() const
{
  auto j = to_json();
  j["runtime_ms"] = 0;
  return j.dump();
}

std::string Report::summary() const
{
  std::ostringstream out;
  out << check_name << ": " << ( passed ? "PASSED" : "FAILED" );
  for ( const auto& [k, v] : counters )
    out << "  " << k << "=" << v;
  out << "  (" << runtime_ms << " ms)";
  return out.str();
}

} // namespace cubeiso
