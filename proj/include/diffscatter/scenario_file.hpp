#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diffscatter/geometry.hpp"
#include "diffscatter/metrics.hpp"
#include "diffscatter/radio.hpp"
#include "diffscatter/sweep.hpp"

namespace diffscatter {

/// Parsed scenario document.
///
/// The text format is INI-like: `[section]` headers, `key = value` lines,
/// `#` comments. Vectors are comma separated. Powers are given in dBm.
///
///   [source]   position, power_dbm, gain
///   [surface]  endpoint_a, endpoint_b, diffusing_coefficient
///   [tag]      position, gain
///   [reader]   gain, position, x_range, y_range, z, nx, ny
///   [radio]    frequency_hz (one or more), noise_dbm
///   [model]    amplitude_variant = paper-bound | exact-integral
///              db_convention = power20 | power10
struct ScenarioFile {
  Point3 source;
  double power_dbm = 0.0;
  double gain_source = 1.0;
  Point3 surface_a;
  Point3 surface_b;
  double diffusing_coefficient = 1.0;
  Point3 tag;
  double gain_tag = 1.0;
  double gain_reader = 1.0;
  std::optional<Point3> reader_position;
  std::optional<GridSpec> grid;
  std::vector<double> frequencies_hz;
  double noise_dbm = 0.0;
  AmplitudeVariant variant = AmplitudeVariant::ExactIntegral;
  DbConvention db_convention = DbConvention::Power20;

  friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;

  /// Scenario at one of the listed (or any) carrier frequencies.
  Scenario scenario(double frequency_hz) const;
  Scenario scenario() const { return scenario(frequencies_hz.front()); }
};

class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(const std::string& origin, int line, const std::string& message);

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// `origin` names the document in diagnostics, e.g. the file path.
ScenarioFile parse_scenario(std::string_view text, const std::string& origin = "<input>");
ScenarioFile load_scenario_file(const std::string& path);

std::string serialize_scenario(const ScenarioFile& file);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

std::optional<AmplitudeVariant> parse_variant(std::string_view text);
std::optional<DbConvention> parse_db_convention(std::string_view text);

}  // namespace diffscatter
