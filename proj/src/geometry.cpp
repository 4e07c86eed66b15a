#include "diffscatter/geometry.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "diffscatter/error.hpp"
#include "diffscatter/radio.hpp"

namespace diffscatter {

namespace {

std::string describe(const Point3& p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " + std::to_string(p.z) + ")";
}

// Distance from p to the closed segment [a, b].
double distance_to_segment(const Point3& p, const Point3& a, const Point3& b) {
  const Point3 ab = b - a;
  const double len2 = dot(ab, ab);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

}  // namespace

void validate(const Scenario& s) {
  for (const auto& [name, p] : std::array<std::pair<const char*, const Point3*>, 4>{
           {{"source", &s.source}, {"surface endpoint A", &s.surface_a},
            {"surface endpoint B", &s.surface_b}, {"tag", &s.tag}}}) {
    if (!is_finite(*p)) {
      throw ModelError(ErrorCode::InvalidScenario, std::string(name) + " position is not finite");
    }
  }
  if (!(s.frequency_hz > 0.0) || !std::isfinite(s.frequency_hz)) {
    throw ModelError(ErrorCode::InvalidFrequency, "carrier frequency must be positive and finite");
  }
  if (!(s.transmit_power_w >= 0.0) || !std::isfinite(s.transmit_power_w)) {
    throw ModelError(ErrorCode::InvalidScenario, "transmit power must be >= 0 W");
  }
  for (double g : {s.gain_source, s.gain_reader, s.gain_tag, s.diffusing_coefficient}) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
      throw ModelError(ErrorCode::InvalidScenario, "gains and diffusing coefficient must be >= 0");
    }
  }
  if (!(s.noise_power_w > 0.0) || !std::isfinite(s.noise_power_w)) {
    throw ModelError(ErrorCode::InvalidNoise, "noise power must be > 0 W");
  }
  if (distance(s.surface_a, s.surface_b) == 0.0) {
    throw ModelError(ErrorCode::DegenerateSurface, "surface endpoints coincide");
  }
  const std::array<std::pair<const char*, Point3>, 4> named{
      {{"source", s.source}, {"A", s.surface_a}, {"B", s.surface_b}, {"tag", s.tag}}};
  for (std::size_t i = 0; i < named.size(); ++i) {
    for (std::size_t j = i + 1; j < named.size(); ++j) {
      if (named[i].second == named[j].second) {
        throw ModelError(ErrorCode::CoincidentPoints, std::string(named[i].first) + " and " +
                                                          named[j].first + " coincide at " +
                                                          describe(named[i].second));
      }
    }
  }
}

Scenario reference_scenario(double frequency_hz) {
  Scenario s;
  s.source = {0.0, 0.0, 0.0};
  s.surface_a = {6.0, 6.0, 0.0};
  s.surface_b = {8.0, 6.0, 0.0};
  s.tag = {-10.0, -10.0, 0.0};
  s.frequency_hz = frequency_hz;
  s.transmit_power_w = dbm_to_watts(30.0);
  s.noise_power_w = dbm_to_watts(-116.0);
  return s;
}

Point3 surface_direction(const Scenario& s) {
  const Point3 ab = s.surface_b - s.surface_a;
  const double h = norm(ab);
  if (h == 0.0) {
    throw ModelError(ErrorCode::DegenerateSurface, "surface endpoints coincide");
  }
  return (1.0 / h) * ab;
}

PathGeometry derive_path_geometry(const Scenario& s, const Point3& reader) {
  if (!is_finite(reader)) {
    throw ModelError(ErrorCode::InvalidArgument, "reader position is not finite");
  }
  const Point3 u = surface_direction(s);
  for (const auto& [name, p] : std::array<std::pair<const char*, const Point3*>, 4>{
           {{"source", &s.source}, {"surface endpoint A", &s.surface_a},
            {"surface endpoint B", &s.surface_b}, {"tag", &s.tag}}}) {
    if (reader == *p) {
      throw ModelError(ErrorCode::CoincidentPoints,
                       "reader " + describe(reader) + " coincides with the " + name);
    }
  }
  if (distance_to_segment(reader, s.surface_a, s.surface_b) == 0.0) {
    throw ModelError(ErrorCode::CoincidentPoints,
                     "reader " + describe(reader) + " lies on the diffusing surface");
  }

  PathGeometry g;
  g.r = distance(s.source, reader);
  g.r1 = distance(s.source, s.surface_a);
  g.rp1 = distance(s.surface_a, reader);
  g.rn = distance(s.source, s.surface_b);
  g.rpn = distance(s.surface_b, reader);
  g.rt = distance(s.source, s.tag);
  g.rpt = distance(s.tag, reader);
  g.h = distance(s.surface_a, s.surface_b);
  g.a = dot(s.surface_a - s.source, u);
  g.b = dot(reader - s.surface_b, u);
  g.D = dot(reader - s.source, u);
  g.d = norm((s.surface_a - s.source) - g.a * u);
  g.alpha = g.a / g.r1 - g.b / g.rp1;
  g.e = g.alpha * g.h;
  return g;
}

}  // namespace diffscatter
