#pragma once

#include <cmath>

namespace diffscatter {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr bool operator==(const Point3&, const Point3&) = default;
};

constexpr Point3 operator+(const Point3& p, const Point3& q) { return {p.x + q.x, p.y + q.y, p.z + q.z}; }
constexpr Point3 operator-(const Point3& p, const Point3& q) { return {p.x - q.x, p.y - q.y, p.z - q.z}; }
constexpr Point3 operator*(double s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }
constexpr double dot(const Point3& p, const Point3& q) { return p.x * q.x + p.y * q.y + p.z * q.z; }

inline double norm(const Point3& p) { return std::hypot(p.x, p.y, p.z); }

inline bool is_finite(const Point3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

/// Euclidean distance.
inline double distance(const Point3& p, const Point3& q) { return norm(p - q); }

/// Full description of one experiment: emitter, diffusing segment AB, tag,
/// and the radio parameters. Powers are in watts.
struct Scenario {
  Point3 source;
  Point3 surface_a;
  Point3 surface_b;
  Point3 tag;
  double frequency_hz = 0.0;
  double transmit_power_w = 0.0;
  double gain_source = 1.0;
  double gain_reader = 1.0;
  double gain_tag = 1.0;
  double diffusing_coefficient = 1.0;
  double noise_power_w = 0.0;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws ModelError if any invariant of the scenario is violated.
void validate(const Scenario& scenario);

/// Layout used by the reference numeric study: S(0,0,0), A(6,6,0), B(8,6,0),
/// T(-10,-10,0), 30 dBm transmit power, unit gains, -116 dBm noise.
Scenario reference_scenario(double frequency_hz);

/// Distances and baseline projections for one reader position.
///
/// The baseline is the line through the source parallel to AB, with unit
/// direction u = (B - A) / |B - A|. Projections a, b and D are signed.
struct PathGeometry {
  double r = 0.0;    // |SR|
  double r1 = 0.0;   // |SA|
  double rp1 = 0.0;  // |AR|
  double rn = 0.0;   // |SB|
  double rpn = 0.0;  // |BR|
  double rt = 0.0;   // |ST|
  double rpt = 0.0;  // |TR|
  double h = 0.0;    // |AB|
  double a = 0.0;    // (A - S) . u
  double b = 0.0;    // (R - B) . u
  double D = 0.0;    // (R - S) . u
  double d = 0.0;    // offset of the surface line from the baseline
  double alpha = 0.0;
  double e = 0.0;    // alpha * h
};

/// Unit vector along the surface, A towards B.
Point3 surface_direction(const Scenario& scenario);

PathGeometry derive_path_geometry(const Scenario& scenario, const Point3& reader);

}  // namespace diffscatter
