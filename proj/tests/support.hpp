#pragma once

// Test-only helpers: seeded scenario generators and a from-scratch evaluation
// of the link model that shares no code with the library.

#include <cmath>
#include <complex>
#include <random>

#include "diffscatter/geometry.hpp"

namespace testing_support {

using diffscatter::Point3;
using diffscatter::Scenario;

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

struct RandomCase {
  Scenario scenario;
  Point3 reader;
};

/// Positions uniform in [-30, 30]^3, f in {0.7, 2.6, 3.5} GHz, gains in [0, 2].
/// Rejects near-coincident layouts so every case is well conditioned.
class ScenarioGenerator {
 public:
  explicit ScenarioGenerator(std::uint64_t seed) : rng_(seed) {}

  Point3 point() {
    std::uniform_real_distribution<double> pos(-30.0, 30.0);
    return {pos(rng_), pos(rng_), pos(rng_)};
  }

  RandomCase next() {
    std::uniform_real_distribution<double> gain(0.0, 2.0);
    std::uniform_int_distribution<int> pick(0, 2);
    static constexpr double kFreqs[] = {0.7e9, 2.6e9, 3.5e9};
    while (true) {
      RandomCase c;
      Scenario& s = c.scenario;
      s.source = point();
      s.surface_a = point();
      s.surface_b = point();
      s.tag = point();
      c.reader = point();
      s.frequency_hz = kFreqs[pick(rng_)];
      s.transmit_power_w = 1.0;
      s.gain_source = gain(rng_);
      s.gain_reader = gain(rng_);
      s.gain_tag = gain(rng_);
      s.diffusing_coefficient = gain(rng_);
      s.noise_power_w = 1e-14;
      const Point3 pts[] = {s.source, s.surface_a, s.surface_b, s.tag, c.reader};
      bool ok = true;
      for (int i = 0; i < 5 && ok; ++i) {
        for (int j = i + 1; j < 5 && ok; ++j) {
          ok = diffscatter::distance(pts[i], pts[j]) > 0.5;
        }
      }
      if (ok) {
        return c;
      }
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Independent evaluation of the three received path signals at t = 0 from raw
/// coordinates, exact-integral closure computed as the literal surface
/// integral (1 - exp(-i k alpha h)) / (i k alpha).
struct ReferenceFields {
  std::complex<double> direct;
  std::complex<double> diffuse;
  std::complex<double> tag;
};

inline ReferenceFields reference_fields(const Scenario& s, const Point3& r) {
  constexpr double kPi = 3.14159265358979323846;
  auto dist = [](const Point3& p, const Point3& q) {
    const double dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
  };
  const double lambda = 299792458.0 / s.frequency_hz;
  const double k = 2.0 * kPi / lambda;
  const double p = s.transmit_power_w;
  const double ksr = s.gain_source * s.gain_reader * lambda * lambda / (4.0 * kPi);
  const double ksar = s.gain_source * s.diffusing_coefficient * s.gain_reader *
                      std::pow(lambda, 4) / (16.0 * kPi * kPi);
  const double kstr = s.gain_source * s.gain_tag * s.gain_tag * s.gain_reader *
                      std::pow(lambda, 4) / (64.0 * kPi * kPi * kPi);

  const double h = dist(s.surface_a, s.surface_b);
  const Point3 u{(s.surface_b.x - s.surface_a.x) / h, (s.surface_b.y - s.surface_a.y) / h,
                 (s.surface_b.z - s.surface_a.z) / h};
  const double a = (s.surface_a.x - s.source.x) * u.x + (s.surface_a.y - s.source.y) * u.y +
                   (s.surface_a.z - s.source.z) * u.z;
  const double b = (r.x - s.surface_b.x) * u.x + (r.y - s.surface_b.y) * u.y +
                   (r.z - s.surface_b.z) * u.z;
  const double rr = dist(s.source, r);
  const double r1 = dist(s.source, s.surface_a);
  const double rp1 = dist(s.surface_a, r);
  const double rt = dist(s.source, s.tag);
  const double rpt = dist(s.tag, r);
  const double alpha = a / r1 - b / rp1;

  using namespace std::complex_literals;
  ReferenceFields f;
  f.direct = std::sqrt(ksr * p) / rr * std::exp(-1i * (k * rr));
  f.tag = std::sqrt(kstr * p) / (rt * rpt) * std::exp(-1i * (k * (rt + rpt)));
  const std::complex<double> integral =
      std::abs(k * alpha * h) < 1e-9 ? std::complex<double>(h)
                                     : (1.0 - std::exp(-1i * (k * alpha * h))) / (1i * k * alpha);
  f.diffuse = std::sqrt(ksar * p) / (r1 * rp1) * std::exp(-1i * (k * (r1 + rp1))) * integral;
  return f;
}

}  // namespace testing_support
