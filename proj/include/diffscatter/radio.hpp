#pragma once

#include <cmath>
#include <numbers>

#include "diffscatter/geometry.hpp"

namespace diffscatter {

inline constexpr double kSpeedOfLight = 299'792'458.0;

/// Below this |k*e| the surface integral is replaced by its alpha -> 0 limit.
inline constexpr double kSmallPhaseLimit = 1e-9;

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

struct RadioConstants {
  double lambda = 0.0;  // m
  double k = 0.0;       // rad/m
  double omega = 0.0;   // rad/s
  double k_sr = 0.0;    // Gs Gr lambda^2 / (4 pi)
  double k_sar = 0.0;   // Gs Gd Gr lambda^4 / (16 pi^2)
  double k_str = 0.0;   // Gs Gt^2 Gr lambda^4 / (64 pi^3)
};

/// How the diffused-path amplitude is closed.
///
/// PaperBound drops the 1/|alpha| factor of the surface integral and yields the
/// lower bound (2/k) sqrt(Ksar P) / (r1 r'1). ExactIntegral keeps it, so the
/// closed form is the n -> infinity limit of the discrete ray sum.
enum class AmplitudeVariant { PaperBound, ExactIntegral };

const char* to_string(AmplitudeVariant v) noexcept;

struct Amplitudes {
  double dir = 0.0;
  double tag = 0.0;
  // Variant amplitude. +inf for ExactIntegral when |k e| < kSmallPhaseLimit.
  double dif = 0.0;
  // sqrt(Ksar P) / (r1 r'1): amplitude per unit surface length.
  double dif_density = 0.0;
  AmplitudeVariant variant = AmplitudeVariant::ExactIntegral;
};

RadioConstants derive_constants(const Scenario& scenario);

double amplitude_dir(const RadioConstants& c, double power_w, const PathGeometry& g);
double amplitude_tag(const RadioConstants& c, double power_w, const PathGeometry& g);

/// Throws ModelError(AlphaDegenerate) for ExactIntegral when |k e| is below
/// kSmallPhaseLimit; the field module handles that case with the analytic limit.
double amplitude_dif(const RadioConstants& c, double power_w, const PathGeometry& g,
                     AmplitudeVariant variant);

Amplitudes derive_amplitudes(const RadioConstants& c, double power_w, const PathGeometry& g,
                             AmplitudeVariant variant);

}  // namespace diffscatter
