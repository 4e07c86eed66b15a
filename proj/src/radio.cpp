#include "diffscatter/radio.hpp"

#include <limits>

#include "diffscatter/error.hpp"

namespace diffscatter {

using std::numbers::pi;

const char* to_string(AmplitudeVariant v) noexcept {
  return v == AmplitudeVariant::PaperBound ? "paper-bound" : "exact-integral";
}

RadioConstants derive_constants(const Scenario& s) {
  if (!(s.frequency_hz > 0.0) || !std::isfinite(s.frequency_hz)) {
    throw ModelError(ErrorCode::InvalidFrequency, "carrier frequency must be positive and finite");
  }
  RadioConstants c;
  c.lambda = kSpeedOfLight / s.frequency_hz;
  c.k = 2.0 * pi / c.lambda;
  c.omega = 2.0 * pi * s.frequency_hz;
  const double l2 = c.lambda * c.lambda;
  const double l4 = l2 * l2;
  c.k_sr = s.gain_source * s.gain_reader * l2 / (4.0 * pi);
  c.k_sar = s.gain_source * s.diffusing_coefficient * s.gain_reader * l4 / (16.0 * pi * pi);
  c.k_str = s.gain_source * s.gain_tag * s.gain_tag * s.gain_reader * l4 / (64.0 * pi * pi * pi);
  return c;
}

double amplitude_dir(const RadioConstants& c, double power_w, const PathGeometry& g) {
  return std::sqrt(c.k_sr * power_w) / g.r;
}

double amplitude_tag(const RadioConstants& c, double power_w, const PathGeometry& g) {
  return std::sqrt(c.k_str * power_w) / (g.rt * g.rpt);
}

namespace {

double dif_density(const RadioConstants& c, double power_w, const PathGeometry& g) {
  return std::sqrt(c.k_sar * power_w) / (g.r1 * g.rp1);
}

bool alpha_degenerate(const RadioConstants& c, const PathGeometry& g) {
  return std::abs(c.k * g.e) < kSmallPhaseLimit;
}

}  // namespace

double amplitude_dif(const RadioConstants& c, double power_w, const PathGeometry& g,
                     AmplitudeVariant variant) {
  const double bound = 2.0 / c.k * dif_density(c, power_w, g);
  if (variant == AmplitudeVariant::PaperBound) {
    return bound;
  }
  if (alpha_degenerate(c, g)) {
    throw ModelError(ErrorCode::AlphaDegenerate,
                     "exact-integral amplitude diverges for alpha ~ 0; use the small-alpha limit");
  }
  return bound / std::abs(g.alpha);
}

Amplitudes derive_amplitudes(const RadioConstants& c, double power_w, const PathGeometry& g,
                             AmplitudeVariant variant) {
  Amplitudes amp;
  amp.dir = amplitude_dir(c, power_w, g);
  amp.tag = amplitude_tag(c, power_w, g);
  amp.dif_density = dif_density(c, power_w, g);
  amp.variant = variant;
  if (variant == AmplitudeVariant::ExactIntegral && alpha_degenerate(c, g)) {
    amp.dif = std::numeric_limits<double>::infinity();
  } else {
    amp.dif = amplitude_dif(c, power_w, g, variant);
  }
  return amp;
}

}  // namespace diffscatter
