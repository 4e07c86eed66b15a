#include "diffscatter/field.hpp"

#include <string>

#include "diffscatter/error.hpp"

namespace diffscatter {

const char* to_string(GeometryMode mode) noexcept {
  return mode == GeometryMode::Linearized ? "approx" : "exact";
}

namespace {

// Shared e^{i omega t}. Kept out of the per-path phases so a large omega * t
// rounds once instead of differently on every path.
ComplexSignal carrier(const RadioConstants& c, double t) { return std::polar(1.0, c.omega * t); }

}  // namespace

double diffuse_factor(const RadioConstants& c, const Amplitudes& amp, const PathGeometry& g) {
  const double half_phase = 0.5 * c.k * g.e;
  if (amp.variant == AmplitudeVariant::PaperBound) {
    return amp.dif * std::sin(half_phase);
  }
  if (std::abs(c.k * g.e) < kSmallPhaseLimit) {
    return amp.dif_density * g.h;
  }
  return amp.dif * std::sin(std::abs(half_phase));
}

ComplexSignal signal_direct(const RadioConstants& c, const Amplitudes& amp, const PathGeometry& g,
                            double t) {
  return carrier(c, t) * std::polar(amp.dir, -c.k * g.r);
}

ComplexSignal signal_tag(const RadioConstants& c, const Amplitudes& amp, const PathGeometry& g,
                         double t, TagState state) {
  if (state == TagState::Transparent) {
    return {0.0, 0.0};
  }
  return carrier(c, t) * std::polar(amp.tag, -c.k * (g.rt + g.rpt));
}

ComplexSignal signal_diffuse_closed_form(const RadioConstants& c, const Amplitudes& amp,
                                         const PathGeometry& g, double t) {
  // The factor is signed, so it cannot go through std::polar's modulus.
  const double factor = diffuse_factor(c, amp, g);
  return carrier(c, t) * std::polar(1.0, -c.k * (g.r1 + g.rp1 + 0.5 * g.e)) * factor;
}

ComplexSignal signal_diffuse_discrete(const Scenario& s, const Point3& reader, double t,
                                      std::int64_t n, GeometryMode mode) {
  if (n < 1) {
    throw ModelError(ErrorCode::InvalidRayCount,
                     "ray count must be >= 1, got " + std::to_string(n));
  }
  const RadioConstants c = derive_constants(s);
  const PathGeometry g = derive_path_geometry(s, reader);
  const Point3 u = surface_direction(s);
  const double du = g.h / static_cast<double>(n);
  const double root_ksar_p = std::sqrt(c.k_sar * s.transmit_power_w);

  ComplexSignal sum{0.0, 0.0};
  for (std::int64_t j = 0; j <= n; ++j) {
    const double along = static_cast<double>(j) * du;
    double rj = 0.0;
    double rpj = 0.0;
    double amplitude = 0.0;
    if (mode == GeometryMode::Linearized) {
      rj = g.r1 + g.a * along / g.r1;
      rpj = g.rp1 - g.b * along / g.rp1;
      amplitude = root_ksar_p / (g.r1 * g.rp1);
    } else {
      const Point3 sample = s.surface_a + along * u;
      rj = distance(s.source, sample);
      rpj = distance(sample, reader);
      amplitude = root_ksar_p / (rj * rpj);
    }
    const double weight = (j == 0 || j == n) ? 0.5 : 1.0;
    sum += std::polar(weight * amplitude, -c.k * (rj + rpj));
  }
  return carrier(c, t) * sum * du;
}

ComplexSignal total_signal(const Scenario& s, const Point3& reader, double t, TagState state,
                           AmplitudeVariant variant) {
  const RadioConstants c = derive_constants(s);
  const PathGeometry g = derive_path_geometry(s, reader);
  const Amplitudes amp = derive_amplitudes(c, s.transmit_power_w, g, variant);
  return signal_direct(c, amp, g, t) + signal_diffuse_closed_form(c, amp, g, t) +
         signal_tag(c, amp, g, t, state);
}

}  // namespace diffscatter
