#include "diffscatter/contrast.hpp"

#include <cmath>

namespace diffscatter {

PowerBreakdown power_breakdown(const RadioConstants& c, const Amplitudes& amp,
                               const PathGeometry& g, TagState state) {
  const double dif = diffuse_factor(c, amp, g);
  const double k = c.k;
  const double surface_path = g.r1 + g.rp1 + 0.5 * g.e;
  const double tag_path = g.rt + g.rpt;

  PowerBreakdown p;
  p.p_dir = amp.dir * amp.dir;
  p.p_dif = dif * dif;
  p.p_dir_dif = 2.0 * amp.dir * dif * std::cos(k * (surface_path - g.r));
  if (state == TagState::Backscattering) {
    p.p_tag = amp.tag * amp.tag;
    p.p_dir_tag = 2.0 * amp.dir * amp.tag * std::cos(k * (tag_path - g.r));
    p.p_dif_tag = 2.0 * dif * amp.tag * std::cos(k * (surface_path - tag_path));
  }
  p.p1 = p.p_dir + p.p_dif + p.p_dir_dif;
  p.dps = p.p_tag + p.p_dir_tag + p.p_dif_tag;
  p.pr = p.p1 + p.dps;
  return p;
}

PowerBreakdown power_breakdown(const Scenario& s, const Point3& reader, AmplitudeVariant variant,
                               TagState state) {
  validate(s);
  const RadioConstants c = derive_constants(s);
  const PathGeometry g = derive_path_geometry(s, reader);
  return power_breakdown(c, derive_amplitudes(c, s.transmit_power_w, g, variant), g, state);
}

Scenario without_surface(Scenario s) {
  s.diffusing_coefficient = 0.0;
  return s;
}

ContrastComparison compare_with_without_surface(const PowerBreakdown& with_surface,
                                                const PowerBreakdown& without_surface) {
  ContrastComparison out;
  out.dps_with = with_surface.dps;
  out.dps_without = without_surface.dps;
  out.delta_dif_term = with_surface.p_dif_tag;
  if (out.dps_without != 0.0) {
    out.delta_dif = out.dps_with / out.dps_without;
  }
  return out;
}

ContrastComparison compare_with_without_surface(const Scenario& s, const Point3& reader,
                                                AmplitudeVariant variant) {
  return compare_with_without_surface(power_breakdown(s, reader, variant),
                                      power_breakdown(without_surface(s), reader, variant));
}

}  // namespace diffscatter
