#pragma once

#include <optional>

#include "diffscatter/field.hpp"
#include "diffscatter/geometry.hpp"
#include "diffscatter/radio.hpp"

namespace diffscatter {

/// Expansion of |Y_dir + Y_dif + Y_tag|^2 into its six terms. Cross terms and
/// the contrast dps are signed. All values in watts.
struct PowerBreakdown {
  double p_dir = 0.0;
  double p_dif = 0.0;
  double p_dir_dif = 0.0;
  double p_tag = 0.0;
  double p_dir_tag = 0.0;
  double p_dif_tag = 0.0;
  double p1 = 0.0;   // transparent-state power
  double dps = 0.0;  // contrast between the two tag states
  double pr = 0.0;   // p1 + dps
};

PowerBreakdown power_breakdown(const RadioConstants& c, const Amplitudes& amp,
                               const PathGeometry& g, TagState state = TagState::Backscattering);

PowerBreakdown power_breakdown(const Scenario& scenario, const Point3& reader,
                               AmplitudeVariant variant,
                               TagState state = TagState::Backscattering);

/// Same scenario with the diffusing coefficient forced to zero.
Scenario without_surface(Scenario scenario);

struct ContrastComparison {
  double dps_with = 0.0;
  double dps_without = 0.0;
  // dps_with / dps_without; empty when dps_without == 0.
  std::optional<double> delta_dif;
  // Additive surface contribution, equal to p_dif_tag.
  double delta_dif_term = 0.0;
};

ContrastComparison compare_with_without_surface(const Scenario& scenario, const Point3& reader,
                                                AmplitudeVariant variant);

ContrastComparison compare_with_without_surface(const PowerBreakdown& with_surface,
                                                const PowerBreakdown& without_surface);

}  // namespace diffscatter
