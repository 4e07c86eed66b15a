#pragma once

#include <optional>

#include "diffscatter/contrast.hpp"
#include "diffscatter/sweep.hpp"

namespace diffscatter {

/// Contrast per transmitted watt, dPs / P, evaluated from amplitudes at unit
/// power. with_surface == false forces the diffusing coefficient to zero (A0);
/// true gives As.
double per_watt_contrast(const Scenario& scenario, const Point3& reader, bool with_surface,
                         AmplitudeVariant variant);

/// Smallest transmit power with dPs >= threshold_w. Throws
/// ModelError(InfeasiblePosition) when the per-watt contrast is <= 0.
double min_source_power(const Scenario& scenario, const Point3& reader, double threshold_w,
                        bool with_surface, AmplitudeVariant variant);

/// Independent check of min_source_power: bisection on dPs(P) = threshold
/// using full power evaluations at each trial P.
double verify_min_power_by_bisection(const Scenario& scenario, const Point3& reader,
                                     double threshold_w, bool with_surface,
                                     AmplitudeVariant variant);

inline constexpr double kBisectionRelTol = 1e-9;

struct PowerPlan {
  double a0 = 0.0;
  double as = 0.0;
  // Empty where the corresponding per-watt contrast is <= 0.
  std::optional<double> pmin_no_surface_w;
  std::optional<double> pmin_with_surface_w;
  // pmin_no_surface / pmin_with_surface, when both exist.
  std::optional<double> savings_ratio;
};

PowerPlan plan_source_power(const Scenario& scenario, const Point3& reader, double threshold_w,
                            AmplitudeVariant variant);

enum class PlacementObjective { ContrastRatio, CnrVariationDb, Ber };

const char* to_string(PlacementObjective objective) noexcept;

struct PlacementResult {
  Point3 position;
  double value = 0.0;
  PlacementObjective objective = PlacementObjective::ContrastRatio;
};

/// Objective value of a cell, empty when undefined there.
std::optional<double> objective_value(const CellRecord& cell, PlacementObjective objective);

/// Exhaustive argmax over a computed map (argmin for Ber). Ties go to the
/// lowest x, then y, then z.
PlacementResult best_reader_placement(const MapResult& map, PlacementObjective objective);

PlacementResult best_reader_placement(const Scenario& scenario, const GridSpec& grid,
                                      PlacementObjective objective,
                                      const SweepOptions& options = {});

}  // namespace diffscatter
