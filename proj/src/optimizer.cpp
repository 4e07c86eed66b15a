#include "diffscatter/optimizer.hpp"

#include <cmath>
#include <string>

#include "diffscatter/error.hpp"

namespace diffscatter {

namespace {

Scenario configure(Scenario s, bool with_surface, double power_w) {
  if (!with_surface) {
    s.diffusing_coefficient = 0.0;
  }
  s.transmit_power_w = power_w;
  return s;
}

void check_threshold(double threshold_w) {
  if (!(threshold_w >= 0.0) || !std::isfinite(threshold_w)) {
    throw ModelError(ErrorCode::InvalidArgument, "power threshold must be finite and >= 0 W");
  }
}

[[noreturn]] void throw_infeasible(double per_watt) {
  throw ModelError(ErrorCode::InfeasiblePosition,
                   "contrast per watt is " + std::to_string(per_watt) +
                       " (<= 0): no transmit power reaches the threshold here");
}

bool lexicographically_less(const Point3& p, const Point3& q) {
  if (p.x != q.x) return p.x < q.x;
  if (p.y != q.y) return p.y < q.y;
  return p.z < q.z;
}

}  // namespace

double per_watt_contrast(const Scenario& s, const Point3& reader, bool with_surface,
                         AmplitudeVariant variant) {
  return power_breakdown(configure(s, with_surface, 1.0), reader, variant).dps;
}

double min_source_power(const Scenario& s, const Point3& reader, double threshold_w,
                        bool with_surface, AmplitudeVariant variant) {
  check_threshold(threshold_w);
  const double per_watt = per_watt_contrast(s, reader, with_surface, variant);
  if (!(per_watt > 0.0)) {
    throw_infeasible(per_watt);
  }
  return threshold_w / per_watt;
}

double verify_min_power_by_bisection(const Scenario& s, const Point3& reader, double threshold_w,
                                     bool with_surface, AmplitudeVariant variant) {
  check_threshold(threshold_w);
  auto contrast_at = [&](double power_w) {
    return power_breakdown(configure(s, with_surface, power_w), reader, variant).dps;
  };
  const double at_unit = contrast_at(1.0);
  if (!(at_unit > 0.0)) {
    throw_infeasible(at_unit);
  }
  if (threshold_w == 0.0) {
    return 0.0;
  }

  double lo = 0.0;
  double hi = 1.0;
  while (contrast_at(hi) < threshold_w) {
    lo = hi;
    hi *= 2.0;
  }
  for (int iter = 0; iter < 400 && hi - lo > kBisectionRelTol * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (contrast_at(mid) < threshold_w) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

PowerPlan plan_source_power(const Scenario& s, const Point3& reader, double threshold_w,
                            AmplitudeVariant variant) {
  check_threshold(threshold_w);
  PowerPlan plan;
  plan.a0 = per_watt_contrast(s, reader, false, variant);
  plan.as = per_watt_contrast(s, reader, true, variant);
  if (plan.a0 > 0.0) plan.pmin_no_surface_w = threshold_w / plan.a0;
  if (plan.as > 0.0) plan.pmin_with_surface_w = threshold_w / plan.as;
  if (plan.pmin_no_surface_w && plan.pmin_with_surface_w && *plan.pmin_with_surface_w > 0.0) {
    plan.savings_ratio = *plan.pmin_no_surface_w / *plan.pmin_with_surface_w;
  } else if (plan.a0 > 0.0 && plan.as > 0.0) {
    // Zero threshold: both powers vanish, the ratio is still As / A0.
    plan.savings_ratio = plan.as / plan.a0;
  }
  return plan;
}

const char* to_string(PlacementObjective objective) noexcept {
  switch (objective) {
    case PlacementObjective::ContrastRatio: return "contrast-ratio";
    case PlacementObjective::CnrVariationDb: return "cnr-variation-db";
    case PlacementObjective::Ber: return "ber";
  }
  return "unknown";
}

std::optional<double> objective_value(const CellRecord& cell, PlacementObjective objective) {
  if (cell.mask & kMaskGeometry) {
    return std::nullopt;
  }
  switch (objective) {
    case PlacementObjective::ContrastRatio: return cell.delta_dif;
    case PlacementObjective::CnrVariationDb: return cell.snr_variation_db;
    case PlacementObjective::Ber: return cell.ber;
  }
  return std::nullopt;
}

PlacementResult best_reader_placement(const MapResult& map, PlacementObjective objective) {
  if (map.cells.empty()) {
    throw ModelError(ErrorCode::EmptyGrid, "placement search over an empty grid");
  }
  const bool minimize = objective == PlacementObjective::Ber;
  std::optional<PlacementResult> best;
  for (const CellRecord& cell : map.cells) {
    const std::optional<double> value = objective_value(cell, objective);
    if (!value || std::isnan(*value)) {
      continue;
    }
    const bool better = !best || (minimize ? *value < best->value : *value > best->value);
    const bool tie_wins = best && *value == best->value &&
                          lexicographically_less(cell.position, best->position);
    if (better || tie_wins) {
      best = PlacementResult{cell.position, *value, objective};
    }
  }
  if (!best) {
    throw ModelError(ErrorCode::InfeasiblePosition,
                     std::string("objective ") + to_string(objective) + " is undefined on every cell");
  }
  return *best;
}

PlacementResult best_reader_placement(const Scenario& s, const GridSpec& grid,
                                      PlacementObjective objective, const SweepOptions& options) {
  validate(grid);
  return best_reader_placement(sweep_reader_grid(s, grid, options), objective);
}

}  // namespace diffscatter
