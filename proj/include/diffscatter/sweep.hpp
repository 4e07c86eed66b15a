#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffscatter/contrast.hpp"
#include "diffscatter/metrics.hpp"

namespace diffscatter {

/// Rectangular grid of reader positions in a plane of constant z. Endpoints are
/// inclusive: spacing is (max - min) / (n - 1), and n == 1 samples min only.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  double z = 0.0;
  std::int64_t nx = 1;
  std::int64_t ny = 1;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

  std::size_t size() const noexcept { return static_cast<std::size_t>(nx * ny); }
  /// Row-major: y index outer, x index inner.
  Point3 position(std::size_t index) const;
};

void validate(const GridSpec& grid);

/// Default study grid: [16, 26] x [16, 26] at z = 0, 101 x 101 cells.
GridSpec reference_grid();

// Cell mask bits. The first three exclude a cell from CDFs; the rest only flag.
inline constexpr std::uint32_t kMaskGeometry = 1u << 0;
inline constexpr std::uint32_t kMaskUndefinedRatio = 1u << 1;
inline constexpr std::uint32_t kMaskNoBaselineCnr = 1u << 2;
inline constexpr std::uint32_t kMaskClamped = 1u << 3;
inline constexpr std::uint32_t kMaskNonPositiveDifTag = 1u << 4;
inline constexpr std::uint32_t kMaskExcluding = kMaskGeometry | kMaskUndefinedRatio | kMaskNoBaselineCnr;

struct CellRecord {
  Point3 position;
  PowerBreakdown breakdown;
  PowerBreakdown breakdown_no_surface;
  std::optional<double> delta_dif;
  double cnr = 0.0;
  double cnr_no_surface = 0.0;
  std::optional<double> snr_variation_db;
  double ber = 0.5;
  std::uint32_t mask = 0;
  std::string error;  // geometry error message when kMaskGeometry is set

  bool excluded() const noexcept { return (mask & kMaskExcluding) != 0; }
};

struct SweepOptions {
  AmplitudeVariant variant = AmplitudeVariant::ExactIntegral;
  DbConvention db_convention = DbConvention::Power20;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Full contrast and link evaluation at one reader position. Geometry errors
/// are recorded in the mask rather than thrown.
CellRecord evaluate_reader(const Scenario& scenario, const Point3& reader,
                           const SweepOptions& options = {});

struct MapResult {
  GridSpec grid;
  double frequency_hz = 0.0;
  std::vector<CellRecord> cells;
};

struct CdfResult {
  double frequency_hz = 0.0;
  // Empty when every cell is masked.
  std::optional<EmpiricalCdf> cdf;

  std::size_t size() const noexcept { return cdf ? cdf->size() : 0; }
  double quantile(double p) const;
};

MapResult sweep_reader_grid(const Scenario& scenario, const GridSpec& grid,
                            const SweepOptions& options = {});

/// Distribution of snr_variation_db over the unmasked cells of a map.
CdfResult snr_variation_cdf(const MapResult& map);

struct FrequencySweep {
  double frequency_hz = 0.0;
  MapResult map;
  CdfResult cdf;
};

std::vector<FrequencySweep> sweep_frequencies(const Scenario& scenario, const GridSpec& grid,
                                              std::span<const double> frequencies_hz,
                                              const SweepOptions& options = {});

}  // namespace diffscatter
