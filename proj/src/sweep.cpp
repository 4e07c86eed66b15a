#include "diffscatter/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "diffscatter/error.hpp"

namespace diffscatter {

namespace {

double axis_value(double lo, double hi, std::int64_t n, std::int64_t i) {
  if (n == 1) {
    return lo;
  }
  if (i == n - 1) {
    return hi;
  }
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

PowerBreakdown nan_breakdown() {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  return {nan, nan, nan, nan, nan, nan, nan, nan, nan};
}

CellRecord evaluate_cell(const Scenario& s, const RadioConstants& with_c,
                         const RadioConstants& without_c, const Point3& reader,
                         const SweepOptions& options) {
  CellRecord rec;
  rec.position = reader;
  PathGeometry g;
  try {
    g = derive_path_geometry(s, reader);
  } catch (const ModelError& err) {
    rec.mask = kMaskGeometry;
    rec.error = err.what();
    rec.breakdown = nan_breakdown();
    rec.breakdown_no_surface = nan_breakdown();
    rec.cnr = rec.cnr_no_surface = rec.ber = std::numeric_limits<double>::quiet_NaN();
    return rec;
  }
  const double p = s.transmit_power_w;
  rec.breakdown = power_breakdown(with_c, derive_amplitudes(with_c, p, g, options.variant), g);
  rec.breakdown_no_surface =
      power_breakdown(without_c, derive_amplitudes(without_c, p, g, options.variant), g);

  const ContrastComparison cmp = compare_with_without_surface(rec.breakdown, rec.breakdown_no_surface);
  rec.delta_dif = cmp.delta_dif;
  const LinkMetrics m =
      link_metrics(rec.breakdown, rec.breakdown_no_surface, s.noise_power_w, options.db_convention);
  rec.cnr = m.cnr;
  rec.cnr_no_surface = m.cnr_no_surface;
  rec.snr_variation_db = m.snr_variation_db;
  rec.ber = m.ber;

  if (!rec.delta_dif) rec.mask |= kMaskUndefinedRatio;
  if (!rec.snr_variation_db) rec.mask |= kMaskNoBaselineCnr;
  if (m.clamped) rec.mask |= kMaskClamped;
  if (!(rec.breakdown.p_dif_tag > 0.0)) rec.mask |= kMaskNonPositiveDifTag;
  return rec;
}

}  // namespace

Point3 GridSpec::position(std::size_t index) const {
  const auto ix = static_cast<std::int64_t>(index % static_cast<std::size_t>(nx));
  const auto iy = static_cast<std::int64_t>(index / static_cast<std::size_t>(nx));
  return {axis_value(x_min, x_max, nx, ix), axis_value(y_min, y_max, ny, iy), z};
}

void validate(const GridSpec& grid) {
  for (double v : {grid.x_min, grid.x_max, grid.y_min, grid.y_max, grid.z}) {
    if (!std::isfinite(v)) {
      throw ModelError(ErrorCode::DegenerateGrid, "grid bounds must be finite");
    }
  }
  if (grid.x_min > grid.x_max || grid.y_min > grid.y_max) {
    throw ModelError(ErrorCode::DegenerateGrid, "grid range has min > max");
  }
  if (grid.nx < 1 || grid.ny < 1) {
    throw ModelError(ErrorCode::EmptyGrid, "grid cell counts must be >= 1");
  }
}

GridSpec reference_grid() { return {16.0, 26.0, 16.0, 26.0, 0.0, 101, 101}; }

CellRecord evaluate_reader(const Scenario& s, const Point3& reader, const SweepOptions& options) {
  validate(s);
  return evaluate_cell(s, derive_constants(s), derive_constants(without_surface(s)), reader,
                       options);
}

MapResult sweep_reader_grid(const Scenario& s, const GridSpec& grid, const SweepOptions& options) {
  validate(s);
  validate(grid);
  const RadioConstants with_c = derive_constants(s);
  const RadioConstants without_c = derive_constants(without_surface(s));

  MapResult out;
  out.grid = grid;
  out.frequency_hz = s.frequency_hz;
  out.cells.resize(grid.size());

  const auto rows = static_cast<std::size_t>(grid.ny);
  const auto cols = static_cast<std::size_t>(grid.nx);
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(std::min<std::size_t>(rows, 256)));

  // Each worker claims whole rows and writes only its own slots, so the result
  // does not depend on scheduling.
  std::atomic<std::size_t> next_row{0};
  auto work = [&] {
    for (std::size_t row = next_row++; row < rows; row = next_row++) {
      for (std::size_t col = 0; col < cols; ++col) {
        const std::size_t idx = row * cols + col;
        out.cells[idx] = evaluate_cell(s, with_c, without_c, grid.position(idx), options);
      }
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
      pool.emplace_back(work);
    }
  }
  return out;
}

double CdfResult::quantile(double p) const {
  if (!cdf) {
    throw ModelError(ErrorCode::EmptySamples, "no unmasked cells to build a CDF from");
  }
  return cdf->quantile(p);
}

CdfResult snr_variation_cdf(const MapResult& map) {
  std::vector<double> samples;
  samples.reserve(map.cells.size());
  for (const CellRecord& cell : map.cells) {
    if (!cell.excluded()) {
      samples.push_back(*cell.snr_variation_db);
    }
  }
  CdfResult out;
  out.frequency_hz = map.frequency_hz;
  const bool any_finite =
      std::any_of(samples.begin(), samples.end(), [](double v) { return std::isfinite(v); });
  if (any_finite) {
    out.cdf.emplace(samples);
  }
  return out;
}

std::vector<FrequencySweep> sweep_frequencies(const Scenario& s, const GridSpec& grid,
                                              std::span<const double> frequencies_hz,
                                              const SweepOptions& options) {
  if (frequencies_hz.empty()) {
    throw ModelError(ErrorCode::InvalidArgument, "frequency list is empty");
  }
  std::vector<FrequencySweep> out;
  out.reserve(frequencies_hz.size());
  for (double f : frequencies_hz) {
    Scenario at = s;
    at.frequency_hz = f;
    FrequencySweep fs;
    fs.frequency_hz = f;
    fs.map = sweep_reader_grid(at, grid, options);
    fs.cdf = snr_variation_cdf(fs.map);
    out.push_back(std::move(fs));
  }
  return out;
}

}  // namespace diffscatter
