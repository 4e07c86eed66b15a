#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "diffscatter/field.hpp"
#include "diffscatter/scenario_file.hpp"
#include "diffscatter/sweep.hpp"

namespace diffscatter::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInfeasible = 2,
  kExitValidation = 3,
};

/// Flags shared by every subcommand. Unset optionals fall back to the file.
struct CommandOptions {
  std::string out_path;  // "-" or empty: standard output
  std::optional<AmplitudeVariant> variant;
  std::optional<DbConvention> db_convention;
  std::optional<Point3> reader;
  std::optional<double> frequency_hz;
  std::optional<double> threshold_dbm;
  double tolerance = 1e-3;
  std::int64_t n_rays = 100'000;
  GeometryMode geometry_mode = GeometryMode::Linearized;
  unsigned threads = 0;
};

inline constexpr const char* kMapCsvHeader =
    "rx_m,ry_m,rz_m,p_dir_w,p_dif_w,p_dir_dif_w,p_tag_w,p_dir_tag_w,p_dif_tag_w,p1_w,dps_w,pr_w,"
    "delta_dif_ratio,cnr,cnr_no_surface,snr_variation_db,ber,mask";

inline constexpr const char* kCdfCsvHeader = "frequency_hz,snr_variation_db,cdf";

/// Row-major map CSV with round-trip decimal formatting and LF line endings.
/// Undefined values are written as nan.
void write_map_csv(const MapResult& map, std::ostream& out);

/// One ascending block per frequency; the cdf column is the right-continuous
/// empirical CDF at each sample.
void write_cdf_csv(const std::vector<FrequencySweep>& sweeps, std::ostream& out);

int cmd_point(const ScenarioFile& file, const CommandOptions& opts, std::ostream& out,
              std::ostream& err);
int cmd_map(const ScenarioFile& file, const CommandOptions& opts, std::ostream& out,
            std::ostream& err);
int cmd_cdf(const ScenarioFile& file, const CommandOptions& opts, std::ostream& out,
            std::ostream& err);
int cmd_optimize(const ScenarioFile& file, const CommandOptions& opts, std::ostream& out,
                 std::ostream& err);
int cmd_validate(const ScenarioFile& file, const CommandOptions& opts, std::ostream& out,
                 std::ostream& err);

}  // namespace diffscatter::cli
