#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "diffscatter/commands.hpp"
#include "diffscatter/scenario_file.hpp"

namespace {

using diffscatter::AmplitudeVariant;
using diffscatter::DbConvention;
using diffscatter::GeometryMode;
using diffscatter::Point3;
namespace cli = diffscatter::cli;

struct RawFlags {
  std::string scenario;
  std::string out;
  std::string variant;
  std::string db_convention;
  std::string geometry_mode = "approx";
  std::vector<double> reader;
  double frequency_hz = 0.0;
  double threshold_dbm = 0.0;
  double tolerance = 1e-3;
  std::int64_t n_rays = 100'000;
  unsigned threads = 0;
};

void add_common(CLI::App* sub, RawFlags& f) {
  sub->add_option("--scenario", f.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  sub->add_option("--out", f.out, "Output path ('-' for stdout)");
  sub->add_option("--variant", f.variant, "Amplitude variant")
      ->check(CLI::IsMember({"paper-bound", "exact-integral"}));
  sub->add_option("--db-convention", f.db_convention, "dB reading of the CNR ratio")
      ->check(CLI::IsMember({"power20", "power10"}));
  sub->add_option("--reader", f.reader, "Reader position x,y,z")->delimiter(',')->expected(3);
  sub->add_option("--frequency", f.frequency_hz, "Override carrier frequency (Hz)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", f.threads, "Sweep worker threads (0: auto)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ambient backscatter link simulator with a passive diffusing surface"};
  app.require_subcommand(1);
  RawFlags flags;

  auto* point = app.add_subcommand("point", "Power breakdown and link metrics at one reader position");
  auto* map = app.add_subcommand("map", "Reader-grid map as CSV");
  auto* cdf = app.add_subcommand("cdf", "CDF of the SNR variation per frequency as CSV");
  auto* optimize = app.add_subcommand("optimize", "Minimum source power and reader placement");
  auto* validate = app.add_subcommand("validate", "Closed form vs discrete ray-sum oracle");
  for (auto* sub : {point, map, cdf, optimize, validate}) {
    add_common(sub, flags);
  }
  optimize->add_option("--threshold-dbm", flags.threshold_dbm, "Contrast threshold (dBm)")->required();
  validate->add_option("--n-rays", flags.n_rays, "Surface samples minus one")->check(CLI::PositiveNumber);
  validate->add_option("--geometry-mode", flags.geometry_mode, "Gated oracle geometry")
      ->check(CLI::IsMember({"approx", "exact"}));
  validate->add_option("--tolerance", flags.tolerance, "Relative modulus / phase tolerance")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  diffscatter::ScenarioFile file;
  try {
    file = diffscatter::load_scenario_file(flags.scenario);
  } catch (const diffscatter::ScenarioParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }

  cli::CommandOptions opts;
  opts.out_path = flags.out;
  if (!flags.variant.empty()) opts.variant = diffscatter::parse_variant(flags.variant);
  if (!flags.db_convention.empty()) opts.db_convention = diffscatter::parse_db_convention(flags.db_convention);
  if (!flags.reader.empty()) opts.reader = Point3{flags.reader[0], flags.reader[1], flags.reader[2]};
  if (flags.frequency_hz > 0.0) opts.frequency_hz = flags.frequency_hz;
  if (optimize->parsed()) opts.threshold_dbm = flags.threshold_dbm;
  opts.tolerance = flags.tolerance;
  opts.n_rays = flags.n_rays;
  opts.geometry_mode = flags.geometry_mode == "exact" ? GeometryMode::Exact : GeometryMode::Linearized;
  opts.threads = flags.threads;

  if (point->parsed()) return cli::cmd_point(file, opts, std::cout, std::cerr);
  if (map->parsed()) return cli::cmd_map(file, opts, std::cout, std::cerr);
  if (cdf->parsed()) return cli::cmd_cdf(file, opts, std::cout, std::cerr);
  if (optimize->parsed()) return cli::cmd_optimize(file, opts, std::cout, std::cerr);
  return cli::cmd_validate(file, opts, std::cout, std::cerr);
}
