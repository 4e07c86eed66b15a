#include "diffscatter/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>

#include "diffscatter/contrast.hpp"
#include "diffscatter/error.hpp"
#include "diffscatter/optimizer.hpp"

namespace diffscatter::cli {

namespace {

AmplitudeVariant variant_of(const ScenarioFile& f, const CommandOptions& o) {
  return o.variant.value_or(f.variant);
}

SweepOptions sweep_options(const ScenarioFile& f, const CommandOptions& o) {
  return {variant_of(f, o), o.db_convention.value_or(f.db_convention), o.threads};
}

std::vector<double> frequencies_of(const ScenarioFile& f, const CommandOptions& o) {
  if (o.frequency_hz) return {*o.frequency_hz};
  return f.frequencies_hz;
}

std::optional<Point3> reader_of(const ScenarioFile& f, const CommandOptions& o) {
  return o.reader ? o.reader : f.reader_position;
}

std::string fmt(double v) { return format_double(v); }

std::string fmt(const std::optional<double>& v) { return v ? format_double(*v) : "nan"; }

std::string fmt(const Point3& p) { return "(" + fmt(p.x) + ", " + fmt(p.y) + ", " + fmt(p.z) + ")"; }

std::string watts_and_dbm(double w) {
  return fmt(w) + " W (" + (w > 0.0 ? fmt(watts_to_dbm(w)) : std::string("n/a")) + " dBm)";
}

int report_model_error(const ModelError& e, std::ostream& err) {
  err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
  return e.code() == ErrorCode::InfeasiblePosition ? kExitInfeasible : kExitUsage;
}

// Runs `body` against the requested output stream.
int with_output(const CommandOptions& o, std::ostream& out, std::ostream& err,
                const std::function<void(std::ostream&)>& body) {
  if (o.out_path.empty() || o.out_path == "-") {
    body(out);
    return kExitOk;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write '" << o.out_path << "'\n";
    return kExitUsage;
  }
  body(file);
  file.flush();
  if (!file) {
    err << "error: write to '" << o.out_path << "' failed\n";
    return kExitUsage;
  }
  return kExitOk;
}

void print_plan(std::ostream& out, const std::string& prefix, const Scenario& s,
                const Point3& reader, double threshold_w, AmplitudeVariant variant) {
  const PowerPlan plan = plan_source_power(s, reader, threshold_w, variant);
  out << prefix << "a0 = " << fmt(plan.a0) << "\n"
      << prefix << "as = " << fmt(plan.as) << "\n";
  auto pmin_line = [&](const char* name, const std::optional<double>& pmin, bool with_surface) {
    out << prefix << name << " = ";
    if (!pmin) {
      out << "infeasible\n";
      return;
    }
    out << watts_and_dbm(*pmin) << "\n";
    const double oracle = verify_min_power_by_bisection(s, reader, threshold_w, with_surface, variant);
    const double rel = *pmin > 0.0 ? std::abs(oracle - *pmin) / *pmin : std::abs(oracle - *pmin);
    out << prefix << name << "_bisection_rel_diff = " << fmt(rel) << "\n";
  };
  pmin_line("pmin_no_surface", plan.pmin_no_surface_w, false);
  pmin_line("pmin_with_surface", plan.pmin_with_surface_w, true);
  out << prefix << "savings_ratio = " << fmt(plan.savings_ratio) << "\n";
}

}  // namespace

void write_map_csv(const MapResult& map, std::ostream& out) {
  out << kMapCsvHeader << '\n';
  for (const CellRecord& c : map.cells) {
    const PowerBreakdown& p = c.breakdown;
    out << fmt(c.position.x) << ',' << fmt(c.position.y) << ',' << fmt(c.position.z) << ','
        << fmt(p.p_dir) << ',' << fmt(p.p_dif) << ',' << fmt(p.p_dir_dif) << ',' << fmt(p.p_tag)
        << ',' << fmt(p.p_dir_tag) << ',' << fmt(p.p_dif_tag) << ',' << fmt(p.p1) << ','
        << fmt(p.dps) << ',' << fmt(p.pr) << ',' << fmt(c.delta_dif) << ',' << fmt(c.cnr) << ','
        << fmt(c.cnr_no_surface) << ',' << fmt(c.snr_variation_db) << ',' << fmt(c.ber) << ','
        << c.mask << '\n';
  }
}

void write_cdf_csv(const std::vector<FrequencySweep>& sweeps, std::ostream& out) {
  out << kCdfCsvHeader << '\n';
  for (const FrequencySweep& fs : sweeps) {
    if (!fs.cdf.cdf) {
      continue;
    }
    const EmpiricalCdf& cdf = *fs.cdf.cdf;
    const auto& samples = cdf.sorted_samples();
    for (double v : samples) {
      out << fmt(fs.frequency_hz) << ',' << fmt(v) << ',' << fmt(cdf(v)) << '\n';
    }
  }
}

int cmd_point(const ScenarioFile& file, const CommandOptions& opts, std::ostream& out,
              std::ostream& err) {
  const auto reader = reader_of(file, opts);
  if (!reader) {
    err << "error: point needs a reader position (--reader or [reader] position)\n";
    return kExitUsage;
  }
  const SweepOptions so = sweep_options(file, opts);
  try {
    for (double f : frequencies_of(file, opts)) {
      const Scenario s = file.scenario(f);
      const CellRecord rec = evaluate_reader(s, *reader, so);
      if (rec.mask & kMaskGeometry) {
        err << "error: " << rec.error << "\n";
        return kExitUsage;
      }
      const PowerBreakdown& p = rec.breakdown;
      const double y2 =
          std::norm(total_signal(s, *reader, 0.0, TagState::Backscattering, so.variant));
      out << "[point]\n"
          << "frequency_hz = " << fmt(f) << "\n"
          << "reader = " << fmt(*reader) << "\n"
          << "amplitude_variant = " << to_string(so.variant) << "\n"
          << "db_convention = " << to_string(so.db_convention) << "\n"
          << "p_dir = " << watts_and_dbm(p.p_dir) << "\n"
          << "p_dif = " << watts_and_dbm(p.p_dif) << "\n"
          << "p_dir_dif = " << watts_and_dbm(p.p_dir_dif) << "\n"
          << "p_tag = " << watts_and_dbm(p.p_tag) << "\n"
          << "p_dir_tag = " << watts_and_dbm(p.p_dir_tag) << "\n"
          << "p_dif_tag = " << watts_and_dbm(p.p_dif_tag) << "\n"
          << "p1 = " << watts_and_dbm(p.p1) << "\n"
          << "dps = " << watts_and_dbm(p.dps) << "\n"
          << "pr = " << watts_and_dbm(p.pr) << "\n"
          << "dps_no_surface = " << watts_and_dbm(rec.breakdown_no_surface.dps) << "\n"
          << "delta_dif_ratio = " << fmt(rec.delta_dif) << "\n"
          << "cnr = " << fmt(rec.cnr) << "\n"
          << "cnr_no_surface = " << fmt(rec.cnr_no_surface) << "\n"
          << "snr_variation_db = " << fmt(rec.snr_variation_db) << "\n"
          << "ber = " << fmt(rec.ber) << "\n"
          << "mask = " << rec.mask << "\n"
          << "identity_residual = " << fmt(p.pr != 0.0 ? std::abs(p.pr - y2) / p.pr : std::abs(y2))
          << "\n";
    }
  } catch (const ModelError& e) {
    return report_model_error(e, err);
  }
  return kExitOk;
}

int cmd_map(const ScenarioFile& file, const CommandOptions& opts, std::ostream& out,
            std::ostream& err) {
  if (!file.grid) {
    err << "error: map needs a reader grid in the scenario file\n";
    return kExitUsage;
  }
  const double f = opts.frequency_hz.value_or(file.frequencies_hz.front());
  MapResult map;
  try {
    map = sweep_reader_grid(file.scenario(f), *file.grid, sweep_options(file, opts));
  } catch (const ModelError& e) {
    return report_model_error(e, err);
  }
  return with_output(opts, out, err, [&](std::ostream& os) { write_map_csv(map, os); });
}

int cmd_cdf(const ScenarioFile& file, const CommandOptions& opts, std::ostream& out,
            std::ostream& err) {
  if (!file.grid) {
    err << "error: cdf needs a reader grid in the scenario file\n";
    return kExitUsage;
  }
  std::vector<FrequencySweep> sweeps;
  try {
    const auto freqs = frequencies_of(file, opts);
    sweeps = sweep_frequencies(file.scenario(), *file.grid, freqs, sweep_options(file, opts));
  } catch (const ModelError& e) {
    return report_model_error(e, err);
  }
  for (const FrequencySweep& fs : sweeps) {
    if (!fs.cdf.cdf) {
      err << "warning: every cell is masked at " << fmt(fs.frequency_hz) << " Hz\n";
    }
  }
  return with_output(opts, out, err, [&](std::ostream& os) { write_cdf_csv(sweeps, os); });
}

int cmd_optimize(const ScenarioFile& file, const CommandOptions& opts, std::ostream& out,
                 std::ostream& err) {
  if (!opts.threshold_dbm) {
    err << "error: optimize needs --threshold-dbm\n";
    return kExitUsage;
  }
  const auto reader = reader_of(file, opts);
  if (!reader && !file.grid) {
    err << "error: optimize needs a reader position or a reader grid\n";
    return kExitUsage;
  }
  const double threshold_w = dbm_to_watts(*opts.threshold_dbm);
  const SweepOptions so = sweep_options(file, opts);
  int status = kExitOk;
  try {
    for (double f : frequencies_of(file, opts)) {
      const Scenario s = file.scenario(f);
      out << "[optimize]\n"
          << "frequency_hz = " << fmt(f) << "\n"
          << "threshold = " << watts_and_dbm(threshold_w) << "\n"
          << "amplitude_variant = " << to_string(so.variant) << "\n";
      if (reader) {
        out << "reader = " << fmt(*reader) << "\n";
        print_plan(out, "", s, *reader, threshold_w, so.variant);
        const PowerPlan plan = plan_source_power(s, *reader, threshold_w, so.variant);
        if (!plan.pmin_no_surface_w || !plan.pmin_with_surface_w) {
          status = kExitInfeasible;
        }
      }
      if (file.grid) {
        const MapResult map = sweep_reader_grid(s, *file.grid, so);
        for (PlacementObjective obj : {PlacementObjective::ContrastRatio,
                                       PlacementObjective::CnrVariationDb, PlacementObjective::Ber}) {
          const std::string prefix = std::string("best_") + to_string(obj) + ".";
          try {
            const PlacementResult best = best_reader_placement(map, obj);
            out << prefix << "position = " << fmt(best.position) << "\n"
                << prefix << "value = " << fmt(best.value) << "\n";
            print_plan(out, prefix, s, best.position, threshold_w, so.variant);
          } catch (const ModelError& e) {
            out << prefix << "position = none (" << e.what() << ")\n";
          }
        }
      }
    }
  } catch (const ModelError& e) {
    return report_model_error(e, err);
  }
  return status;
}

int cmd_validate(const ScenarioFile& file, const CommandOptions& opts, std::ostream& out,
                 std::ostream& err) {
  if (opts.n_rays < 1) {
    err << "error: --n-rays must be >= 1\n";
    return kExitUsage;
  }
  if (!(opts.tolerance > 0.0)) {
    err << "error: --tolerance must be > 0\n";
    return kExitUsage;
  }
  const auto reader = reader_of(file, opts);
  if (!reader) {
    err << "error: validate needs a reader position (--reader or [reader] position)\n";
    return kExitUsage;
  }
  const AmplitudeVariant variant = variant_of(file, opts);
  bool failed = false;
  try {
    for (double f : frequencies_of(file, opts)) {
      const Scenario s = file.scenario(f);
      validate(s);
      const RadioConstants c = derive_constants(s);
      const PathGeometry g = derive_path_geometry(s, *reader);
      const Amplitudes amp = derive_amplitudes(c, s.transmit_power_w, g, variant);
      const ComplexSignal closed = signal_diffuse_closed_form(c, amp, g, 0.0);

      out << "[validate]\n"
          << "frequency_hz = " << fmt(f) << "\n"
          << "reader = " << fmt(*reader) << "\n"
          << "amplitude_variant = " << to_string(variant) << "\n"
          << "n_rays = " << opts.n_rays << "\n"
          << "alpha = " << fmt(g.alpha) << "\n"
          << "closed_form_modulus = " << fmt(std::abs(closed)) << "\n"
          << "closed_form_phase_rad = " << fmt(std::arg(closed)) << "\n";

      bool gate_failed = false;
      ComplexSignal by_mode[2];
      for (GeometryMode mode : {GeometryMode::Linearized, GeometryMode::Exact}) {
        const ComplexSignal sum = signal_diffuse_discrete(s, *reader, 0.0, opts.n_rays, mode);
        by_mode[mode == GeometryMode::Exact] = sum;
        const double mod_err = std::abs(std::abs(sum) - std::abs(closed)) / std::abs(closed);
        const double phase_err = std::abs(std::arg(sum / closed));
        const std::string name = to_string(mode);
        out << name << "_modulus = " << fmt(std::abs(sum)) << "\n"
            << name << "_phase_rad = " << fmt(std::arg(sum)) << "\n"
            << name << "_rel_modulus_error = " << fmt(mod_err) << "\n"
            << name << "_phase_error_rad = " << fmt(phase_err) << "\n";
        if (mode == opts.geometry_mode && !(mod_err <= opts.tolerance && phase_err <= opts.tolerance)) {
          gate_failed = true;
        }
      }
      out << "exact_vs_approx_rel_modulus_discrepancy = "
          << fmt(std::abs(std::abs(by_mode[1]) - std::abs(by_mode[0])) / std::abs(by_mode[0]))
          << "\n"
          << "gate = " << to_string(opts.geometry_mode) << " tolerance " << fmt(opts.tolerance)
          << (gate_failed ? " FAIL" : " PASS") << "\n";
      failed = failed || gate_failed;
    }
  } catch (const ModelError& e) {
    return report_model_error(e, err);
  }
  return failed ? kExitValidation : kExitOk;
}

}  // namespace diffscatter::cli
