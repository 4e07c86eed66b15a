#include "diffscatter/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "diffscatter/error.hpp"

namespace diffscatter {

const char* to_string(DbConvention c) noexcept {
  return c == DbConvention::Power20 ? "power20" : "power10";
}

ContrastToNoise contrast_to_noise(double p1_w, double dps_w, double noise_w) {
  if (!(noise_w > 0.0)) {
    throw ModelError(ErrorCode::InvalidNoise, "noise power must be > 0 W");
  }
  if (!(p1_w >= 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument, "transparent-state power P1 must be >= 0 W");
  }
  ContrastToNoise out;
  double backscatter = p1_w + dps_w;
  if (backscatter < 0.0) {
    backscatter = 0.0;
    out.clamped = true;
  }
  out.value = std::abs(std::sqrt(backscatter) - std::sqrt(p1_w)) / std::sqrt(noise_w);
  return out;
}

double ber(double cnr) {
  if (!(cnr >= 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument, "contrast-to-noise ratio must be >= 0");
  }
  return 0.5 * std::erfc(cnr);
}

std::optional<double> snr_variation_db(double cnr_with, double cnr_without,
                                       DbConvention convention) {
  if (cnr_without == 0.0) {
    return std::nullopt;
  }
  const double scale = convention == DbConvention::Power20 ? 20.0 : 10.0;
  return scale * std::log10(cnr_with / cnr_without);
}

LinkMetrics link_metrics(const PowerBreakdown& with_surface, const PowerBreakdown& without_surface,
                         double noise_w, DbConvention convention) {
  const ContrastToNoise with = contrast_to_noise(with_surface.p1, with_surface.dps, noise_w);
  const ContrastToNoise without =
      contrast_to_noise(without_surface.p1, without_surface.dps, noise_w);
  LinkMetrics m;
  m.cnr = with.value;
  m.ber = ber(with.value);
  m.cnr_no_surface = without.value;
  m.snr_variation_db = snr_variation_db(with.value, without.value, convention);
  m.clamped = with.clamped || without.clamped;
  return m;
}

EmpiricalCdf::EmpiricalCdf(std::span<const double> samples) : sorted_(samples.begin(), samples.end()) {
  if (std::any_of(sorted_.begin(), sorted_.end(), [](double v) { return std::isnan(v); })) {
    throw ModelError(ErrorCode::InvalidArgument, "CDF samples must not contain NaN");
  }
  if (std::none_of(sorted_.begin(), sorted_.end(), [](double v) { return std::isfinite(v); })) {
    throw ModelError(ErrorCode::EmptySamples, "CDF needs at least one finite sample");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::quantile(double p) const {
  if (!(p > 0.0 && p <= 1.0)) {
    throw ModelError(ErrorCode::InvalidArgument, "quantile level must lie in (0, 1]");
  }
  const auto n = static_cast<double>(sorted_.size());
  // Guard against p * n landing a hair above an integer (0.3 * 10).
  auto rank = static_cast<std::size_t>(std::ceil(p * n * (1.0 - 1e-12)));
  rank = std::clamp<std::size_t>(rank, 1, sorted_.size());
  return sorted_[rank - 1];
}

EmpiricalCdf empirical_cdf(std::span<const double> samples) { return EmpiricalCdf(samples); }

}  // namespace diffscatter
