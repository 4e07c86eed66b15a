#pragma once

#include <optional>
#include <span>
#include <vector>

#include "diffscatter/contrast.hpp"

namespace diffscatter {

/// dB reading of the with/without-surface CNR ratio. Power20 treats the CNR as
/// an amplitude (20 log10), so a factor 2 in SNR reads as 3 dB.
enum class DbConvention { Power20, Power10 };

const char* to_string(DbConvention c) noexcept;

struct ContrastToNoise {
  double value = 0.0;
  // P1 + dPs was negative and clamped to zero under the square root.
  bool clamped = false;
};

/// |sqrt(P1 + dPs) - sqrt(P1)| / sqrt(Nth).
ContrastToNoise contrast_to_noise(double p1_w, double dps_w, double noise_w);

/// Energy-detector bit error rate, 0.5 erfc(cnr).
double ber(double cnr);

/// Empty when cnr_without == 0.
std::optional<double> snr_variation_db(double cnr_with, double cnr_without,
                                       DbConvention convention = DbConvention::Power20);

struct LinkMetrics {
  double cnr = 0.0;
  double ber = 0.5;
  double cnr_no_surface = 0.0;
  std::optional<double> snr_variation_db;
  bool clamped = false;
};

LinkMetrics link_metrics(const PowerBreakdown& with_surface, const PowerBreakdown& without_surface,
                         double noise_w, DbConvention convention = DbConvention::Power20);

/// Right-continuous empirical distribution function over a private sorted copy.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::span<const double> samples);

  /// Fraction of samples <= x.
  double operator()(double x) const;

  /// Smallest sample s with cdf(s) >= p, p in (0, 1].
  double quantile(double p) const;

  const std::vector<double>& sorted_samples() const noexcept { return sorted_; }
  std::size_t size() const noexcept { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

EmpiricalCdf empirical_cdf(std::span<const double> samples);

}  // namespace diffscatter
