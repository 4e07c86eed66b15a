#pragma once

#include <complex>
#include <cstdint>

#include "diffscatter/geometry.hpp"
#include "diffscatter/radio.hpp"

namespace diffscatter {

/// Complex baseband-free field sample in sqrt(W), rectangular form.
using ComplexSignal = std::complex<double>;

enum class TagState { Transparent, Backscattering };

/// How sample-point distances are obtained in the discrete ray sum.
///  - Linearized: first-order expansions about endpoint A with the amplitude
///    product frozen at r1 r'1, i.e. exactly the integrand the closed form uses.
///  - Exact: true Euclidean distances and amplitudes at every sample point.
enum class GeometryMode { Linearized, Exact };

const char* to_string(GeometryMode mode) noexcept;

/// Real factor F with Y_dif = F exp(i(wt - k(r1 + r'1 + e/2))).
///
/// PaperBound: Adif sin(ke/2). ExactIntegral: Adif sin(k|e|/2), which equals
/// the surface integral for either sign of alpha, and falls back to the
/// alpha -> 0 limit density * h when |k e| < kSmallPhaseLimit.
double diffuse_factor(const RadioConstants& c, const Amplitudes& amp, const PathGeometry& g);

ComplexSignal signal_direct(const RadioConstants& c, const Amplitudes& amp, const PathGeometry& g,
                            double t);

ComplexSignal signal_tag(const RadioConstants& c, const Amplitudes& amp, const PathGeometry& g,
                         double t, TagState state);

ComplexSignal signal_diffuse_closed_form(const RadioConstants& c, const Amplitudes& amp,
                                         const PathGeometry& g, double t);

/// Sum over the n + 1 surface points u_j = j h / n (both endpoints included)
/// with trapezoidal weights du = h / n, halved at the two endpoints. Converges
/// to the closed form in Linearized mode as n grows.
ComplexSignal signal_diffuse_discrete(const Scenario& scenario, const Point3& reader, double t,
                                      std::int64_t n, GeometryMode mode);

/// Y_dir + Y_dif + Y_tag at the reader.
ComplexSignal total_signal(const Scenario& scenario, const Point3& reader, double t, TagState state,
                           AmplitudeVariant variant);

}  // namespace diffscatter
