#include <cmath>
#include <numbers>

#include "diffscatter/error.hpp"
#include "diffscatter/radio.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace diffscatter;

TEST_CASE("derived constants at 700 MHz") {
  const RadioConstants c = derive_constants(reference_scenario(700e6));
  CHECK(c.lambda == doctest::Approx(0.42827494).epsilon(1e-14));
  CHECK(c.k == doctest::Approx(14.670915153661773).epsilon(1e-14));
  CHECK(c.omega == doctest::Approx(2.0 * std::numbers::pi * 700e6).epsilon(1e-15));
  CHECK(c.k_sr == doctest::Approx(0.014596054012796371).epsilon(1e-13));
  CHECK(c.k_sar == doctest::Approx(2.1304479274446903e-4).epsilon(1e-13));
  CHECK(c.k_str == doctest::Approx(1.6953565932635303e-5).epsilon(1e-13));
}

TEST_CASE("constant consistency identities") {
  testing_support::ScenarioGenerator gen(5);
  for (int i = 0; i < 100; ++i) {
    const Scenario s = gen.next().scenario;
    const RadioConstants c = derive_constants(s);
    const double l2 = c.lambda * c.lambda;
    const double pi = std::numbers::pi;
    CHECK(c.k_sar == doctest::Approx(c.k_sr * s.diffusing_coefficient * l2 / (4 * pi)).epsilon(1e-13));
    CHECK(c.k_str == doctest::Approx(c.k_sr * s.gain_tag * s.gain_tag * l2 / (16 * pi * pi)).epsilon(1e-13));
  }
}

TEST_CASE("invalid frequency") {
  Scenario s = reference_scenario(0.0);
  try {
    derive_constants(s);
    FAIL("expected throw");
  } catch (const ModelError& e) {
    CHECK(e.code() == ErrorCode::InvalidFrequency);
  }
}

TEST_CASE("amplitudes at the reference reader") {
  const Scenario s = reference_scenario(700e6);
  const RadioConstants c = derive_constants(s);
  const PathGeometry g = derive_path_geometry(s, {16, 16, 0});

  const double adir = amplitude_dir(c, 1.0, g);
  CHECK(adir * adir == doctest::Approx(2.8507917993742911e-5).epsilon(1e-12));
  CHECK(amplitude_tag(c, 1.0, g) == doctest::Approx(7.9182131105001359e-6).epsilon(1e-12));

  const double bound = amplitude_dif(c, 1.0, g, AmplitudeVariant::PaperBound);
  const double exact = amplitude_dif(c, 1.0, g, AmplitudeVariant::ExactIntegral);
  CHECK(bound == doctest::Approx(1.6581621823313550e-5).epsilon(1e-12));
  CHECK(exact == doctest::Approx(1.1724977234335855e-4).epsilon(1e-12));
  CHECK(exact == doctest::Approx(bound / 0.1414213562373095).epsilon(1e-12));

  CHECK(amplitude_dir(c, 0.0, g) == 0.0);
  CHECK(amplitude_tag(c, 0.0, g) == 0.0);
  CHECK(amplitude_dif(c, 0.0, g, AmplitudeVariant::PaperBound) == 0.0);
}

TEST_CASE("amplitude scaling and symmetry") {
  const Scenario s = reference_scenario(2.6e9);
  const RadioConstants c = derive_constants(s);
  PathGeometry g = derive_path_geometry(s, {20, 18, 0});
  for (auto v : {AmplitudeVariant::PaperBound, AmplitudeVariant::ExactIntegral}) {
    CHECK(amplitude_dif(c, 4.0, g, v) == doctest::Approx(2.0 * amplitude_dif(c, 1.0, g, v)).epsilon(1e-15));
  }
  CHECK(amplitude_dir(c, 4.0, g) == doctest::Approx(2.0 * amplitude_dir(c, 1.0, g)).epsilon(1e-15));
  CHECK(amplitude_tag(c, 4.0, g) == doctest::Approx(2.0 * amplitude_tag(c, 1.0, g)).epsilon(1e-15));

  PathGeometry doubled = g;
  doubled.r *= 2.0;
  CHECK(amplitude_dir(c, 1.0, doubled) == doctest::Approx(0.5 * amplitude_dir(c, 1.0, g)).epsilon(1e-15));

  PathGeometry swapped = g;
  std::swap(swapped.rt, swapped.rpt);
  CHECK(amplitude_tag(c, 1.0, swapped) == amplitude_tag(c, 1.0, g));
}

TEST_CASE("variants agree at alpha = 1 and bound holds for |alpha| <= 1") {
  const Scenario s = reference_scenario(700e6);
  const RadioConstants c = derive_constants(s);
  PathGeometry g = derive_path_geometry(s, {16, 16, 0});
  g.alpha = 1.0;
  g.e = g.h;
  CHECK(amplitude_dif(c, 1.0, g, AmplitudeVariant::PaperBound) ==
        amplitude_dif(c, 1.0, g, AmplitudeVariant::ExactIntegral));

  testing_support::ScenarioGenerator gen(8);
  for (int i = 0; i < 200; ++i) {
    const auto rc = gen.next();
    const RadioConstants cc = derive_constants(rc.scenario);
    const PathGeometry gg = derive_path_geometry(rc.scenario, rc.reader);
    if (std::abs(gg.alpha) <= 1.0 && std::abs(cc.k * gg.e) > 1e-6) {
      CHECK(amplitude_dif(cc, 1.0, gg, AmplitudeVariant::PaperBound) <=
            amplitude_dif(cc, 1.0, gg, AmplitudeVariant::ExactIntegral));
    }
  }
}

TEST_CASE("exact-integral amplitude signals a degenerate alpha") {
  const Scenario s = reference_scenario(700e6);
  const RadioConstants c = derive_constants(s);
  PathGeometry g = derive_path_geometry(s, {16, 16, 0});
  g.alpha = 0.0;
  g.e = 0.0;
  try {
    amplitude_dif(c, 1.0, g, AmplitudeVariant::ExactIntegral);
    FAIL("expected throw");
  } catch (const ModelError& e) {
    CHECK(e.code() == ErrorCode::AlphaDegenerate);
  }
  const Amplitudes amp = derive_amplitudes(c, 1.0, g, AmplitudeVariant::ExactIntegral);
  CHECK(std::isinf(amp.dif));
  CHECK(amp.dif_density > 0.0);
}

TEST_CASE("dBm conversion") {
  CHECK(dbm_to_watts(30.0) == 1.0);
  CHECK(dbm_to_watts(-116.0) == doctest::Approx(2.5118864315095718e-15).epsilon(1e-14));
  for (double dbm : {-150.0, -116.0, -3.3, 0.0, 30.0, 47.0}) {
    CHECK(watts_to_dbm(dbm_to_watts(dbm)) == doctest::Approx(dbm).epsilon(1e-12));
  }
}
