#include <cmath>

#include "diffscatter/contrast.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace diffscatter;
using testing_support::rel_err;

TEST_CASE("reference breakdown at (16,16,0), 700 MHz, 1 W") {
  Scenario s = reference_scenario(700e6);
  const PowerBreakdown p = power_breakdown(s, {16, 16, 0}, AmplitudeVariant::ExactIntegral);
  // Frozen from a 30-digit mpmath evaluation of the six-term expansion.
  CHECK(p.p_dir == doctest::Approx(2.85079179937429114e-5).epsilon(1e-12));
  CHECK(p.p_dif == doctest::Approx(1.05414506049851676e-8).epsilon(1e-9));
  CHECK(p.p_dir_dif == doctest::Approx(-5.29464259135159596e-7).epsilon(1e-9));
  CHECK(p.p_tag == doctest::Approx(6.26980988632962380e-11).epsilon(1e-12));
  CHECK(p.p_dir_tag == doctest::Approx(8.15832548008038497e-8).epsilon(1e-9));
  CHECK(p.p_dif_tag == doctest::Approx(-3.83445487674487482e-10).epsilon(1e-8));
  CHECK(p.p1 == doctest::Approx(2.79889951852127370e-5).epsilon(1e-10));
  CHECK(p.dps == doctest::Approx(8.12625074119926584e-8).epsilon(1e-9));
}

TEST_CASE("aggregates follow the term definitions") {
  testing_support::ScenarioGenerator gen(17);
  for (int i = 0; i < 100; ++i) {
    const auto rc = gen.next();
    for (auto v : {AmplitudeVariant::PaperBound, AmplitudeVariant::ExactIntegral}) {
      const PowerBreakdown p = power_breakdown(rc.scenario, rc.reader, v);
      CHECK(p.p1 == p.p_dir + p.p_dif + p.p_dir_dif);
      CHECK(p.dps == p.p_tag + p.p_dir_tag + p.p_dif_tag);
      CHECK(p.pr == p.p1 + p.dps);
      CHECK(p.p_dir >= 0.0);
      CHECK(p.p_dif >= 0.0);
      CHECK(p.p_tag >= 0.0);
      // Cauchy-Schwarz on the cosine factors.
      const double slack = 1.0 + 1e-12;
      CHECK(std::abs(p.p_dir_dif) <= 2.0 * std::sqrt(p.p_dir * p.p_dif) * slack);
      CHECK(std::abs(p.p_dir_tag) <= 2.0 * std::sqrt(p.p_dir * p.p_tag) * slack);
      CHECK(std::abs(p.p_dif_tag) <= 2.0 * std::sqrt(p.p_dif * p.p_tag) * slack);
      CHECK(p.pr >= -1e-12 * p.p_dir);
    }
  }
}

TEST_CASE("six-term expansion equals the squared superposition") {
  testing_support::ScenarioGenerator gen(23);
  for (int i = 0; i < 200; ++i) {
    const auto rc = gen.next();
    for (auto v : {AmplitudeVariant::PaperBound, AmplitudeVariant::ExactIntegral}) {
      const PowerBreakdown p = power_breakdown(rc.scenario, rc.reader, v);
      const double y2 = std::norm(total_signal(rc.scenario, rc.reader, 0.0, TagState::Backscattering, v));
      CHECK(rel_err(p.pr, y2) < 1e-12);
      const double y2_off = std::norm(total_signal(rc.scenario, rc.reader, 0.0, TagState::Transparent, v));
      CHECK(rel_err(p.p1, y2_off) < 1e-12);
    }
  }
}

TEST_CASE("breakdown is linear in transmit power") {
  testing_support::ScenarioGenerator gen(29);
  for (int i = 0; i < 50; ++i) {
    auto rc = gen.next();
    const PowerBreakdown p1 = power_breakdown(rc.scenario, rc.reader, AmplitudeVariant::ExactIntegral);
    rc.scenario.transmit_power_w = 4.0;
    const PowerBreakdown p4 = power_breakdown(rc.scenario, rc.reader, AmplitudeVariant::ExactIntegral);
    for (auto [a, b] : {std::pair{p1.p_dir, p4.p_dir}, {p1.p_dif, p4.p_dif}, {p1.p_dir_dif, p4.p_dir_dif},
                        {p1.p_tag, p4.p_tag}, {p1.p_dir_tag, p4.p_dir_tag}, {p1.p_dif_tag, p4.p_dif_tag},
                        {p1.p1, p4.p1}, {p1.dps, p4.dps}, {p1.pr, p4.pr}}) {
      CHECK(std::abs(b - 4.0 * a) <= 1e-13 * std::abs(4.0 * a) + 1e-300);
    }
  }
}

TEST_CASE("surface and tag removal") {
  Scenario s = reference_scenario(3.5e9);
  const Point3 reader{21, 19, 0};

  Scenario bare = without_surface(s);
  const PowerBreakdown nb = power_breakdown(bare, reader, AmplitudeVariant::ExactIntegral);
  CHECK(nb.p_dif == 0.0);
  CHECK(nb.p_dir_dif == 0.0);
  CHECK(nb.p_dif_tag == 0.0);
  CHECK(nb.dps == nb.p_tag + nb.p_dir_tag);

  Scenario untagged = s;
  untagged.gain_tag = 0.0;
  CHECK(power_breakdown(untagged, reader, AmplitudeVariant::ExactIntegral).dps == 0.0);
  CHECK(power_breakdown(s, reader, AmplitudeVariant::PaperBound, TagState::Transparent).dps == 0.0);
}

TEST_CASE("with/without surface comparison") {
  Scenario s = reference_scenario(700e6);
  const Point3 reader{16, 16, 0};
  const ContrastComparison cmp = compare_with_without_surface(s, reader, AmplitudeVariant::ExactIntegral);
  CHECK(cmp.dps_with == cmp.dps_without + cmp.delta_dif_term);
  REQUIRE(cmp.delta_dif);
  CHECK(*cmp.delta_dif == doctest::Approx(8.12625074119926584e-8 / 8.16459528996671459e-8).epsilon(1e-9));

  const ContrastComparison none =
      compare_with_without_surface(without_surface(s), reader, AmplitudeVariant::ExactIntegral);
  REQUIRE(none.delta_dif);
  CHECK(*none.delta_dif == 1.0);

  Scenario untagged = s;
  untagged.gain_tag = 0.0;
  CHECK_FALSE(compare_with_without_surface(untagged, reader, AmplitudeVariant::ExactIntegral).delta_dif);

  // Positive additive term with a positive baseline raises the ratio above 1.
  testing_support::ScenarioGenerator gen(41);
  int seen = 0;
  for (int i = 0; i < 400; ++i) {
    const auto rc = gen.next();
    const auto c = compare_with_without_surface(rc.scenario, rc.reader, AmplitudeVariant::ExactIntegral);
    if (c.delta_dif_term > 0.0 && c.dps_without > 0.0) {
      ++seen;
      CHECK(*c.delta_dif > 1.0);
    }
  }
  CHECK(seen > 20);
}
