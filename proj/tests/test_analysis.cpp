// Copyright 2026 The spinsq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "spinsq/analysis.hpp"
#include "spinsq/models.hpp"

using namespace spinsq;

namespace {

const ModelSpec kRing3{ModelFamily::HeisenbergRing, 3, 0.0};
const ModelSpec kRing4{ModelFamily::HeisenbergRing, 4, 0.0};
const ModelSpec kXy5{ModelFamily::XyRing, 5, 0.0};

}  // namespace

TEST_CASE("criterion names round trip") {
  for (Criterion c : kAllCriteria) {
    const auto back = criterion_from_name(criterion_name(c));
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK(!criterion_from_name("negativity").has_value());
}

TEST_CASE("detection margins around the threshold") {
  CHECK(detection_margin(kRing4, 5.0, Criterion::Eqs2) > 0.0);
  CHECK(detection_margin(kRing4, 6.0, Criterion::Eqs2) <= 0.0);

  // The uniform state is separable, so no criterion may fire there.
  const double inf = std::numeric_limits<double>::infinity();
  for (Criterion c : kAllCriteria) {
    CHECK(detection_margin(kRing3, inf, c) <= 0.0);
  }
}

TEST_CASE("critical temperature search") {
  SUBCASE("variance criterion on the 3-ring") {
    const CriticalTemperature tc =
        critical_temperature(kRing3, Criterion::Eqs2);
    REQUIRE(tc.found());
    // Analytic threshold of the 3-site ring: 6 / ln 3.
    CHECK(std::abs(tc.t_c - 6.0 / std::log(3.0)) < 1e-3);
    CHECK(tc.t_hi - tc.t_lo <= 1e-4 + 1e-12);
    CHECK(tc.detected_below);
    CHECK(detection_margin(kRing3, tc.t_lo, Criterion::Eqs2) > 1e-9);
    CHECK(detection_margin(kRing3, tc.t_hi, Criterion::Eqs2) <= 1e-9);
  }

  SUBCASE("partial transpose on the 3-ring") {
    const CriticalTemperature tc =
        critical_temperature(kRing3, Criterion::Ppt);
    REQUIRE(tc.found());
    CHECK(std::abs(tc.t_c - 4.33) < 0.02);
  }

  SUBCASE("5-site xy ring") {
    const ThermalSolver solver(kXy5);
    const CriticalTemperature eqs2 =
        critical_temperature(solver, Criterion::Eqs2);
    const CriticalTemperature ppt =
        critical_temperature(solver, Criterion::Ppt);
    REQUIRE(eqs2.found());
    REQUIRE(ppt.found());
    CHECK(std::abs(eqs2.t_c - 3.39) < 0.02);
    CHECK(std::abs(ppt.t_c - 3.08) < 0.02);
  }

  SUBCASE("realignment fires below the squeezing threshold") {
    const CriticalTemperature ccnr =
        critical_temperature(kRing4, Criterion::Ccnr);
    REQUIRE(ccnr.found());
    CHECK(std::abs(ccnr.t_c - 3.8109) < 1e-3);
    CHECK(ccnr.t_c <
          critical_temperature(kRing4, Criterion::Eqs2).t_c);
  }

  SUBCASE("never detected is a result, not an error") {
    // Heisenberg thermal states carry no mean spin, so the standard
    // squeezing parameter never applies; the in-plane Dicke bound stays
    // far from saturation on this model too.
    CHECK(!critical_temperature(kRing3, Criterion::Eq1).found());
    CHECK(!critical_temperature(kRing3, Criterion::Case2).found());
    // Realignment stays quiet as well: the cold 3-ring is the maximally
    // mixed state over its frustrated ground multiplet.
    CHECK(!critical_temperature(kRing3, Criterion::Ccnr).found());
  }

  SUBCASE("detection at the range top raises") {
    SearchParams low;
    low.t_max = 2.0;
    try {
      critical_temperature(kRing3, Criterion::Eqs2, low);
      FAIL("expected BracketExceeded");
    } catch (const BracketExceeded& e) {
      CHECK(e.t_max() == 2.0);
    }
  }

  SUBCASE("parameter validation") {
    SearchParams bad;
    bad.grid_points = 1;
    CHECK_THROWS_AS(critical_temperature(kRing3, Criterion::Eqs2, bad),
                    std::invalid_argument);
    bad = SearchParams{};
    bad.t_min = 5.0;
    bad.t_max = 1.0;
    CHECK_THROWS_AS(critical_temperature(kRing3, Criterion::Eqs2, bad),
                    std::invalid_argument);
    bad = SearchParams{};
    bad.tol = 0.0;
    CHECK_THROWS_AS(critical_temperature(kRing3, Criterion::Eqs2, bad),
                    std::invalid_argument);
  }
}

TEST_CASE("table subset") {
  Table1Options opts;
  opts.n_min = 3;
  opts.n_max = 4;
  opts.criteria = {Criterion::Eqs2};
  const auto rows = table1(opts);
  REQUIRE(rows.size() == 4);

  CHECK(rows[0].model.family == ModelFamily::HeisenbergRing);
  CHECK(rows[0].model.n == 3);
  CHECK(std::abs(rows[0].t_c - 5.46) < 0.02);
  CHECK(std::abs(rows[1].t_c - 5.77) < 0.02);

  CHECK(rows[2].model.family == ModelFamily::XyRing);
  CHECK(std::abs(rows[2].t_c - 3.08) < 0.02);
  CHECK(std::abs(rows[3].t_c - 3.48) < 0.02);
}

TEST_CASE("bound windows") {
  SUBCASE("4-site ring") {
    const auto w = bound_window(kRing4);
    REQUIRE(w.has_value());
    CHECK(std::abs(w->t_ppt - 5.47) < 0.02);
    CHECK(std::abs(w->t_eqs2 - 5.77) < 0.02);
    CHECK(w->midpoint == doctest::Approx((w->t_ppt + w->t_eqs2) / 2));
    CHECK(w->certified());
  }

  SUBCASE("5-site ring has the widest gap") {
    const auto w = bound_window({ModelFamily::HeisenbergRing, 5, 0.0});
    REQUIRE(w.has_value());
    CHECK(std::abs(w->t_ppt - 4.96) < 0.02);
    CHECK(std::abs(w->t_eqs2 - 5.72) < 0.02);
    CHECK(std::abs((w->t_eqs2 - w->t_ppt) - 0.76) < 0.04);
    CHECK(w->certified());
  }

  SUBCASE("5-site xy ring") {
    const auto w = bound_window(kXy5);
    REQUIRE(w.has_value());
    CHECK(w->t_eqs2 > w->t_ppt);
    CHECK(w->certified());
  }

  SUBCASE("window from precomputed temperatures") {
    const ThermalSolver solver(kRing4);
    const CriticalTemperature ppt =
        critical_temperature(solver, Criterion::Ppt);
    const CriticalTemperature eqs2 =
        critical_temperature(solver, Criterion::Eqs2);
    const auto w = window_between(solver, ppt, eqs2);
    REQUIRE(w.has_value());
    const auto direct = bound_window(kRing4);
    REQUIRE(direct.has_value());
    CHECK(w->t_ppt == doctest::Approx(direct->t_ppt).epsilon(1e-10));
    CHECK(w->t_eqs2 == doctest::Approx(direct->t_eqs2).epsilon(1e-10));
  }
}

TEST_CASE("diagonal coupling sweep") {
  const auto rows =
      j2_sweep(0.0, 1.0, 3, {Criterion::Eqs2, Criterion::Ppt});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].j2 == doctest::Approx(0.0));
  CHECK(rows[1].j2 == doctest::Approx(0.5));
  CHECK(rows[2].j2 == doctest::Approx(1.0));

  for (const SweepRow& row : rows) {
    const auto& eqs2 = row.results.at(Criterion::Eqs2);
    const auto& ppt = row.results.at(Criterion::Ppt);
    REQUIRE(eqs2.found());
    REQUIRE(ppt.found());
    CHECK(eqs2.t_c >= ppt.t_c - 1e-4);
    CHECK(row.window.has_value() == (eqs2.t_c > ppt.t_c + 1e-4));
  }

  const auto single = j2_sweep(0.25, 2.0, 1, {Criterion::Eqs2});
  REQUIRE(single.size() == 1);
  CHECK(single[0].j2 == doctest::Approx(0.25));
  CHECK(!single[0].window.has_value());

  CHECK_THROWS_AS(j2_sweep(0.0, 1.0, 0, {Criterion::Eqs2}),
                  std::invalid_argument);
}
