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
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "spinsq/criteria.hpp"
#include "spinsq/models.hpp"
#include "spinsq/separability.hpp"
#include "spinsq/spin_ops.hpp"
#include "test_util.hpp"

using namespace spinsq;
using namespace spinsq::testutil;

TEST_CASE("ppt verdicts") {
  SUBCASE("product states pass every cut") {
    std::mt19937 rng(83);
    const BipartitionVerdicts v = ppt_all(product_state(random_blochs(rng, 4)));
    CHECK(v.records.size() == 7);
    for (const BipartitionRecord& rec : v.records) {
      CHECK(rec.min_pt_eigenvalue > -1e-12);
      CHECK(std::isnan(rec.ccnr_margin));  // not computed by this pass
    }
    CHECK(!v.any_npt());
  }

  SUBCASE("singlet analytic negativity") {
    const BipartitionVerdicts v = ppt_all(singlet());
    CHECK(v.records.size() == 1);
    CHECK(v.min_pt_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(v.any_npt());
    CHECK(is_npt(singlet()));
  }

  SUBCASE("aggregate equals the record minimum") {
    std::mt19937 rng(89);
    const BipartitionVerdicts v = ppt_all(random_density(rng, 4));
    double lo = 1e300;
    for (const BipartitionRecord& rec : v.records) {
      lo = std::min(lo, rec.min_pt_eigenvalue);
    }
    CHECK(v.min_pt_eigenvalue == lo);
  }

  SUBCASE("ghz is negative across every cut") {
    const BipartitionVerdicts v =
        ppt_all(reference_state(ReferenceState::Ghz, 4));
    for (const BipartitionRecord& rec : v.records) {
      CHECK(rec.min_pt_eigenvalue < -1e-10);
    }
  }

  SUBCASE("hot thermal ring is ppt everywhere") {
    // The partial-transpose detection threshold of the 4-site ring sits
    // near t = 5.47, so t = 6 must land on the positive side.
    const ModelSpec spec{ModelFamily::HeisenbergRing, 4, 0.0};
    const BipartitionVerdicts v = ppt_all(thermal_state(spec, 6.0).state);
    CHECK(v.min_pt_eigenvalue >= -1e-10);
    CHECK(!is_npt(thermal_state(spec, 6.0).state));
    // And t = 4 on the negative side.
    CHECK(is_npt(thermal_state(spec, 4.0).state));
  }
}

TEST_CASE("ccnr verdicts") {
  SUBCASE("product states stay below the norm bound") {
    std::mt19937 rng(97);
    const BipartitionVerdicts v =
        ccnr_all(product_state(random_blochs(rng, 4)));
    CHECK(v.records.size() == 7);
    for (const BipartitionRecord& rec : v.records) {
      CHECK(rec.ccnr_margin <= 1e-9);
      CHECK(std::isnan(rec.min_pt_eigenvalue));
    }
    CHECK(!v.any_ccnr_violation());
  }

  SUBCASE("singlet realignment margin") {
    const BipartitionVerdicts v = ccnr_all(singlet());
    CHECK(v.max_ccnr_margin == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(violates_ccnr(singlet()));
  }

  SUBCASE("no realignment violation inside the ppt window") {
    // Between the partial-transpose threshold (5.47) and the squeezing
    // threshold (5.77) the 4-site ring state is entangled yet passes the
    // realignment test on every cut.
    const ModelSpec spec{ModelFamily::Cluster4, 4, 0.0};
    const DensityMatrix rho = thermal_state(spec, 5.6).state;
    const BipartitionVerdicts v = ccnr_all(rho);
    CHECK(v.max_ccnr_margin <= 1e-9);
    CHECK(!violates_ccnr(rho));
  }
}

TEST_CASE("two qubit ppt margin") {
  DensityMatrix mixed;
  mixed.mat = Matrix::Identity(4, 4) / 4.0;
  mixed.n_qubits = 2;
  CHECK(two_qubit_ppt_margin(mixed) <= 0.0);

  CHECK(two_qubit_ppt_margin(singlet()) ==
        doctest::Approx(0.5).epsilon(1e-12));

  DensityMatrix wrong;
  wrong.mat = Matrix::Identity(8, 8) / 8.0;
  wrong.n_qubits = 3;
  CHECK_THROWS_AS(two_qubit_ppt_margin(wrong), std::invalid_argument);
}

TEST_CASE("detected entanglement with a separable pair average") {
  // Just below the squeezing threshold the 4-site cluster state is still
  // detected, yet its averaged two-qubit reduction carries no
  // entanglement of its own.
  const ModelSpec spec{ModelFamily::Cluster4, 4, 0.0};
  const DensityMatrix rho = thermal_state(spec, 5.6).state;

  const CriterionReport r = eval_squeezing_inequalities(moments_from_state(rho));
  CHECK(r.detected);
  CHECK(two_qubit_ppt_margin(avg_two_qubit_state(rho)) <= 0.0);
}

TEST_CASE("corner constructions pass both separability tests") {
  std::mt19937 rng(101);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 2 + int(rng() % 4);
    Eigen::Vector3d j(g(rng), g(rng), g(rng));
    j *= 0.4 * n / j.norm();

    const DensityMatrix a = separable_extreme_a(Axis::Z, j, n);
    const DensityMatrix b = separable_extreme_b(Axis::Z, j, n).state;
    for (const DensityMatrix* rho : {&a, &b}) {
      const BipartitionVerdicts ppt = ppt_all(*rho);
      CHECK(ppt.min_pt_eigenvalue >= -1e-10);
      const BipartitionVerdicts ccnr = ccnr_all(*rho);
      CHECK(ccnr.max_ccnr_margin <= 1e-9);
    }
  }
}
