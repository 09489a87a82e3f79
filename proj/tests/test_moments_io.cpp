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
#include <cstdio>
#include <sstream>
#include <string>

#include "doctest.h"
#include "spinsq/models.hpp"
#include "spinsq/moments_io.hpp"
#include "test_util.hpp"

using namespace spinsq;

namespace {

int parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_state_file(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

int moments_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_moments_file(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("state file round trip") {
  const ModelSpec spec{ModelFamily::Cluster4, 4, 0.6};
  const DensityMatrix rho = thermal_state(spec, 3.7).state;

  std::stringstream buf;
  write_state_file(buf, rho);
  const DensityMatrix back = read_state_file(buf);

  CHECK(back.n_qubits == 4);
  // %.17g output reproduces every double bit for bit.
  CHECK(testutil::max_abs_diff(back.mat, rho.mat) == 0.0);

  const CollectiveMoments a = moments_from_state(rho);
  const CollectiveMoments b = moments_from_state(back);
  CHECK((a.j_vec - b.j_vec).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((a.corr - b.corr).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("state file format") {
  SUBCASE("pure two-qubit example") {
    std::istringstream in(
        "DMAT 4\n"
        "0,0 0,0 0,0 0,0\n"
        "0,0 0.5,0 -0.5,0 0,0\n"
        "0,0 -0.5,0 0.5,0 0,0\n"
        "0,0 0,0 0,0 0,0\n");
    const DensityMatrix rho = read_state_file(in);
    CHECK(rho.n_qubits == 2);
    CHECK(testutil::max_abs_diff(rho.mat, testutil::singlet().mat) < 1e-12);
  }

  SUBCASE("blank trailing lines are fine") {
    std::istringstream in("DMAT 2\n1,0 0,0\n0,0 0,0\n\n   \n");
    CHECK(read_state_file(in).n_qubits == 1);
  }

  SUBCASE("header errors point at line 1") {
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("DMAT\n") == 1);
    CHECK(parse_error_line("MAT 4\n") == 1);
    CHECK(parse_error_line("DMAT 3\n") == 1);
    CHECK(parse_error_line("DMAT 4 extra\n") == 1);
  }

  SUBCASE("row errors carry the line number") {
    // Second matrix row is line 3.
    CHECK(parse_error_line("DMAT 2\n1,0 0,0\n0,0\n") == 3);
    CHECK(parse_error_line("DMAT 2\n1,0 0,0 0,0\n0,0 0,0\n") == 2);
    CHECK(parse_error_line("DMAT 2\n1,0 0,0\n") == 3);
    CHECK(parse_error_line("DMAT 2\n1,0 bad\n0,0 0,0\n") == 2);
    CHECK(parse_error_line("DMAT 2\n1,0 0,0,0\n0,0 0,0\n") == 2);
    CHECK(parse_error_line("DMAT 2\n1,0 0,0\n0,0 0,0\nleftover\n") == 4);
  }

  SUBCASE("density validation reports as a whole-file error") {
    // Trace 2.
    CHECK(parse_error_line("DMAT 2\n1,0 0,0\n0,0 1,0\n") == 0);
    // Not Hermitian.
    CHECK(parse_error_line("DMAT 2\n0.5,0 1,0\n0,0 0.5,0\n") == 0);
    // Negative eigenvalue.
    CHECK(parse_error_line("DMAT 2\n1.5,0 0,0\n0,0 -0.5,0\n") == 0);
    std::istringstream in("DMAT 2\n1.5,0 0,0\n0,0 -0.5,0\n");
    CHECK_THROWS_WITH_AS(read_state_file(in),
                         doctest::Contains("not a density matrix"),
                         ParseError);
  }
}

TEST_CASE("moments file parsing") {
  SUBCASE("minimal file") {
    std::istringstream in(
        "# fully polarized along z\n"
        "N = 4\n"
        "Jx = 0\n"
        "Jy = 0\n"
        "Jz = 2\n"
        "Kxx = 1\n"
        "Kyy = 1\n"
        "Kzz = 4\n");
    const MomentsFile f = read_moments_file(in);
    CHECK(!f.has_full_corr);
    CHECK(f.moments.n == 4);
    CHECK(f.moments.j_vec == Eigen::Vector3d(0, 0, 2));
    CHECK(f.moments.corr(2, 2) == 4.0);
    // Unmeasured cross moments default to the uncorrelated value.
    CHECK(f.moments.corr(0, 1) == 0.0);
    CHECK(f.moments.corr(0, 2) == 0.0);
  }

  SUBCASE("full correlation block") {
    std::istringstream in(
        "N = 2\n"
        "Jx = 0.4\nJy = 0.1\nJz = 0.3\n"
        "Kxx = 0.5\nKyy = 0.25\nKzz = 0.3\n"
        "Cxy = 0.05\nCxz = 0.12  # inline comment\nCyz = 0.03\n");
    const MomentsFile f = read_moments_file(in);
    CHECK(f.has_full_corr);
    CHECK(f.moments.corr(0, 1) == 0.05);
    CHECK(f.moments.corr(1, 0) == 0.05);
    CHECK(f.moments.corr(0, 2) == 0.12);
    CHECK(f.moments.corr(1, 2) == 0.03);
  }

  SUBCASE("a partial correlation block does not enable frame work") {
    std::istringstream in(
        "N = 2\nJx = 0\nJy = 0\nJz = 0\n"
        "Kxx = 0.5\nKyy = 0.5\nKzz = 0.5\nCxy = 0.1\n");
    const MomentsFile f = read_moments_file(in);
    CHECK(!f.has_full_corr);
    CHECK(f.moments.corr(0, 1) == 0.1);
    CHECK(f.moments.corr(0, 2) == 0.0);
  }

  SUBCASE("missing keys are whole-file errors") {
    CHECK(moments_error_line("N = 2\nJx = 0\n") == 0);
    std::istringstream in("N = 2\nJx = 0\nJy = 0\nJz = 0\n");
    CHECK_THROWS_WITH_AS(read_moments_file(in),
                         doctest::Contains("missing required key 'Kxx'"),
                         ParseError);
  }

  SUBCASE("syntax errors carry line numbers") {
    CHECK(moments_error_line("N = 2\nJx 0\n") == 2);
    CHECK(moments_error_line("N = 2\nQx = 0\n") == 2);
    CHECK(moments_error_line("N = 2\nJx = 0\nJx = 1\n") == 3);
    CHECK(moments_error_line("N = 2\nJx = abc\n") == 2);
  }

  SUBCASE("validation points at the offending entry") {
    // N out of range, on its own line.
    CHECK(moments_error_line("# c\nN = 1\nJx = 0\nJy = 0\nJz = 0\n"
                             "Kxx = 0.5\nKyy = 0.5\nKzz = 0.5\n") == 2);
    CHECK(moments_error_line("N = 2.5\nJx = 0\nJy = 0\nJz = 0\n"
                             "Kxx = 0.5\nKyy = 0.5\nKzz = 0.5\n") == 1);
    // |Jy| > n/2 on line 3.
    CHECK(moments_error_line("N = 2\nJx = 0\nJy = 1.5\nJz = 0\n"
                             "Kxx = 0.5\nKyy = 0.5\nKzz = 0.5\n") == 3);
    // Kzz > n^2/4 on line 7.
    CHECK(moments_error_line("N = 2\nJx = 0\nJy = 0\nJz = 0\n"
                             "Kxx = 0.5\nKyy = 0.5\nKzz = 1.5\n") == 7);
    CHECK(moments_error_line("N = 2\nJx = 0\nJy = 0\nJz = 0\n"
                             "Kxx = -0.2\nKyy = 0.5\nKzz = 0.5\n") == 5);
    // Kxx < Jx^2 means a negative variance, flagged on the K line.
    CHECK(moments_error_line("N = 2\nJx = 0.9\nJy = 0\nJz = 0\n"
                             "Kxx = 0.1\nKyy = 0.5\nKzz = 0.5\n") == 5);
  }

  SUBCASE("round trip against a reference state") {
    const CollectiveMoments m = moments_from_state(reference_state(
        ReferenceState::DickeHalf, 4));
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "N = %d\nJx = %.17g\nJy = %.17g\nJz = %.17g\n"
                  "Kxx = %.17g\nKyy = %.17g\nKzz = %.17g\n"
                  "Cxy = %.17g\nCxz = %.17g\nCyz = %.17g\n",
                  m.n, m.j_vec(0), m.j_vec(1), m.j_vec(2), m.corr(0, 0),
                  m.corr(1, 1), m.corr(2, 2), m.corr(0, 1), m.corr(0, 2),
                  m.corr(1, 2));
    std::istringstream in(buf);
    const MomentsFile f = read_moments_file(in);
    CHECK(f.has_full_corr);
    CHECK((f.moments.j_vec - m.j_vec).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((f.moments.corr - m.corr).cwiseAbs().maxCoeff() < 1e-12);
  }
}
