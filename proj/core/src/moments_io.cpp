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

#include "spinsq/moments_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace spinsq {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : message),
      line_(line) {}

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

double parse_double(const std::string& token, int line) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "cannot parse number '" + token + "'");
  }
  if (pos != token.size()) {
    throw ParseError(line, "trailing characters in number '" + token + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, "number '" + token + "' is not finite");
  }
  return value;
}

Complex parse_complex(const std::string& token, int line) {
  const std::size_t comma = token.find(',');
  if (comma == std::string::npos || token.find(',', comma + 1) != std::string::npos) {
    throw ParseError(line, "entry '" + token + "' must be <re>,<im>");
  }
  const double re = parse_double(token.substr(0, comma), line);
  const double im = parse_double(token.substr(comma + 1), line);
  return {re, im};
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open '" + path + "' for reading");
  }
  return in;
}

}  // namespace

DensityMatrix read_state_file(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(1, "empty file, expected 'DMAT <dim>' header");
  }
  std::istringstream header(line);
  std::string magic;
  long dim = 0;
  std::string extra;
  if (!(header >> magic >> dim) || magic != "DMAT" || (header >> extra)) {
    throw ParseError(1, "expected 'DMAT <dim>' header");
  }
  if (dim < 2 || (dim & (dim - 1)) != 0 ||
      dim > (Eigen::Index(1) << kMaxQubits)) {
    throw ParseError(1, "dimension must be a power of two in [2, " +
                            std::to_string(Eigen::Index(1) << kMaxQubits) +
                            "]");
  }

  Matrix m(dim, dim);
  for (long r = 0; r < dim; ++r) {
    const int line_no = static_cast<int>(r) + 2;
    if (!std::getline(in, line)) {
      throw ParseError(line_no, "expected " + std::to_string(dim) +
                                    " matrix rows, file ends after " +
                                    std::to_string(r));
    }
    std::istringstream row(line);
    std::string token;
    long c = 0;
    while (row >> token) {
      if (c >= dim) {
        throw ParseError(line_no, "row has more than " + std::to_string(dim) +
                                      " entries");
      }
      m(r, c++) = parse_complex(token, line_no);
    }
    if (c != dim) {
      throw ParseError(line_no, "row has " + std::to_string(c) +
                                    " entries, expected " + std::to_string(dim));
    }
  }
  std::string rest;
  while (std::getline(in, rest)) {
    if (!trim(rest).empty()) {
      throw ParseError(static_cast<int>(dim) + 2,
                       "unexpected content after the matrix");
    }
  }

  DensityCheck check = check_density(m, 1e-8);
  if (!check.ok()) {
    throw ParseError(0, "not a density matrix: " + check.describe_failures());
  }
  DensityMatrix rho;
  rho.n_qubits = qubit_count_for_dim(m.rows());
  rho.mat = std::move(m);
  return rho;
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_state_file(in);
}

void write_state_file(std::ostream& out, const DensityMatrix& rho) {
  const Eigen::Index d = rho.mat.rows();
  out << "DMAT " << d << "\n";
  char buf[64];
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", rho.mat(r, c).real(),
                    rho.mat(r, c).imag());
      out << (c ? " " : "") << buf;
    }
    out << "\n";
  }
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  write_state_file(out, rho);
}

MomentsFile read_moments_file(std::istream& in) {
  struct Entry {
    double value;
    int line;
  };
  std::map<std::string, Entry> entries;
  static const std::vector<std::string> known = {
      "N", "Jx", "Jy", "Jz", "Kxx", "Kyy", "Kzz", "Cxy", "Cxz", "Cyz"};

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_no, "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
    if (entries.count(key)) {
      throw ParseError(line_no, "duplicate key '" + key + "'");
    }
    entries[key] = {parse_double(value, line_no), line_no};
  }

  for (const char* required : {"N", "Jx", "Jy", "Jz", "Kxx", "Kyy", "Kzz"}) {
    if (!entries.count(required)) {
      throw ParseError(0, std::string("missing required key '") + required + "'");
    }
  }

  const Entry n_entry = entries.at("N");
  const double n_real = n_entry.value;
  if (n_real != std::floor(n_real) || n_real < 2 || n_real > kMaxQubits) {
    throw ParseError(n_entry.line, "N must be an integer in [2, " +
                                       std::to_string(kMaxQubits) + "]");
  }
  const int n = static_cast<int>(n_real);

  Eigen::Vector3d j_vec(entries.at("Jx").value, entries.at("Jy").value,
                        entries.at("Jz").value);
  Eigen::Vector3d k_vec(entries.at("Kxx").value, entries.at("Kyy").value,
                        entries.at("Kzz").value);

  // Per-axis physical bounds for N spin-1/2 particles; measurement noise
  // tolerance 1e-6.
  constexpr double tol = 1e-6;
  const char* j_keys[] = {"Jx", "Jy", "Jz"};
  const char* k_keys[] = {"Kxx", "Kyy", "Kzz"};
  for (int l = 0; l < 3; ++l) {
    if (std::abs(j_vec(l)) > n / 2.0 + tol) {
      throw ParseError(entries.at(j_keys[l]).line,
                       std::string(j_keys[l]) + " exceeds n/2 in magnitude");
    }
    if (k_vec(l) < -tol || k_vec(l) > n * n / 4.0 + tol) {
      throw ParseError(entries.at(k_keys[l]).line,
                       std::string(k_keys[l]) + " outside [0, n^2/4]");
    }
    if (k_vec(l) - j_vec(l) * j_vec(l) < -tol) {
      throw ParseError(entries.at(k_keys[l]).line,
                       std::string(k_keys[l]) + " implies a negative variance");
    }
  }

  MomentsFile out;
  out.has_full_corr =
      entries.count("Cxy") && entries.count("Cxz") && entries.count("Cyz");
  Eigen::Matrix3d corr = j_vec * j_vec.transpose();
  corr.diagonal() = k_vec;
  const struct {
    const char* key;
    int i;
    int j;
  } off_diag[] = {{"Cxy", 0, 1}, {"Cxz", 0, 2}, {"Cyz", 1, 2}};
  for (const auto& c : off_diag) {
    if (entries.count(c.key)) {
      corr(c.i, c.j) = entries.at(c.key).value;
      corr(c.j, c.i) = entries.at(c.key).value;
    }
  }
  out.moments = moments_from_corr(n, j_vec, corr);
  return out;
}

MomentsFile read_moments_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_moments_file(in);
}

}  // namespace spinsq
