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

#pragma once

#include "spinsq/spin_ops.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

// Text formats for exchanging states and measured moments.
//
// State files: line 1 is "DMAT <d>" with d the matrix dimension, followed
// by d rows of d whitespace-separated complex entries "<re>,<im>". The
// parser validates Hermiticity, unit trace and positivity to 1e-8.
//
// Moments files: "key = value" lines with "#" comments. Keys N, Jx, Jy,
// Jz, Kxx, Kyy, Kzz are required; Cxy, Cxz, Cyz are optional and only
// their full set enables frame optimization.
namespace spinsq {

// Line numbers are 1-based; 0 marks whole-file problems (such as a parsed
// matrix failing the density checks).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct MomentsFile {
  CollectiveMoments moments;
  bool has_full_corr = false;
};

DensityMatrix read_state_file(std::istream& in);
DensityMatrix read_state_file(const std::string& path);

// Entries are written with enough digits to reproduce the doubles
// exactly on read-back.
void write_state_file(std::ostream& out, const DensityMatrix& rho);
void write_state_file(const std::string& path, const DensityMatrix& rho);

MomentsFile read_moments_file(std::istream& in);
MomentsFile read_moments_file(const std::string& path);

}  // namespace spinsq
