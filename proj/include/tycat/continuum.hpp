// Copyright 2026 The tycat Authors
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

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tycat/pentagon.hpp"
#include "tycat/ty_data.hpp"

namespace tycat {

/// N samples x_j = (j - N/2) * delta of the real line with
/// delta = sqrt(2 pi / (|a| N)). With this spacing a * N * delta * x_k is a
/// multiple of 2 pi, so every phase table is exactly N-periodic.
struct ContinuumGrid {
  std::size_t N = 0;
  double a = 0.0;
  double delta = 0.0;

  double point(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(N / 2)) * delta;
  }
  /// Grid index of the origin.
  std::size_t origin() const { return N / 2; }
};

/// Throws Error(kInput) if N is odd or < 4, or a is zero or not finite.
ContinuumGrid make_grid(std::size_t N, double a);

/// K[j][k] = s / sqrt(N) * exp(-i a x_j x_k). For a < 0 this is the complex
/// conjugate of the kernel for |a|.
Eigen::MatrixXcd gamma_kernel(const ContinuumGrid& grid, Sign s);

/// Grid tables in grid index order. Index j stands for the point x_j; the
/// group law is index addition shifted so that the origin is the unit:
/// j (+) k = j + k - N/2 mod N. a2 = b2 = a x_j x_k / (2 pi) in turns, every
/// other table vanishes (a is left empty with a_trivial set).
FloatAssociators grid_associators(const ContinuumGrid& grid, Sign s);

struct ResidualReport {
  PentagonReport pentagon;
  double unitarity = 0.0;
  double parity = 0.0;
  /// max over j, k of the distance of a x_k N delta / (2 pi) from an integer.
  double periodicity = 0.0;
  double tolerance = kDefaultTolerance;
  bool pass = false;
};

/// Unitarity and parity of gamma and every pentagon family on the grid
/// tables. Unitarity and parity are judged against 1e-12.
ResidualReport verify_continuum(const ContinuumGrid& grid, Sign s, double tolerance = kDefaultTolerance);
/// Same, on caller-supplied tables (e.g. a corrupted copy).
ResidualReport verify_continuum_tables(const ContinuumGrid& grid, const FloatAssociators& tables,
                                       double tolerance = kDefaultTolerance);

/// ||K v - s v|| / ||v|| for v_j = exp(-a x_j^2 / 2). Requires a > 0 and a
/// grid wide enough that the Gaussian is below 1e-12 at the endpoints;
/// throws Error(kInput) otherwise.
double gaussian_fixed_point(const ContinuumGrid& grid, Sign s);

struct ShiftModulationResidual {
  /// max over m of |K T_m - M[exp(-i a x_m x)] K| (shift becomes modulation).
  double shift = 0.0;
  /// max over m of |K M[exp(i a x_m x)] - T_m K| (modulation becomes shift).
  double modulation = 0.0;
};

/// T_m is translation by m grid steps, (T_m f)_j = f_{j (-) m}.
ShiftModulationResidual shift_modulation_check(const ContinuumGrid& grid, const std::vector<std::size_t>& shifts);
/// All shifts m = 0..N-1.
ShiftModulationResidual shift_modulation_check(const ContinuumGrid& grid);

std::string to_json(const ResidualReport& r);

}  // namespace tycat
