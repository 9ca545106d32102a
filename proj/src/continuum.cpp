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

#include "tycat/continuum.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "tycat/error.hpp"

namespace tycat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOperatorTolerance = 1e-12;

IndexGroup shifted_cyclic(std::size_t N) {
  IndexGroup g;
  g.n = N;
  g.identity = N / 2;
  g.add_table.resize(N * N);
  g.neg_table.resize(N);
  for (std::size_t j = 0; j < N; ++j) {
    g.neg_table[j] = static_cast<std::uint32_t>((N - j) % N);
    for (std::size_t k = 0; k < N; ++k) g.add_table[j * N + k] = static_cast<std::uint32_t>((j + k + N / 2) % N);
  }
  return g;
}

// a x_j x_k / (2 pi), reduced to [0, 1).
double chi_turns(const ContinuumGrid& grid, std::size_t j, std::size_t k) {
  // x_j * x_k first so that the table is exactly symmetric.
  const double t = grid.a * (grid.point(j) * grid.point(k)) / kTwoPi;
  return t - std::floor(t);
}

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

ContinuumGrid make_grid(std::size_t N, double a) {
  if (N < 4 || N % 2 != 0) fail(ErrorKind::kInput, "grid size must be even and at least 4");
  if (a == 0.0 || !std::isfinite(a)) fail(ErrorKind::kInput, "grid parameter must be finite and nonzero");
  ContinuumGrid g;
  g.N = N;
  g.a = a;
  g.delta = std::sqrt(kTwoPi / (std::abs(a) * static_cast<double>(N)));
  return g;
}

Eigen::MatrixXcd gamma_kernel(const ContinuumGrid& grid, Sign s) {
  const std::size_t N = grid.N;
  Eigen::MatrixXcd K(ix(N), ix(N));
  const double scale = to_int(s) / std::sqrt(static_cast<double>(N));
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = 0; k < N; ++k) K(ix(j), ix(k)) = std::polar(scale, -kTwoPi * chi_turns(grid, j, k));
  }
  return K;
}

FloatAssociators grid_associators(const ContinuumGrid& grid, Sign s) {
  const std::size_t N = grid.N;
  FloatAssociators t;
  t.group = shifted_cyclic(N);
  t.a_trivial = true;
  t.a1.assign(N * N, 0.0);
  t.a3.assign(N * N, 0.0);
  t.b1.assign(N * N, 0.0);
  t.b3.assign(N * N, 0.0);
  t.a2.resize(N * N);
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = 0; k < N; ++k) t.a2[j * N + k] = chi_turns(grid, j, k);
  }
  t.b2 = t.a2;
  t.gamma = gamma_kernel(grid, s);
  return t;
}

ResidualReport verify_continuum_tables(const ContinuumGrid& grid, const FloatAssociators& tables, double tolerance) {
  const std::size_t N = grid.N;
  ResidualReport r;
  r.tolerance = tolerance;
  r.unitarity = unitarity_residual(tables.gamma);

  Eigen::MatrixXcd sq = tables.gamma * tables.gamma;
  for (std::size_t j = 0; j < N; ++j) sq(ix(j), ix(tables.group.neg(j))) -= 1.0;
  r.parity = sq.cwiseAbs().maxCoeff();

  for (std::size_t k = 0; k < N; ++k) {
    const double w = grid.a * static_cast<double>(N) * grid.delta * grid.point(k) / kTwoPi;
    r.periodicity = std::max(r.periodicity, std::abs(w - std::round(w)));
  }

  r.pentagon = verify_float_tables(tables, tolerance);
  r.pass = r.pentagon.pass && r.unitarity < kOperatorTolerance && r.parity < kOperatorTolerance &&
           r.periodicity < kOperatorTolerance;
  return r;
}

ResidualReport verify_continuum(const ContinuumGrid& grid, Sign s, double tolerance) {
  return verify_continuum_tables(grid, grid_associators(grid, s), tolerance);
}

double gaussian_fixed_point(const ContinuumGrid& grid, Sign s) {
  if (grid.a <= 0.0) fail(ErrorKind::kInput, "the Gaussian test needs a > 0");
  const double edge = grid.point(0);
  if (std::exp(-grid.a * edge * edge / 2.0) >= 1e-12) {
    fail(ErrorKind::kInput, "grid too narrow: the Gaussian is not below 1e-12 at the endpoints");
  }
  const std::size_t N = grid.N;
  Eigen::VectorXcd v(ix(N));
  for (std::size_t j = 0; j < N; ++j) {
    const double x = grid.point(j);
    v(ix(j)) = std::exp(-grid.a * x * x / 2.0);
  }
  const Eigen::VectorXcd d = gamma_kernel(grid, s) * v - static_cast<double>(to_int(s)) * v;
  return d.norm() / v.norm();
}

ShiftModulationResidual shift_modulation_check(const ContinuumGrid& grid, const std::vector<std::size_t>& shifts) {
  const std::size_t N = grid.N;
  const IndexGroup g = shifted_cyclic(N);
  const Eigen::MatrixXcd K = gamma_kernel(grid, Sign::kPlus);
  ShiftModulationResidual r;
  for (std::size_t step : shifts) {
    if (step >= N) fail(ErrorKind::kInput, "shift must be below the grid size");
    // Shifting by `step` grid points is translation by the element at index
    // origin + step.
    const std::size_t m = (N / 2 + step) % N;
    // K T_m: column k of K moves to column k (+) m.
    double shift = 0.0, modulation = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      const std::complex<double> mod_j = std::polar(1.0, -kTwoPi * chi_turns(grid, j, m));
      for (std::size_t k = 0; k < N; ++k) {
        // (K T_m)[j][k] = K[j][k (+) m].
        const std::complex<double> lhs = K(ix(j), ix(g.add(k, m)));
        shift = std::max(shift, std::abs(lhs - mod_j * K(ix(j), ix(k))));
        // (K M[chi(m, .)])[j][k] = K[j][k] chi(m, k); (T_m K)[j][k] = K[j (-) m][k].
        const std::complex<double> lhs2 = K(ix(j), ix(k)) * std::polar(1.0, kTwoPi * chi_turns(grid, m, k));
        modulation = std::max(modulation, std::abs(lhs2 - K(ix(g.sub(j, m)), ix(k))));
      }
    }
    r.shift = std::max(r.shift, shift);
    r.modulation = std::max(r.modulation, modulation);
  }
  return r;
}

ShiftModulationResidual shift_modulation_check(const ContinuumGrid& grid) {
  std::vector<std::size_t> all(grid.N);
  for (std::size_t m = 0; m < grid.N; ++m) all[m] = m;
  return shift_modulation_check(grid, all);
}

}  // namespace tycat
