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

#include "tycat/normalize.hpp"

#include <cmath>
#include <random>

#include "tycat/error.hpp"

namespace tycat {

namespace {

std::vector<Phase> zeros(std::size_t n) { return std::vector<Phase>(n, Phase()); }

bool all_zero(const std::vector<Phase>& t) {
  for (const auto& p : t) {
    if (!p.is_zero()) return false;
  }
  return true;
}

void check_gauge_shape(const GaugeTransform& g, std::size_t n) {
  if (g.theta.size() != n * n || g.phi.size() != n || g.psi.size() != n || g.omega.size() != n) {
    fail(ErrorKind::kInput, "gauge tables have the wrong size for the group");
  }
}

// Step gauges are unit-normalized whenever the data passes the unit checks,
// which step 1 requires; a failure here means the input was not valid data.
void require_step_gauge_normalized(const GaugeTransform& g, const char* step) {
  if (!g.unit_normalized()) {
    fail(ErrorKind::kInconsistency, std::string(step) + ": step gauge is not unit-normalized");
  }
}

}  // namespace

GaugeTransform GaugeTransform::identity(const GroupSpec& spec) {
  const auto n = static_cast<std::size_t>(group_order(spec));
  return {spec, zeros(n * n), zeros(n), zeros(n), zeros(n)};
}

bool GaugeTransform::unit_normalized() const {
  const std::size_t n = phi.size();
  if (n == 0 || theta.size() != n * n) return false;
  for (std::size_t x = 0; x < n; ++x) {
    if (!theta[x].is_zero() || !theta[x * n].is_zero()) return false;
  }
  return phi[0].is_zero() && psi[0].is_zero();
}

GaugeTransform compose(const GaugeTransform& g, const GaugeTransform& h) {
  if (!(g.spec == h.spec)) fail(ErrorKind::kInput, "gauges are defined on different groups");
  const auto n = static_cast<std::size_t>(group_order(g.spec));
  check_gauge_shape(g, n);
  check_gauge_shape(h, n);
  GaugeTransform out = g;
  for (std::size_t i = 0; i < n * n; ++i) out.theta[i] += h.theta[i];
  for (std::size_t i = 0; i < n; ++i) {
    out.phi[i] += h.phi[i];
    out.psi[i] += h.psi[i];
    out.omega[i] += h.omega[i];
  }
  return out;
}

GaugeTransform random_gauge(const GroupSpec& spec, std::uint64_t seed, std::int64_t denominator) {
  if (denominator < 1) fail(ErrorKind::kInput, "gauge denominator must be positive");
  const auto n = static_cast<std::size_t>(group_order(spec));
  std::mt19937_64 rng(seed);
  auto draw = [&] { return Phase(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(denominator)), denominator); };
  GaugeTransform g = GaugeTransform::identity(spec);
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t y = 1; y < n; ++y) g.theta[x * n + y] = draw();
  }
  for (std::size_t x = 1; x < n; ++x) g.phi[x] = draw();
  for (std::size_t x = 1; x < n; ++x) g.psi[x] = draw();
  for (std::size_t x = 0; x < n; ++x) g.omega[x] = draw();
  return g;
}

TYData apply_gauge(const TYData& data, const GaugeTransform& g) {
  validate_shapes(data);
  if (!(g.spec == data.spec)) fail(ErrorKind::kInput, "gauge is defined on a different group");
  const std::size_t n = data.n();
  check_gauge_shape(g, n);
  if (!g.unit_normalized()) fail(ErrorKind::kInvariant, "gauge is not unit-normalized");

  const GroupTable G(data.spec);
  auto th = [&](std::size_t x, std::size_t y) { return g.theta[x * n + y]; };
  const auto& ph = g.phi;
  const auto& ps = g.psi;
  const auto& om = g.omega;

  TYData out = data;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t xi = G.neg(x);
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = G.add(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        out.a[(x * n + y) * n + z] += th(y, z) + th(x, G.add(y, z)) - th(x, y) - th(xy, z);
      }
      const std::size_t k = x * n + y;
      out.a1[k] += th(x, y) + ps[xy] - ps[x] - ps[y];
      out.a3[k] += ph[x] + ph[y] - th(x, y) - ph[xy];
      const std::size_t xiw = G.add(xi, y);
      out.b1[k] += om[xiw] + th(x, xiw) - ph[x] - om[y];
      out.b2[k] += ph[x] - ps[x];
      out.b3[k] += ps[x] + om[G.add(y, x)] - om[y] - th(y, x);
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    const auto iu = static_cast<Eigen::Index>(u);
    out.gamma.row(iu) *= (om[u] + ps[u]).to_complex();
    out.gamma.col(iu) *= (-(om[u] + ph[u])).to_complex();
  }
#ifndef NDEBUG
  if (verify_all(data).pass && !verify_all(out).pass) {
    fail(ErrorKind::kInconsistency, "gauge transformation broke the pentagon equations");
  }
#endif
  return out;
}

StepResult step1_trivialize_a(const TYData& data, double tolerance) {
  if (!verify_all(data, tolerance).pass) fail(ErrorKind::kPrecondition, "data does not pass verification");
  GaugeTransform g = GaugeTransform::identity(data.spec);
  g.theta = data.a3;
  require_step_gauge_normalized(g, "step 1");
  TYData out = apply_gauge(data, g);
  if (!all_zero(out.a) || !all_zero(out.a3)) fail(ErrorKind::kInconsistency, "step 1: a or a3 did not vanish");
  return {std::move(out), std::move(g)};
}

StepResult step2_shift_b1(const TYData& data) {
  validate_shapes(data);
  if (!all_zero(data.a) || !all_zero(data.a3)) fail(ErrorKind::kPrecondition, "step 2 needs a = a3 = 0");
  const GroupTable G(data.spec);
  const std::size_t n = data.n();
  GaugeTransform g = GaugeTransform::identity(data.spec);
  for (std::size_t x = 0; x < n; ++x) g.omega[x] = -data.b1[G.neg(x) * n];
  TYData out = apply_gauge(data, g);
  if (!all_zero(out.b1)) fail(ErrorKind::kInconsistency, "step 2: b1 does not satisfy the cocycle relation");
  return {std::move(out), std::move(g)};
}

StepResult step3_symmetrize(const TYData& data) {
  validate_shapes(data);
  if (!all_zero(data.a) || !all_zero(data.a3) || !all_zero(data.b1)) {
    fail(ErrorKind::kPrecondition, "step 3 needs a = a3 = b1 = 0");
  }
  const std::size_t n = data.n();
  GaugeTransform g = GaugeTransform::identity(data.spec);
  for (std::size_t x = 0; x < n; ++x) g.psi[x] = data.b2[x * n];
  require_step_gauge_normalized(g, "step 3");
  TYData out = apply_gauge(data, g);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (out.b2[x * n + y] != out.a2[y * n + x]) fail(ErrorKind::kInconsistency, "step 3: b2 is not a2 transposed");
    }
  }
  if (!all_zero(out.b3) || !all_zero(out.a1)) fail(ErrorKind::kInconsistency, "step 3: a1 or b3 did not vanish");
  return {std::move(out), std::move(g)};
}

ClassificationResult extract_invariants(const TYData& d, double tolerance) {
  validate_shapes(d);
  const std::size_t n = d.n();
  const GroupTable G(d.spec);
  if (!table_is_biadditive(G, d.a2)) fail(ErrorKind::kInconsistency, "a2 is not a bicharacter");
  if (!table_is_symmetric(d.a2, n)) fail(ErrorKind::kInconsistency, "a2 is not symmetric");
  if (!table_is_nondegenerate(d.a2, n)) fail(ErrorKind::kInconsistency, "a2 is degenerate");

  ClassificationResult r;
  r.spec = d.spec;
  r.chi = d.a2;
  r.gauge = GaugeTransform::identity(d.spec);
  try {
    r.bicharacter = bichar_from_table(d.spec, d.a2);
  } catch (const Error&) {
    r.bicharacter.reset();
  }

  const double root = std::sqrt(static_cast<double>(n));
  const double raw = root * d.gamma(0, 0).real();
  const double rounded = std::round(raw);
  r.sign_deviation = std::abs(raw - rounded);
  if ((rounded != 1.0 && rounded != -1.0) || r.sign_deviation >= 1e-6) {
    fail(ErrorKind::kInconsistency, "gamma[e][e] does not determine a sign");
  }
  r.sign = rounded > 0 ? Sign::kPlus : Sign::kMinus;

  double residual = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::complex<double> want = rounded / root * std::conj(d.a2[x * n + y].to_complex());
      residual = std::max(residual, std::abs(d.gamma(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) - want));
    }
  }
  r.residual = residual;
  if (!(residual < tolerance)) fail(ErrorKind::kInconsistency, "gamma is not in normal form");
  return r;
}

ClassificationResult normalize(const TYData& data, double tolerance) {
  auto s1 = step1_trivialize_a(data, tolerance);
  auto s2 = step2_shift_b1(s1.data);
  auto s3 = step3_symmetrize(s2.data);
  ClassificationResult r = extract_invariants(s3.data, tolerance);
  r.gauge = compose(compose(s1.gauge, s2.gauge), s3.gauge);
  return r;
}

std::size_t heisenberg_commutant_dim(const GroupSpec& spec, const std::vector<Phase>& chi, std::int64_t order_bound) {
  if (group_order(spec) > order_bound) {
    fail(ErrorKind::kSize, "group order exceeds bound " + std::to_string(order_bound));
  }
  const GroupTable G(spec);
  const std::size_t n = G.size();
  if (chi.size() != n * n) fail(ErrorKind::kInput, "bicharacter table has the wrong size");
  const auto nn = static_cast<Eigen::Index>(n * n);
  auto var = [n](std::size_t i, std::size_t j) { return static_cast<Eigen::Index>(i * n + j); };

  // Accumulate A^* A over all constraints A vec(T) = 0; its kernel is the
  // commutant.
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(nn, nn);
  Eigen::MatrixXcd A(nn, nn);
  for (std::size_t x = 0; x < n; ++x) {
    // (sigma_x f)(z) = f(x + z): sigma_x[z][x + z] = 1.
    // (T sigma_x)[i][j] = T[i][j - x], (sigma_x T)[i][j] = T[i + x][j].
    A.setZero();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        A(var(i, j), var(i, G.sub(j, x))) += 1.0;
        A(var(i, j), var(G.add(i, x), j)) -= 1.0;
      }
    }
    gram.noalias() += A.adjoint() * A;
  }
  for (std::size_t y = 0; y < n; ++y) {
    // (T M_y - M_y T)[i][j] = (chi(y, j) - chi(y, i)) T[i][j].
    A.setZero();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        A(var(i, j), var(i, j)) = chi[y * n + j].to_complex() - chi[y * n + i].to_complex();
      }
    }
    gram.noalias() += A.adjoint() * A;
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  std::size_t dim = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) < 1e-9) ++dim;
  }
  return dim;
}

std::size_t heisenberg_commutant_dim(const GroupSpec& spec, const Bicharacter& B, std::int64_t order_bound) {
  if (group_order(spec) > order_bound) {
    fail(ErrorKind::kSize, "group order exceeds bound " + std::to_string(order_bound));
  }
  if (!(B.spec == spec)) fail(ErrorKind::kInput, "bicharacter is defined on a different group");
  return heisenberg_commutant_dim(spec, bichar_table(B), order_bound);
}

bool equivalent(const GroupSpec& spec, const ClassificationResult& r1, const ClassificationResult& r2) {
  if (!(r1.spec == spec) || !(r2.spec == spec)) fail(ErrorKind::kInput, "results are for a different group");
  const auto n = static_cast<std::size_t>(group_order(spec));
  if (r1.chi.size() != n * n || r2.chi.size() != n * n) fail(ErrorKind::kInput, "chi table has the wrong size");
  if (r1.sign != r2.sign) return false;
  for (const auto& phi : automorphism_group(spec)) {
    bool same = true;
    for (std::size_t x = 0; x < n && same; ++x) {
      for (std::size_t y = 0; y < n && same; ++y) {
        same = r2.chi[x * n + y] == r1.chi[phi.permutation[x] * n + phi.permutation[y]];
      }
    }
    if (same) return true;
  }
  return false;
}

std::vector<ClassRepresentative> classify_all(const GroupSpec& spec, std::int64_t order_bound) {
  std::vector<ClassRepresentative> out;
  for (const auto& orbit : orbit_classify(spec, order_bound)) {
    for (Sign s : {Sign::kPlus, Sign::kMinus}) out.push_back({orbit.representative, s, orbit.orbit_size});
  }
  return out;
}

}  // namespace tycat
