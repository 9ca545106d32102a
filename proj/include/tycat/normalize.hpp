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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tycat/abelian.hpp"
#include "tycat/bicharacter.hpp"
#include "tycat/pentagon.hpp"
#include "tycat/ty_data.hpp"

namespace tycat {

/// A change of coordinates. theta is n*n (index x*n + y); phi, psi and omega
/// have one entry per element. Composition is entrywise addition.
struct GaugeTransform {
  GroupSpec spec;
  std::vector<Phase> theta;
  std::vector<Phase> phi;
  std::vector<Phase> psi;
  std::vector<Phase> omega;

  static GaugeTransform identity(const GroupSpec& spec);

  /// theta(e, .) = theta(., e) = 0 and phi(e) = psi(e) = 0. omega is free.
  bool unit_normalized() const;

  friend bool operator==(const GaugeTransform&, const GaugeTransform&) = default;
};

/// Entrywise sum; the effect of applying g then h.
GaugeTransform compose(const GaugeTransform& g, const GaugeTransform& h);

/// Unit-normalized gauge with entries k/denominator, k uniform.
GaugeTransform random_gauge(const GroupSpec& spec, std::uint64_t seed, std::int64_t denominator = 12);

/// Transforms every coefficient; a2 is unchanged. Throws Error(kInvariant) if
/// g is not unit-normalized and Error(kInput) on a group mismatch.
TYData apply_gauge(const TYData& data, const GaugeTransform& g);

struct StepResult {
  TYData data;
  GaugeTransform gauge;
};

/// theta := a3. Requires verify_all to pass (Error(kPrecondition) otherwise);
/// afterwards a and a3 vanish.
StepResult step1_trivialize_a(const TYData& data, double tolerance = kDefaultTolerance);
/// omega(x) := -b1(x^{-1}, e). Afterwards b1 vanishes.
StepResult step2_shift_b1(const TYData& data);
/// psi(x) := b2(x, e). Afterwards b2 is the transpose of a2 and a1, b3 vanish.
StepResult step3_symmetrize(const TYData& data);

struct ClassificationResult {
  GroupSpec spec;
  std::vector<Phase> chi;
  /// Set when chi is the table of an enumerated bicharacter.
  std::optional<Bicharacter> bicharacter;
  Sign sign = Sign::kPlus;
  GaugeTransform gauge;
  double residual = 0.0;
  /// |sqrt(n) Re gamma[e][e] - sign| before rounding.
  double sign_deviation = 0.0;
};

/// Reads (chi, sign) off normalized data. Throws Error(kInconsistency) if the
/// data is not in normal form for any symmetric nondegenerate chi.
ClassificationResult extract_invariants(const TYData& normalized, double tolerance = kDefaultTolerance);

/// The three steps followed by extraction; `gauge` in the result is the sum
/// of the step gauges, so apply_gauge(data, result.gauge) is the normal form.
ClassificationResult normalize(const TYData& data, double tolerance = kDefaultTolerance);

/// Dimension of the space of operators commuting with every translation and
/// every modulation by chi(y, .). Throws Error(kSize) if |G| > order_bound.
std::size_t heisenberg_commutant_dim(const GroupSpec& spec, const Bicharacter& B, std::int64_t order_bound = 16);
std::size_t heisenberg_commutant_dim(const GroupSpec& spec, const std::vector<Phase>& chi,
                                     std::int64_t order_bound = 16);

/// Same sign and chi tables related by an automorphism.
bool equivalent(const GroupSpec& spec, const ClassificationResult& r1, const ClassificationResult& r2);

struct ClassRepresentative {
  Bicharacter bicharacter;
  Sign sign;
  std::size_t orbit_size;
};

/// Bicharacter orbits times both signs.
std::vector<ClassRepresentative> classify_all(const GroupSpec& spec, std::int64_t order_bound = kDefaultOrderBound);

std::string to_json(const GaugeTransform& g);
GaugeTransform gauge_from_json(const std::string& text);
std::string to_json(const ClassificationResult& r);
std::string to_json(const GroupSpec& spec, const std::vector<ClassRepresentative>& classes);

}  // namespace tycat
