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
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tycat/abelian.hpp"
#include "tycat/ty_data.hpp"

namespace tycat {

inline constexpr double kDefaultTolerance = 1e-10;

struct FamilyResult {
  std::string id;
  std::size_t violations = 0;
  /// Exact families: max |exp(2 pi i d) - 1| over violating tuples, so 0 on a
  /// pass. Operator families: max Frobenius norm of (lhs - rhs) over anchors.
  double max_deviation = 0.0;
  /// Element indices of the first violating tuple, empty if none.
  std::vector<std::size_t> sample;
};

struct PentagonReport {
  std::vector<FamilyResult> families;
  bool pass = true;
  double tolerance = kDefaultTolerance;

  /// nullptr if absent.
  const FamilyResult* find(const std::string& id) const;
  void append(const PentagonReport& other);
};

enum class ScalarMode { kExact, kFloat };

/// The eleven scalar pentagon families, each over all of G^3 (G^4 for P0).
PentagonReport verify_scalar(const TYData& data, ScalarMode mode = ScalarMode::kExact,
                             double tolerance = kDefaultTolerance);

/// The operator families Mixed-1..4 and Final, anchored at each group
/// element. Throws Error(kInput) on shape errors.
PentagonReport verify_gamma(const TYData& data, double tolerance = kDefaultTolerance);

/// Independent check: every pentagon on every quadruple of simple objects,
/// built from F-matrices between fusion trees and composed directly. Reports
/// one family per output-type pattern of the quadruple ("oracle:xxxx" with t
/// marking tau).
PentagonReport verify_by_composition(const TYData& data, double tolerance = kDefaultTolerance);

/// Every associator coefficient with the unit object in one of its
/// invertible slots must be trivial.
PentagonReport verify_units(const TYData& data);

/// Unit checks, scalar families (exact), operator families and the
/// composition oracle.
PentagonReport verify_all(const TYData& data, double tolerance = kDefaultTolerance);

/// Multiplies `count` uniformly chosen entries by exp(2 pi i k/8), k in 1..7.
/// The table is chosen uniformly among the seven phase tables and gamma.
/// Deterministic in `seed`; throws Error(kInput) if count < 1.
TYData mutate(const TYData& data, std::uint64_t seed, int count = 1);

/// Cayley table on indices 0..n-1.
struct IndexGroup {
  std::size_t n = 1;
  std::size_t identity = 0;
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> neg_table;

  std::size_t add(std::size_t x, std::size_t y) const { return add_table[x * n + y]; }
  std::size_t neg(std::size_t x) const { return neg_table[x]; }
  std::size_t sub(std::size_t x, std::size_t y) const { return add(x, neg(y)); }

  static IndexGroup from(const GroupTable& g);
};

/// Associator tables with phases in turns (floating point), for structures
/// whose phases are not rational. When `a_trivial` is set the table `a` is
/// left empty and taken to be identically zero.
struct FloatAssociators {
  IndexGroup group;
  bool a_trivial = false;
  std::vector<double> a;
  std::vector<double> a1, a2, a3;
  std::vector<double> b1, b2, b3;
  Eigen::MatrixXcd gamma;
};

/// Scalar families (float mode) and operator families on float tables.
PentagonReport verify_float_tables(const FloatAssociators& t, double tolerance = kDefaultTolerance);

std::string to_json(const PentagonReport& r);
PentagonReport report_from_json(const std::string& text);

}  // namespace tycat
