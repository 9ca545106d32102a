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
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "tycat/abelian.hpp"
#include "tycat/bicharacter.hpp"
#include "tycat/phase.hpp"

namespace tycat {

struct Tau {
  friend bool operator==(Tau, Tau) { return true; }
};

/// Either an invertible object (a group element) or the single
/// non-invertible object tau.
using SimpleObject = std::variant<GroupElement, Tau>;

inline bool is_tau(const SimpleObject& s) { return std::holds_alternative<Tau>(s); }

enum class Sign : int { kPlus = 1, kMinus = -1 };

/// Throws Error(kInput) unless v is +1 or -1.
Sign sign_from_int(int v);
inline int to_int(Sign s) { return static_cast<int>(s); }

/// The simple summands of s (x) t, each with multiplicity one, invertible
/// objects in enumeration order.
std::vector<SimpleObject> fusion_product(const GroupSpec& spec, const SimpleObject& s, const SimpleObject& t);

/// Associator coefficients of a Tambara-Yamagami type structure.
///
/// Tables are indexed by element positions in enumerate_elements order:
/// a is n*n*n with index (x*n + y)*n + z, the others n*n with index x*n + y.
/// For the b-tables the first slot is the invertible object and the second is
/// the coordinate on tau (x) tau. gamma is n x n.
///
/// Only the shapes are enforced by the type; unitarity of gamma is checked
/// when data is read from text so that mutated data can still be held and
/// verified in memory.
struct TYData {
  GroupSpec spec;
  std::vector<Phase> a;
  std::vector<Phase> a1, a2, a3;
  std::vector<Phase> b1, b2, b3;
  Eigen::MatrixXcd gamma;

  std::size_t n() const { return static_cast<std::size_t>(gamma.rows()); }
};

/// Names of the phase tables, in serialization order.
inline constexpr const char* kPhaseTableNames[] = {"a", "a1", "a2", "a3", "b1", "b2", "b3"};

std::vector<Phase>& phase_table(TYData& d, std::string_view name);
const std::vector<Phase>& phase_table(const TYData& d, std::string_view name);

/// Throws Error(kInput) if any table has the wrong size for d.spec.
void validate_shapes(const TYData& d);

/// max |gamma * gamma^* - I|.
double unitarity_residual(const Eigen::MatrixXcd& gamma);

/// The standard data: a, a1, a3, b1, b3 trivial, a2 = b2 = chi and
/// gamma[x][y] = s / sqrt(n) * exp(-2 pi i chi(x, y)).
/// Throws Error(kInvariant) if B is asymmetric or degenerate.
TYData construct_standard(const GroupSpec& spec, const Bicharacter& B, Sign s);

/// The permutation matrix of x -> x^{-1}.
Eigen::MatrixXd parity_matrix(const GroupSpec& spec);

/// Exact equality of the phase tables and bitwise equality of gamma.
bool operator==(const TYData& lhs, const TYData& rhs);

std::string to_json(const TYData& d);
/// Throws Error(kParse) on malformed text, Error(kInput) on wrong table
/// sizes and Error(kInvariant) if gamma is not unitary within 1e-10.
TYData ty_from_json(std::string_view text);

}  // namespace tycat
