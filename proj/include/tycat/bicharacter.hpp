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

#include "tycat/abelian.hpp"
#include "tycat/phase.hpp"

namespace tycat {

/// chi(x, y) = sum_ij M[i][j] * x[i] * y[j] / gcd(orders[i], orders[j]) mod 1.
///
/// Entry M[i][j] only matters modulo gcd(orders[i], orders[j]); distinct
/// matrices can therefore describe the same function, and comparisons in this
/// library go through the evaluation table.
struct Bicharacter {
  GroupSpec spec;
  std::vector<std::vector<std::int64_t>> M;
};

/// Throws Error(kInput) unless M is rank x rank.
void validate_shape(const Bicharacter& b);

Phase bichar_eval(const Bicharacter& b, const GroupElement& x, const GroupElement& y);

/// Full |G| x |G| table, row-major in enumerate_elements order.
std::vector<Phase> bichar_table(const Bicharacter& b);

bool is_symmetric(const Bicharacter& b);
bool is_nondegenerate(const Bicharacter& b);

/// Table-level versions, used for extracted bicharacters that only exist as
/// tables. `n` is the group order.
bool table_is_symmetric(const std::vector<Phase>& table, std::size_t n);
bool table_is_nondegenerate(const std::vector<Phase>& table, std::size_t n);
bool table_is_biadditive(const GroupTable& group, const std::vector<Phase>& table);

/// Symmetric nondegenerate bicharacters, M entries canonical in
/// [0, gcd(orders[i], orders[j])), in lexicographic order of the upper
/// triangle. Throws Error(kSize) past `order_bound`.
std::vector<Bicharacter> enumerate_symmetric_nondegenerate(const GroupSpec& spec,
                                                           std::int64_t order_bound = kDefaultOrderBound);

/// chi'(x, y) = chi(phi(x), phi(y)), with M' in canonical range.
Bicharacter bichar_pullback(const Bicharacter& b, const Automorphism& phi);

/// Recovers the canonical M of a biadditive table; throws Error(kInvariant)
/// if the table is not the table of any bicharacter.
Bicharacter bichar_from_table(const GroupSpec& spec, const std::vector<Phase>& table);

struct BicharacterOrbit {
  Bicharacter representative;
  std::size_t orbit_size = 0;
};

/// Aut(G)-orbits of enumerate_symmetric_nondegenerate(spec), in order of first
/// appearance.
std::vector<BicharacterOrbit> orbit_classify(const GroupSpec& spec,
                                             std::int64_t order_bound = kDefaultOrderBound);

/// {"orders":[...],"M":[[...],...]}
std::string to_json(const Bicharacter& b);
/// Throws Error(kParse) on malformed text and Error(kInput) on shape errors.
Bicharacter bichar_from_json(const std::string& text);

/// Plain JSON array of the cyclic orders.
std::string to_json(const GroupSpec& spec);
GroupSpec group_from_json(const std::string& text);

}  // namespace tycat
