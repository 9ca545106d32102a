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
#include <vector>

#include "tycat/phase.hpp"

namespace tycat {

/// A finite abelian group presented as Z/orders[0] x ... x Z/orders[k-1].
///
/// No normal form is applied: [2,3] and [6] are different presentations and
/// every table in the library is relative to the presentation it was built
/// for. The empty list is the trivial group.
class GroupSpec {
 public:
  GroupSpec() = default;
  /// Throws Error(kInput) if any order is < 2.
  explicit GroupSpec(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::int64_t> orders_;
};

struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Default bound on |G| for the exhaustive routines (automorphisms,
/// bicharacter enumeration, classification).
inline constexpr std::int64_t kDefaultOrderBound = 64;

std::int64_t group_order(const GroupSpec& spec);
/// lcm of the cyclic orders; every character value has this as a denominator.
std::int64_t group_exponent(const GroupSpec& spec);

GroupElement identity(const GroupSpec& spec);
/// Throws Error(kInput) on dimension mismatch or out-of-range residues.
GroupElement elem_op(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement elem_inv(const GroupSpec& spec, const GroupElement& x);
bool belongs_to(const GroupSpec& spec, const GroupElement& x);

/// All elements in lexicographic order of residue vectors (last coordinate
/// fastest). Index 0 is the identity. This order fixes every table layout.
std::vector<GroupElement> enumerate_elements(const GroupSpec& spec);
std::size_t element_index(const GroupSpec& spec, const GroupElement& x);

/// sum_i x[i]*eta[i]/orders[i] mod 1.
Phase canonical_pairing(const GroupSpec& spec, const GroupElement& x, const GroupElement& eta);

/// Order-of-element of x.
std::int64_t element_order(const GroupSpec& spec, const GroupElement& x);

/// Indexed Cayley table. Elements are referred to by their position in
/// enumerate_elements order.
class GroupTable {
 public:
  explicit GroupTable(const GroupSpec& spec);

  std::size_t size() const { return n_; }
  static constexpr std::size_t identity() { return 0; }
  std::size_t add(std::size_t x, std::size_t y) const { return add_[x * n_ + y]; }
  std::size_t neg(std::size_t x) const { return neg_[x]; }
  std::size_t sub(std::size_t x, std::size_t y) const { return add(x, neg(y)); }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const GroupSpec& spec() const { return spec_; }

 private:
  GroupSpec spec_;
  std::size_t n_ = 1;
  std::vector<GroupElement> elements_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
};

/// A group automorphism. Column j of `matrix` is the image of the j-th
/// standard generator; `permutation[i]` is the index of the image of the
/// i-th element.
struct Automorphism {
  std::vector<std::vector<std::int64_t>> matrix;
  std::vector<std::size_t> permutation;
};

GroupElement apply(const GroupSpec& spec, const Automorphism& phi, const GroupElement& x);

/// Every automorphism of the presented group. Generator images are searched with
/// pruning on element order and incremental injectivity. Throws Error(kSize)
/// if |G| exceeds `order_bound` or more than `count_bound` automorphisms
/// exist.
std::vector<Automorphism> automorphism_group(const GroupSpec& spec,
                                             std::int64_t order_bound = kDefaultOrderBound,
                                             std::size_t count_bound = 1u << 20);

}  // namespace tycat
