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

#include "tycat/abelian.hpp"

#include <numeric>
#include <string>

#include "tycat/error.hpp"

namespace tycat {

namespace {

void check_member(const GroupSpec& spec, const GroupElement& x) {
  if (!belongs_to(spec, x)) {
    fail(ErrorKind::kInput, "group element does not belong to the group");
  }
}

std::int64_t mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  for (auto o : orders_) {
    if (o < 2) fail(ErrorKind::kInput, "cyclic orders must be >= 2, got " + std::to_string(o));
  }
}

std::int64_t group_order(const GroupSpec& spec) {
  std::int64_t n = 1;
  for (auto o : spec.orders()) {
    if (n > (std::int64_t{1} << 40) / o) fail(ErrorKind::kSize, "group order too large");
    n *= o;
  }
  return n;
}

std::int64_t group_exponent(const GroupSpec& spec) {
  std::int64_t l = 1;
  for (auto o : spec.orders()) l = std::lcm(l, o);
  return l;
}

bool belongs_to(const GroupSpec& spec, const GroupElement& x) {
  if (x.residues.size() != spec.rank()) return false;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    if (x.residues[i] < 0 || x.residues[i] >= spec.orders()[i]) return false;
  }
  return true;
}

GroupElement identity(const GroupSpec& spec) {
  return GroupElement{std::vector<std::int64_t>(spec.rank(), 0)};
}

GroupElement elem_op(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  check_member(spec, x);
  check_member(spec, y);
  GroupElement z = x;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    z.residues[i] = (x.residues[i] + y.residues[i]) % spec.orders()[i];
  }
  return z;
}

GroupElement elem_inv(const GroupSpec& spec, const GroupElement& x) {
  check_member(spec, x);
  GroupElement z = x;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    z.residues[i] = mod(-x.residues[i], spec.orders()[i]);
  }
  return z;
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec) {
  const auto n = static_cast<std::size_t>(group_order(spec));
  std::vector<GroupElement> out;
  out.reserve(n);
  GroupElement cur = identity(spec);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(cur);
    // Increment as a mixed-radix counter, last coordinate fastest.
    for (std::size_t i = spec.rank(); i-- > 0;) {
      if (++cur.residues[i] < spec.orders()[i]) break;
      cur.residues[i] = 0;
    }
  }
  return out;
}

std::size_t element_index(const GroupSpec& spec, const GroupElement& x) {
  check_member(spec, x);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    idx = idx * static_cast<std::size_t>(spec.orders()[i]) + static_cast<std::size_t>(x.residues[i]);
  }
  return idx;
}

Phase canonical_pairing(const GroupSpec& spec, const GroupElement& x, const GroupElement& eta) {
  check_member(spec, x);
  check_member(spec, eta);
  Phase p;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    p += Phase(x.residues[i] * eta.residues[i], spec.orders()[i]);
  }
  return p;
}

std::int64_t element_order(const GroupSpec& spec, const GroupElement& x) {
  check_member(spec, x);
  std::int64_t l = 1;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    const std::int64_t o = spec.orders()[i];
    l = std::lcm(l, o / std::gcd(o, x.residues[i]));
  }
  return l;
}

GroupTable::GroupTable(const GroupSpec& spec)
    : spec_(spec), n_(static_cast<std::size_t>(group_order(spec))), elements_(enumerate_elements(spec)) {
  add_.resize(n_ * n_);
  neg_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    neg_[i] = static_cast<std::uint32_t>(element_index(spec, elem_inv(spec, elements_[i])));
    for (std::size_t j = 0; j < n_; ++j) {
      add_[i * n_ + j] = static_cast<std::uint32_t>(element_index(spec, elem_op(spec, elements_[i], elements_[j])));
    }
  }
}

GroupElement apply(const GroupSpec& spec, const Automorphism& phi, const GroupElement& x) {
  check_member(spec, x);
  GroupElement y = identity(spec);
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    std::int64_t v = 0;
    for (std::size_t j = 0; j < spec.rank(); ++j) {
      v = (v + phi.matrix[i][j] * x.residues[j]) % spec.orders()[i];
    }
    y.residues[i] = v;
  }
  return y;
}

std::vector<Automorphism> automorphism_group(const GroupSpec& spec, std::int64_t order_bound,
                                             std::size_t count_bound) {
  const std::int64_t order = group_order(spec);
  if (order > order_bound) {
    fail(ErrorKind::kSize, "group order " + std::to_string(order) + " exceeds bound " +
                               std::to_string(order_bound));
  }
  const GroupTable table(spec);
  const std::size_t n = table.size();
  const std::size_t rank = spec.rank();

  // Candidate images for generator j: elements of order exactly orders[j].
  std::vector<std::vector<std::size_t>> candidates(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    for (std::size_t e = 0; e < n; ++e) {
      if (element_order(spec, table.element(e)) == spec.orders()[j]) candidates[j].push_back(e);
    }
  }

  std::vector<Automorphism> result;
  std::vector<std::size_t> images(rank);
  // image_of[i] for i in the subgroup generated by the first k generators;
  // that subgroup is the set of elements whose residues vanish past k.
  std::vector<std::size_t> image_of(n, 0);  // image index per element index
  std::vector<char> hit(n, 0);
  std::vector<std::size_t> stride(rank + 1, 1);
  for (std::size_t j = rank; j-- > 0;) stride[j] = stride[j + 1] * static_cast<std::size_t>(spec.orders()[j]);

  // Generators are assigned from the last coordinate backwards, so after
  // assigning e_j the subgroup <e_j..e_{rank-1}> is the index range
  // [0, stride[j]) and h + m*e_j sits at index m*stride[j+1] + h.
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == rank) {
      Automorphism phi;
      phi.matrix.assign(rank, std::vector<std::int64_t>(rank, 0));
      for (std::size_t j = 0; j < rank; ++j) {
        const auto& img = table.element(images[j]);
        for (std::size_t i = 0; i < rank; ++i) phi.matrix[i][j] = img.residues[i];
      }
      phi.permutation = image_of;
      result.push_back(std::move(phi));
      if (result.size() > count_bound) {
        fail(ErrorKind::kSize, "automorphism count exceeds bound " + std::to_string(count_bound));
      }
      return;
    }
    const std::size_t j = rank - 1 - depth;  // generator being assigned
    const auto oj = static_cast<std::size_t>(spec.orders()[j]);
    const std::size_t span = stride[j + 1];  // |<e_{j+1}..e_{rank-1}>|, indices [0, span)
    for (std::size_t cand : candidates[j]) {
      bool injective = true;
      std::vector<std::size_t> added;
      for (std::size_t m = 1; m < oj && injective; ++m) {
        for (std::size_t h = 0; h < span; ++h) {
          const std::size_t img = table.add(image_of[(m - 1) * stride[j + 1] + h], cand);
          if (hit[img]) {
            injective = false;
            break;
          }
          hit[img] = 1;
          added.push_back(img);
          image_of[m * stride[j + 1] + h] = img;
        }
      }
      if (injective) {
        images[j] = cand;
        self(self, depth + 1);
      }
      for (auto a : added) hit[a] = 0;
    }
  };
  hit[0] = 1;  // the identity maps to itself
  image_of[0] = 0;
  search(search, 0);
  return result;
}

}  // namespace tycat
