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

#include "tycat/bicharacter.hpp"

#include <map>
#include <numeric>
#include <string>

#include "tycat/error.hpp"

namespace tycat {

namespace {

std::int64_t pair_gcd(const GroupSpec& spec, std::size_t i, std::size_t j) {
  return std::gcd(spec.orders()[i], spec.orders()[j]);
}

std::int64_t canonical(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// Table as integer numerators over the group exponent, for hashing.
std::vector<std::int64_t> table_key(const GroupSpec& spec, const std::vector<Phase>& table) {
  const std::int64_t l = group_exponent(spec);
  std::vector<std::int64_t> key;
  key.reserve(table.size());
  for (const auto& p : table) key.push_back(p.numerator() * (l / p.denominator()));
  return key;
}

}  // namespace

void validate_shape(const Bicharacter& b) {
  if (b.M.size() != b.spec.rank()) fail(ErrorKind::kInput, "bicharacter matrix has wrong number of rows");
  for (const auto& row : b.M) {
    if (row.size() != b.spec.rank()) fail(ErrorKind::kInput, "bicharacter matrix has wrong number of columns");
  }
}

Phase bichar_eval(const Bicharacter& b, const GroupElement& x, const GroupElement& y) {
  validate_shape(b);
  if (!belongs_to(b.spec, x) || !belongs_to(b.spec, y)) {
    fail(ErrorKind::kInput, "element does not belong to the bicharacter's group");
  }
  Phase p;
  for (std::size_t i = 0; i < b.spec.rank(); ++i) {
    for (std::size_t j = 0; j < b.spec.rank(); ++j) {
      const std::int64_t g = pair_gcd(b.spec, i, j);
      p += Phase(canonical(b.M[i][j], g) * x.residues[i] % g * y.residues[j], g);
    }
  }
  return p;
}

std::vector<Phase> bichar_table(const Bicharacter& b) {
  validate_shape(b);
  const auto elems = enumerate_elements(b.spec);
  const std::size_t n = elems.size();
  std::vector<Phase> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = bichar_eval(b, elems[x], elems[y]);
  }
  return t;
}

bool table_is_symmetric(const std::vector<Phase>& table, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (table[x * n + y] != table[y * n + x]) return false;
    }
  }
  return true;
}

bool table_is_nondegenerate(const std::vector<Phase>& table, std::size_t n) {
  // Exhaustive kernel check: only the identity (index 0) may pair trivially
  // with everything.
  for (std::size_t x = 1; x < n; ++x) {
    bool in_kernel = true;
    for (std::size_t y = 0; y < n && in_kernel; ++y) in_kernel = table[x * n + y].is_zero();
    if (in_kernel) return false;
  }
  return true;
}

bool table_is_biadditive(const GroupTable& g, const std::vector<Phase>& table) {
  const std::size_t n = g.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (table[x * n + g.add(y, z)] != table[x * n + y] + table[x * n + z]) return false;
        if (table[g.add(x, y) * n + z] != table[x * n + z] + table[y * n + z]) return false;
      }
    }
  }
  return true;
}

bool is_symmetric(const Bicharacter& b) {
  return table_is_symmetric(bichar_table(b), static_cast<std::size_t>(group_order(b.spec)));
}

bool is_nondegenerate(const Bicharacter& b) {
  return table_is_nondegenerate(bichar_table(b), static_cast<std::size_t>(group_order(b.spec)));
}

std::vector<Bicharacter> enumerate_symmetric_nondegenerate(const GroupSpec& spec, std::int64_t order_bound) {
  if (group_order(spec) > order_bound) {
    fail(ErrorKind::kSize, "group order exceeds bound " + std::to_string(order_bound));
  }
  const std::size_t r = spec.rank();
  // A table is symmetric iff M == M^T modulo the pairwise gcds, so only the
  // upper triangle is free.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::int64_t candidates = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      slots.emplace_back(i, j);
      candidates *= pair_gcd(spec, i, j);
      if (candidates > (std::int64_t{1} << 22)) fail(ErrorKind::kSize, "too many candidate bicharacters");
    }
  }
  std::vector<Bicharacter> out;
  std::vector<std::int64_t> digits(slots.size(), 0);
  for (std::int64_t c = 0; c < candidates; ++c) {
    Bicharacter b{spec, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, 0))};
    for (std::size_t s = 0; s < slots.size(); ++s) {
      b.M[slots[s].first][slots[s].second] = digits[s];
      b.M[slots[s].second][slots[s].first] = digits[s];
    }
    const auto table = bichar_table(b);
    const auto n = static_cast<std::size_t>(group_order(spec));
    if (table_is_symmetric(table, n) && table_is_nondegenerate(table, n)) out.push_back(std::move(b));
    for (std::size_t s = slots.size(); s-- > 0;) {
      if (++digits[s] < pair_gcd(spec, slots[s].first, slots[s].second)) break;
      digits[s] = 0;
    }
  }
  return out;
}

Bicharacter bichar_from_table(const GroupSpec& spec, const std::vector<Phase>& table) {
  const auto elems = enumerate_elements(spec);
  const std::size_t n = elems.size();
  if (table.size() != n * n) fail(ErrorKind::kInput, "table size does not match group order");
  const std::size_t r = spec.rank();
  Bicharacter b{spec, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, 0))};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      GroupElement ei = identity(spec), ej = identity(spec);
      ei.residues[i] = 1;
      ej.residues[j] = 1;
      const Phase v = table[element_index(spec, ei) * n + element_index(spec, ej)];
      const std::int64_t g = pair_gcd(spec, i, j);
      if (g % v.denominator() != 0) fail(ErrorKind::kInvariant, "table is not a bicharacter table");
      b.M[i][j] = v.numerator() * (g / v.denominator());
    }
  }
  if (bichar_table(b) != table) fail(ErrorKind::kInvariant, "table is not a bicharacter table");
  return b;
}

Bicharacter bichar_pullback(const Bicharacter& b, const Automorphism& phi) {
  validate_shape(b);
  const std::size_t r = b.spec.rank();
  if (phi.matrix.size() != r) fail(ErrorKind::kInput, "automorphism does not match the group");
  Bicharacter out{b.spec, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, 0))};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      GroupElement ei = identity(b.spec), ej = identity(b.spec);
      ei.residues[i] = 1;
      ej.residues[j] = 1;
      const Phase v = bichar_eval(b, apply(b.spec, phi, ei), apply(b.spec, phi, ej));
      // v has denominator dividing gcd(orders[i], orders[j]).
      const std::int64_t g = pair_gcd(b.spec, i, j);
      out.M[i][j] = v.numerator() * (g / v.denominator());
    }
  }
  return out;
}

std::vector<BicharacterOrbit> orbit_classify(const GroupSpec& spec, std::int64_t order_bound) {
  const auto all = enumerate_symmetric_nondegenerate(spec, order_bound);
  const auto autos = automorphism_group(spec, order_bound);
  const auto n = static_cast<std::size_t>(group_order(spec));

  std::map<std::vector<std::int64_t>, std::size_t> orbit_of;  // table key -> orbit index
  std::vector<BicharacterOrbit> orbits;
  for (const auto& b : all) {
    const auto table = bichar_table(b);
    if (orbit_of.count(table_key(spec, table))) continue;
    const std::size_t id = orbits.size();
    orbits.push_back({b, 0});
    for (const auto& phi : autos) {
      // Pulled-back table via the element permutation.
      std::vector<Phase> pulled(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) pulled[x * n + y] = table[phi.permutation[x] * n + phi.permutation[y]];
      }
      if (orbit_of.emplace(table_key(spec, pulled), id).second) ++orbits[id].orbit_size;
    }
  }
  return orbits;
}

}  // namespace tycat
