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

// Brute-force reference computations used by the tests. These deliberately
// avoid the library's own group tables and enumeration shortcuts.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

struct Group {
  Vec orders;
  std::vector<Vec> elems;

  explicit Group(Vec o) : orders(std::move(o)) {
    elems.push_back({});
    for (std::int64_t m : orders) {
      std::vector<Vec> next;
      for (const auto& e : elems) {
        for (std::int64_t r = 0; r < m; ++r) {
          Vec v = e;
          v.push_back(r);
          next.push_back(v);
        }
      }
      elems = next;
    }
  }

  std::size_t size() const { return elems.size(); }

  std::size_t index(const Vec& v) const {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), v) - elems.begin());
  }

  std::size_t add(std::size_t i, std::size_t j) const {
    Vec v(orders.size());
    for (std::size_t k = 0; k < orders.size(); ++k) v[k] = (elems[i][k] + elems[j][k]) % orders[k];
    return index(v);
  }
};

// Permutations of the elements that respect addition.
inline std::vector<std::vector<std::size_t>> automorphisms(const Group& g) {
  std::vector<std::size_t> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool hom = true;
    for (std::size_t i = 0; i < g.size() && hom; ++i) {
      for (std::size_t j = 0; j < g.size() && hom; ++j) hom = p[g.add(i, j)] == g.add(p[i], p[j]);
    }
    if (hom) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Reduced fraction (num, den) with 0 <= num < den.
using Frac = std::pair<std::int64_t, std::int64_t>;

inline Frac reduce(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

// chi(x, y) for an arbitrary integer matrix M, through a common denominator.
inline Frac pairing(const Group& g, const std::vector<Vec>& M, std::size_t x, std::size_t y) {
  std::int64_t l = 1;
  for (auto o : g.orders) l = std::lcm(l, o);
  std::int64_t num = 0;
  for (std::size_t i = 0; i < g.orders.size(); ++i) {
    for (std::size_t j = 0; j < g.orders.size(); ++j) {
      const std::int64_t gij = std::gcd(g.orders[i], g.orders[j]);
      num += M[i][j] * g.elems[x][i] * g.elems[y][j] * (l / gij);
      num %= l;
    }
  }
  return reduce(num, l);
}

using Table = std::vector<Frac>;

inline Table table(const Group& g, const std::vector<Vec>& M) {
  Table t;
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) t.push_back(pairing(g, M, x, y));
  }
  return t;
}

// Nondegeneracy through orthogonality of the character rows.
inline bool rows_orthogonal(const Group& g, const Table& t) {
  const std::size_t n = g.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t x2 = x + 1; x2 < n; ++x2) {
      std::complex<double> s = 0.0;
      for (std::size_t y = 0; y < n; ++y) {
        const auto& [p, q] = t[x * n + y];
        const auto& [p2, q2] = t[x2 * n + y];
        s += std::polar(1.0, 2 * M_PI * (double(p) / double(q) - double(p2) / double(q2)));
      }
      if (std::abs(s) > 1e-9) return false;
    }
  }
  return true;
}

// All symmetric nondegenerate bicharacter tables, from every full matrix
// with entries below the group exponent.
inline std::set<Table> symmetric_nondegenerate_tables(const Group& g) {
  std::int64_t l = 1;
  for (auto o : g.orders) l = std::lcm(l, o);
  const std::size_t r = g.orders.size();
  std::set<Table> out;
  std::vector<std::int64_t> digits(r * r, 0);
  while (true) {
    std::vector<Vec> M(r, Vec(r));
    for (std::size_t k = 0; k < r * r; ++k) M[k / r][k % r] = digits[k];
    const Table t = table(g, M);
    const std::size_t n = g.size();
    bool sym = true;
    for (std::size_t x = 0; x < n && sym; ++x) {
      for (std::size_t y = 0; y < n && sym; ++y) sym = t[x * n + y] == t[y * n + x];
    }
    if (sym && rows_orthogonal(g, t)) out.insert(t);
    std::size_t k = 0;
    for (; k < r * r; ++k) {
      if (++digits[k] < l) break;
      digits[k] = 0;
    }
    if (k == r * r) break;
  }
  return out;
}

inline std::size_t orbit_count(const Group& g, const std::set<Table>& tables) {
  const auto autos = automorphisms(g);
  const std::size_t n = g.size();
  std::set<Table> seen;
  std::size_t orbits = 0;
  for (const auto& t : tables) {
    if (seen.count(t)) continue;
    ++orbits;
    for (const auto& p : autos) {
      Table pulled(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) pulled[x * n + y] = t[p[x] * n + p[y]];
      }
      seen.insert(pulled);
    }
  }
  return orbits;
}

}  // namespace oracle
