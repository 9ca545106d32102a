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

// Pentagon families shared by the exact (integer numerators over a common
// denominator) and floating point (turns) verifiers.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "tycat/pentagon.hpp"

namespace tycat::detail {

// Phase tables with values of type T. `a` may be empty, meaning zero.
template <class T>
struct PhaseTables {
  const std::vector<T>* a = nullptr;
  const std::vector<T>* a1 = nullptr;
  const std::vector<T>* a2 = nullptr;
  const std::vector<T>* a3 = nullptr;
  const std::vector<T>* b1 = nullptr;
  const std::vector<T>* b2 = nullptr;
  const std::vector<T>* b3 = nullptr;
};

// Residues modulo a common denominator.
struct ExactArith {
  using value_type = std::int64_t;
  std::int64_t modulus = 1;

  std::int64_t add(std::int64_t x, std::int64_t y) const {
    const std::int64_t s = x + y;  // both < 2^62
    return s >= modulus ? s - modulus : s;
  }
  std::int64_t sub(std::int64_t x, std::int64_t y) const { return x >= y ? x - y : x - y + modulus; }
  bool violated(std::int64_t d, double) const { return d != 0; }
  double deviation(std::int64_t d) const {
    return std::abs(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(d) / static_cast<double>(modulus)) -
                    1.0);
  }
};

// Turns as doubles.
struct FloatArith {
  using value_type = double;

  double add(double x, double y) const { return x + y; }
  double sub(double x, double y) const { return x - y; }
  double deviation(double d) const {
    const double r = d - std::round(d);
    return std::abs(std::polar(1.0, 2.0 * std::numbers::pi * r) - 1.0);
  }
  bool violated(double d, double tol) const {
    // |exp(2 pi i r) - 1| <= 2 pi |r|, so small residues skip the exact test.
    const double r = std::abs(d - std::round(d));
    return 2.0 * std::numbers::pi * r >= tol && deviation(d) >= tol;
  }
};

class FamilyAccumulator {
 public:
  FamilyAccumulator(const char* id, double tol) : tol_(tol) { r_.id = id; }

  template <class Arith>
  void check(const Arith& ar, typename Arith::value_type lhs, typename Arith::value_type rhs,
             std::initializer_list<std::size_t> tuple) {
    const auto d = ar.sub(lhs, rhs);
    if (!ar.violated(d, tol_)) return;
    if (r_.violations++ == 0) r_.sample.assign(tuple.begin(), tuple.end());
    r_.max_deviation = std::max(r_.max_deviation, ar.deviation(d));
  }

  // Operator families: one deviation per anchor.
  void anchor(double dev, std::size_t x) {
    r_.max_deviation = std::max(r_.max_deviation, dev);
    if (dev >= tol_ && r_.violations++ == 0) r_.sample = {x};
  }

  FamilyResult take() { return std::move(r_); }

 private:
  double tol_;
  FamilyResult r_;
};

template <class Arith>
std::vector<FamilyResult> scalar_families(const IndexGroup& g, const PhaseTables<typename Arith::value_type>& t,
                                          const Arith& ar, double tol) {
  using V = typename Arith::value_type;
  const std::size_t n = g.n;
  const bool has_a = t.a != nullptr && !t.a->empty();
  auto a = [&](std::size_t x, std::size_t y, std::size_t z) -> V { return has_a ? (*t.a)[(x * n + y) * n + z] : V{}; };
  auto at = [n](const std::vector<V>* tab, std::size_t x, std::size_t y) -> V { return (*tab)[x * n + y]; };
  auto a1 = [&](std::size_t x, std::size_t y) { return at(t.a1, x, y); };
  auto a2 = [&](std::size_t x, std::size_t y) { return at(t.a2, x, y); };
  auto a3 = [&](std::size_t x, std::size_t y) { return at(t.a3, x, y); };
  auto b1 = [&](std::size_t x, std::size_t y) { return at(t.b1, x, y); };
  auto b2 = [&](std::size_t x, std::size_t y) { return at(t.b2, x, y); };
  auto b3 = [&](std::size_t x, std::size_t y) { return at(t.b3, x, y); };
  auto sum = [&](auto... v) {
    V s{};
    ((s = ar.add(s, v)), ...);
    return s;
  };

  FamilyAccumulator p0("P0", tol), p4("P{4}", tol), p1("P{1}", tol), p2("P{2}", tol), p3("P{3}", tol),
      p34("P{3,4}", tol), p12("P{1,2}", tol), p24("P{2,4}", tol), p13("P{1,3}", tol), p23("P{2,3}", tol),
      p14("P{1,4}", tol);

  if (has_a) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t xy = g.add(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          const std::size_t yz = g.add(y, z);
          for (std::size_t w = 0; w < n; ++w) {
            p0.check(ar, sum(a(y, z, w), a(x, yz, w), a(x, y, z)), sum(a(x, y, g.add(z, w)), a(xy, z, w)),
                     {x, y, z, w});
          }
        }
      }
    }
  } else {
    // a == 0: both sides are sums of zeros; evaluate once so the family is
    // still computed through the same arithmetic.
    p0.check(ar, sum(V{}, V{}, V{}), sum(V{}, V{}), {0, 0, 0, 0});
  }

  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t xi = g.neg(x);
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = g.add(x, y);
      const std::size_t yi = g.neg(y);
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t yz = g.add(y, z);
        const std::size_t xiz = g.add(xi, z);
        p4.check(ar, sum(a3(y, z), a3(x, yz), a(x, y, z)), sum(a3(x, y), a3(xy, z)), {x, y, z});
        p1.check(ar, sum(a(x, y, z), a1(xy, z), a1(x, y)), sum(a1(x, yz), a1(y, z)), {x, y, z});
        p2.check(ar, sum(a2(x, z), a2(x, y)), a2(x, yz), {x, y, z});
        p3.check(ar, sum(a2(y, z), a2(x, z)), a2(xy, z), {x, y, z});
        p34.check(ar, sum(b1(y, xiz), b1(x, z), a3(x, y)), sum(a(x, y, g.add(yi, xiz)), b1(xy, z)), {x, y, z});
        p12.check(ar, sum(a1(x, y), b3(y, g.add(x, z)), b3(x, z)), sum(b3(xy, z), a(z, x, y)), {x, y, z});
        p24.check(ar, sum(b2(y, z), a2(x, y)), b2(y, g.add(x, z)), {x, y, z});
        p13.check(ar, sum(a2(x, y), b2(x, g.add(z, yi))), b2(x, z), {x, y, z});
        p23.check(ar, sum(b3(y, xiz), a(x, xiz, y), b1(x, z)), sum(b1(x, g.add(z, y)), b3(y, z)), {x, y, z});
        p14.check(ar, sum(a3(x, y), b2(xy, z), a1(x, y)), sum(b2(x, z), b2(y, z)), {x, y, z});
      }
    }
  }

  std::vector<FamilyResult> out;
  for (auto* f : {&p0, &p4, &p1, &p2, &p3, &p34, &p12, &p24, &p13, &p23, &p14}) out.push_back(f->take());
  return out;
}

// exp(2 pi i t) for every entry of a table.
template <class T, class ToTurns>
std::vector<std::complex<double>> unit_table(const std::vector<T>& tab, ToTurns turns) {
  std::vector<std::complex<double>> out(tab.size());
  for (std::size_t i = 0; i < tab.size(); ++i) out[i] = std::polar(1.0, 2.0 * std::numbers::pi * turns(tab[i]));
  return out;
}

struct UnitTables {
  std::vector<std::complex<double>> a1, a2, a3, b1, b2, b3;
};

std::vector<FamilyResult> gamma_families(const IndexGroup& g, const UnitTables& t, const Eigen::MatrixXcd& gamma,
                                         double tol);

}  // namespace tycat::detail
