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

#include "tycat/pentagon.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "families.hpp"
#include "tycat/error.hpp"

namespace tycat {

const FamilyResult* PentagonReport::find(const std::string& id) const {
  for (const auto& f : families) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

void PentagonReport::append(const PentagonReport& other) {
  families.insert(families.end(), other.families.begin(), other.families.end());
  pass = pass && other.pass;
}

IndexGroup IndexGroup::from(const GroupTable& g) {
  IndexGroup out;
  out.n = g.size();
  out.identity = GroupTable::identity();
  out.add_table.resize(out.n * out.n);
  out.neg_table.resize(out.n);
  for (std::size_t x = 0; x < out.n; ++x) {
    out.neg_table[x] = static_cast<std::uint32_t>(g.neg(x));
    for (std::size_t y = 0; y < out.n; ++y) out.add_table[x * out.n + y] = static_cast<std::uint32_t>(g.add(x, y));
  }
  return out;
}

namespace {

PentagonReport make_report(std::vector<FamilyResult> families, double tol) {
  PentagonReport r;
  r.tolerance = tol;
  r.families = std::move(families);
  r.pass = std::all_of(r.families.begin(), r.families.end(), [](const FamilyResult& f) { return f.violations == 0; });
  return r;
}

std::int64_t common_denominator(const TYData& d) {
  std::int64_t l = 1;
  for (const char* name : kPhaseTableNames) {
    for (const auto& p : phase_table(d, name)) {
      const std::int64_t g = std::gcd(l, p.denominator());
      const __int128 next = static_cast<__int128>(l / g) * p.denominator();
      if (next >= (static_cast<__int128>(1) << 62)) fail(ErrorKind::kSize, "common phase denominator too large");
      l = static_cast<std::int64_t>(next);
    }
  }
  return l;
}

std::vector<std::int64_t> numerators(const std::vector<Phase>& t, std::int64_t l) {
  std::vector<std::int64_t> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i].numerator() * (l / t[i].denominator());
  return out;
}

std::vector<double> turns(const std::vector<Phase>& t) {
  std::vector<double> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i].turns();
  return out;
}

template <class T>
detail::PhaseTables<T> view(const std::vector<T>& a, const std::vector<T>& a1, const std::vector<T>& a2,
                            const std::vector<T>& a3, const std::vector<T>& b1, const std::vector<T>& b2,
                            const std::vector<T>& b3) {
  return {&a, &a1, &a2, &a3, &b1, &b2, &b3};
}

}  // namespace

namespace detail {

std::vector<FamilyResult> gamma_families(const IndexGroup& g, const UnitTables& t, const Eigen::MatrixXcd& gamma,
                                         double tol) {
  const std::size_t n = g.n;
  const auto N = static_cast<Eigen::Index>(n);
  auto ix = [](std::size_t i) { return static_cast<Eigen::Index>(i); };
  auto at = [n](const std::vector<std::complex<double>>& tab, std::size_t x, std::size_t y) { return tab[x * n + y]; };

  FamilyAccumulator m1("Mixed-1", tol), m2("Mixed-2", tol), m3("Mixed-3", tol), m4("Mixed-4", tol),
      fin("Final", tol);
  Eigen::MatrixXcd diff(N, N);

  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t xi = g.neg(x);
    // Mixed-1: gamma . S_x = M[a2(x, .)] . gamma with (S_x f)(y) = a3(x,y) b1(x,yx) f(yx).
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t yx = g.add(y, x);
        diff(ix(u), ix(yx)) = gamma(ix(u), ix(y)) * at(t.a3, x, y) * at(t.b1, x, yx) -
                              at(t.a2, x, u) * gamma(ix(u), ix(yx));
      }
    }
    m1.anchor(diff.norm(), x);

    // Mixed-2: b1(x,yx) gamma(b2(x,.) f)(yx) = a1(x,y) gamma(f)(y).
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t yx = g.add(y, x);
      for (std::size_t v = 0; v < n; ++v) {
        diff(ix(y), ix(v)) = at(t.b1, x, yx) * gamma(ix(yx), ix(v)) * at(t.b2, x, v) -
                             at(t.a1, x, y) * gamma(ix(y), ix(v));
      }
    }
    m2.anchor(diff.norm(), x);

    // Mixed-3: b2(x,y) gamma(b3(x, .x^-1) f(.x^-1))(y) = gamma(a3(.,x) f)(y).
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t u = 0; u < n; ++u) {
        const std::size_t w = g.add(u, xi);
        diff(ix(y), ix(w)) = at(t.b2, x, y) * gamma(ix(y), ix(u)) * at(t.b3, x, w) -
                             gamma(ix(y), ix(w)) * at(t.a3, w, x);
      }
    }
    m3.anchor(diff.norm(), x);

    // Mixed-4: b3(x,yx^-1) a1(yx^-1,x) gamma(f)(yx^-1) = gamma(a2(.,x) f)(y).
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t yy = g.add(y, xi);
      for (std::size_t v = 0; v < n; ++v) {
        diff(ix(y), ix(v)) = at(t.b3, x, yy) * at(t.a1, yy, x) * gamma(ix(yy), ix(v)) -
                             gamma(ix(y), ix(v)) * at(t.a2, v, x);
      }
    }
    m4.anchor(diff.norm(), x);
  }

  // Final, one block per regular coordinate y:
  // gamma . M[b2(., y)] . gamma = R_y with R_y[x][x^-1 y] = b3(x, x^-1 y) b1(x^-1 y, y).
  Eigen::VectorXcd col(N);
  Eigen::MatrixXcd scaled(N, N);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) col(ix(x)) = at(t.b2, x, y);
    scaled.noalias() = gamma * col.asDiagonal();
    diff.noalias() = scaled * gamma;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t u = g.add(g.neg(x), y);
      diff(ix(x), ix(u)) -= at(t.b3, x, u) * at(t.b1, u, y);
    }
    fin.anchor(diff.norm(), y);
  }

  return {m1.take(), m2.take(), m3.take(), m4.take(), fin.take()};
}

}  // namespace detail

PentagonReport verify_scalar(const TYData& data, ScalarMode mode, double tolerance) {
  validate_shapes(data);
  const IndexGroup g = IndexGroup::from(GroupTable(data.spec));
  if (mode == ScalarMode::kExact) {
    const detail::ExactArith ar{common_denominator(data)};
    const auto l = ar.modulus;
    const auto a = numerators(data.a, l), a1 = numerators(data.a1, l), a2 = numerators(data.a2, l),
               a3 = numerators(data.a3, l), b1 = numerators(data.b1, l), b2 = numerators(data.b2, l),
               b3 = numerators(data.b3, l);
    return make_report(detail::scalar_families(g, view(a, a1, a2, a3, b1, b2, b3), ar, tolerance), tolerance);
  }
  const auto a = turns(data.a), a1 = turns(data.a1), a2 = turns(data.a2), a3 = turns(data.a3),
             b1 = turns(data.b1), b2 = turns(data.b2), b3 = turns(data.b3);
  return make_report(detail::scalar_families(g, view(a, a1, a2, a3, b1, b2, b3), detail::FloatArith{}, tolerance),
                     tolerance);
}

PentagonReport verify_gamma(const TYData& data, double tolerance) {
  validate_shapes(data);
  const IndexGroup g = IndexGroup::from(GroupTable(data.spec));
  auto tt = [](const Phase& p) { return p.turns(); };
  const detail::UnitTables t{detail::unit_table(data.a1, tt), detail::unit_table(data.a2, tt),
                             detail::unit_table(data.a3, tt), detail::unit_table(data.b1, tt),
                             detail::unit_table(data.b2, tt), detail::unit_table(data.b3, tt)};
  return make_report(detail::gamma_families(g, t, data.gamma, tolerance), tolerance);
}

PentagonReport verify_units(const TYData& data) {
  validate_shapes(data);
  const std::size_t n = data.n();
  FamilyResult r{"unit", 0, 0.0, {}};
  auto check = [&](const Phase& p, std::size_t table, std::size_t index) {
    if (p.is_zero()) return;
    if (r.violations++ == 0) r.sample = {table, index};
    r.max_deviation = std::max(r.max_deviation, std::abs(p.to_complex() - 1.0));
  };
  // e has index 0 in every table.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      check(data.a[(0 * n + x) * n + y], 0, (0 * n + x) * n + y);
      check(data.a[(x * n + 0) * n + y], 0, (x * n + 0) * n + y);
      check(data.a[(x * n + y) * n + 0], 0, (x * n + y) * n + 0);
    }
  }
  const std::vector<Phase>* two[] = {&data.a1, &data.a2, &data.a3};
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      check((*two[k])[0 * n + x], k + 1, 0 * n + x);
      check((*two[k])[x * n + 0], k + 1, x * n + 0);
    }
  }
  // b-tables only have an invertible object in their first slot.
  const std::vector<Phase>* bs[] = {&data.b1, &data.b2, &data.b3};
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t w = 0; w < n; ++w) check((*bs[k])[0 * n + w], k + 4, w);
  }
  return make_report({r}, 0.0);
}

PentagonReport verify_all(const TYData& data, double tolerance) {
  PentagonReport r = verify_units(data);
  r.tolerance = tolerance;
  r.append(verify_scalar(data, ScalarMode::kExact, tolerance));
  r.append(verify_gamma(data, tolerance));
  r.append(verify_by_composition(data, tolerance));
  return r;
}

TYData mutate(const TYData& data, std::uint64_t seed, int count) {
  if (count < 1) fail(ErrorKind::kInput, "mutation count must be at least 1");
  validate_shapes(data);
  TYData out = data;
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the stream identical across standard libraries.
  auto below = [&rng](std::uint64_t m) { return rng() % m; };
  const std::size_t n = out.n();
  for (int i = 0; i < count; ++i) {
    const auto table = below(8);
    const auto k = static_cast<std::int64_t>(1 + below(7));
    if (table == 7) {
      const auto r = static_cast<Eigen::Index>(below(n));
      const auto c = static_cast<Eigen::Index>(below(n));
      out.gamma(r, c) *= Phase(k, 8).to_complex();
    } else {
      auto& t = phase_table(out, kPhaseTableNames[table]);
      t[below(t.size())] += Phase(k, 8);
    }
  }
  return out;
}

PentagonReport verify_float_tables(const FloatAssociators& t, double tolerance) {
  const IndexGroup& g = t.group;
  const std::size_t n = g.n;
  if (!t.a_trivial && t.a.size() != n * n * n) fail(ErrorKind::kInput, "table a has the wrong size");
  for (const auto* tab : {&t.a1, &t.a2, &t.a3, &t.b1, &t.b2, &t.b3}) {
    if (tab->size() != n * n) fail(ErrorKind::kInput, "associator table has the wrong size");
  }
  if (static_cast<std::size_t>(t.gamma.rows()) != n || static_cast<std::size_t>(t.gamma.cols()) != n) {
    fail(ErrorKind::kInput, "gamma has the wrong size");
  }
  static const std::vector<double> kEmpty;
  const detail::PhaseTables<double> v{t.a_trivial ? &kEmpty : &t.a, &t.a1, &t.a2, &t.a3, &t.b1, &t.b2, &t.b3};
  auto families = detail::scalar_families(g, v, detail::FloatArith{}, tolerance);
  auto id = [](double x) { return x; };
  const detail::UnitTables u{detail::unit_table(t.a1, id), detail::unit_table(t.a2, id),
                             detail::unit_table(t.a3, id), detail::unit_table(t.b1, id),
                             detail::unit_table(t.b2, id), detail::unit_table(t.b3, id)};
  auto gf = detail::gamma_families(g, u, t.gamma, tolerance);
  families.insert(families.end(), gf.begin(), gf.end());
  return make_report(std::move(families), tolerance);
}

}  // namespace tycat
