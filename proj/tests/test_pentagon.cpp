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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tycat/error.hpp"
#include "tycat/pentagon.hpp"
#include "tycat/ty_data.hpp"

using namespace tycat;

namespace {

TYData standard(std::vector<std::int64_t> orders, std::vector<std::vector<std::int64_t>> M, int s) {
  GroupSpec spec(std::move(orders));
  return construct_standard(spec, Bicharacter{spec, std::move(M)}, sign_from_int(s));
}

bool scalar_and_gamma(const TYData& d) {
  return verify_scalar(d).pass && verify_gamma(d).pass;
}

std::size_t diff_count(const TYData& x, const TYData& y) {
  std::size_t c = 0;
  for (const char* name : kPhaseTableNames) {
    const auto& a = phase_table(x, name);
    const auto& b = phase_table(y, name);
    for (std::size_t i = 0; i < a.size(); ++i) c += a[i] != b[i];
  }
  for (Eigen::Index i = 0; i < x.gamma.size(); ++i) c += x.gamma.data()[i] != y.gamma.data()[i];
  return c;
}

}  // namespace

TEST_CASE("standard data passes every check") {
  const std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::vector<std::int64_t>>>> cases = {
      {{}, {}}, {{2}, {{1}}}, {{3}, {{1}}}, {{4}, {{3}}}, {{2, 2}, {{1, 1}, {1, 0}}}, {{2, 4}, {{1, 0}, {0, 1}}}};
  for (const auto& [orders, M] : cases) {
    for (int s : {1, -1}) {
      const auto d = standard(orders, M, s);
      const auto r = verify_all(d);
      CHECK(r.pass);
      for (const auto& f : r.families) {
        CHECK_MESSAGE(f.violations == 0, f.id);
        if (f.id.rfind("P", 0) == 0) CHECK(f.max_deviation == 0.0);
      }
      CHECK(verify_scalar(d, ScalarMode::kFloat).pass);
    }
  }
  const auto ising = verify_gamma(standard({2}, {{1}}, 1));
  for (const auto& f : ising.families) CHECK(f.max_deviation < 1e-12);
  CHECK(verify_gamma(standard({3}, {{1}}, -1)).pass);
}

TEST_CASE("report has every family") {
  const auto r = verify_all(standard({2}, {{1}}, 1));
  for (const char* id : {"unit", "P0", "P{4}", "P{1}", "P{2}", "P{3}", "P{3,4}", "P{1,2}", "P{2,4}", "P{1,3}",
                         "P{2,3}", "P{1,4}", "Mixed-1", "Mixed-2", "Mixed-3", "Mixed-4", "Final", "oracle:xxxx",
                         "oracle:tttt", "oracle:xtxt"}) {
    CHECK_MESSAGE(r.find(id) != nullptr, id);
  }
  CHECK(r.families.size() == 1 + 11 + 5 + 16);
}

TEST_CASE("flipping b2 breaks P{2,4}") {
  auto d = standard({2}, {{1}}, 1);
  d.b2[1 * 2 + 1] = Phase();
  const auto r = verify_scalar(d);
  CHECK_FALSE(r.pass);
  REQUIRE(r.find("P{2,4}") != nullptr);
  CHECK(r.find("P{2,4}")->violations > 0);
  CHECK_FALSE(r.find("P{2,4}")->sample.empty());
  CHECK_FALSE(verify_by_composition(d).pass);
}

TEST_CASE("flipping the sign of one gamma entry") {
  for (auto orders : std::vector<std::vector<std::int64_t>>{{2}, {3}, {4}, {5}, {2, 2}, {6}}) {
    const GroupSpec spec(orders);
    for (const auto& chi : enumerate_symmetric_nondegenerate(spec)) {
      for (int s : {1, -1}) {
        const auto base = construct_standard(spec, chi, sign_from_int(s));
        const auto n = base.gamma.rows();
        const double bound = 2.0 / std::sqrt(static_cast<double>(n));
        for (Eigen::Index i = 0; i < n; ++i) {
          for (Eigen::Index j = 0; j < n; ++j) {
            auto d = base;
            d.gamma(i, j) = -d.gamma(i, j);
            const auto r = verify_gamma(d);
            CHECK(r.find("Final")->max_deviation >= bound - 1e-9);
            CHECK_FALSE(verify_by_composition(d).pass);
          }
        }
      }
    }
  }
}

TEST_CASE("trivial group") {
  for (int s : {1, -1}) CHECK(verify_all(standard({}, {}, s)).pass);
}

TEST_CASE("P0 holds exactly for 3-cocycles") {
  std::mt19937_64 rng(7);
  for (auto orders : std::vector<std::vector<std::int64_t>>{{2}, {3}, {4}, {2, 2}, {6}}) {
    const oracle::Group g(orders);
    const std::size_t n = g.size();
    auto blank = [&] {
      TYData d;
      d.spec = GroupSpec(orders);
      d.a.assign(n * n * n, Phase());
      for (auto* t : {&d.a1, &d.a2, &d.a3, &d.b1, &d.b2, &d.b3}) t->assign(n * n, Phase());
      d.gamma = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      return d;
    };
    auto is_cocycle = [&](const std::vector<Phase>& a) {
      auto A = [&](std::size_t x, std::size_t y, std::size_t z) { return a[(x * n + y) * n + z]; };
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            for (std::size_t w = 0; w < n; ++w) {
              const Phase delta = A(y, z, w) - A(g.add(x, y), z, w) + A(x, g.add(y, z), w) - A(x, y, g.add(z, w)) +
                                  A(x, y, z);
              if (!delta.is_zero()) return false;
            }
          }
        }
      }
      return true;
    };
    auto p0_passes = [&](const TYData& d) { return verify_scalar(d).find("P0")->violations == 0; };

    for (int trial = 0; trial < 20; ++trial) {
      // Random table: almost never a cocycle.
      auto d = blank();
      for (auto& p : d.a) p = Phase(static_cast<std::int64_t>(rng() % 6), 6);
      CHECK(p0_passes(d) == is_cocycle(d.a));

      // Coboundary of a random 2-cochain: always a cocycle.
      auto c = blank();
      std::vector<Phase> theta(n * n);
      for (auto& p : theta) p = Phase(static_cast<std::int64_t>(rng() % 12), 12);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            c.a[(x * n + y) * n + z] =
                theta[y * n + z] - theta[g.add(x, y) * n + z] + theta[x * n + g.add(y, z)] - theta[x * n + y];
          }
        }
      }
      CHECK(is_cocycle(c.a));
      CHECK(p0_passes(c));

      // One perturbed entry of a cocycle.
      c.a[rng() % c.a.size()] += Phase(1, 4);
      CHECK(p0_passes(c) == is_cocycle(c.a));
    }

    if (orders.size() == 1) {
      // The generating cocycle of Z/m: k x (y + z - [y + z]) / m^2.
      const std::int64_t m = orders[0];
      for (std::int64_t k = 0; k < m; ++k) {
        auto d = blank();
        for (std::int64_t x = 0; x < m; ++x) {
          for (std::int64_t y = 0; y < m; ++y) {
            for (std::int64_t z = 0; z < m; ++z) {
              d.a[static_cast<std::size_t>((x * m + y) * m + z)] = Phase(k * x * (y + z - (y + z) % m), m * m);
            }
          }
        }
        CHECK(is_cocycle(d.a));
        CHECK(p0_passes(d));
      }
    }
  }
}

TEST_CASE("composition oracle agrees with the family verdicts under mutation") {
  const std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::vector<std::int64_t>>>> cases = {
      {{}, {}}, {{2}, {{1}}}, {{3}, {{1}}}, {{4}, {{1}}}, {{2, 2}, {{0, 1}, {1, 0}}}};
  for (const auto& [orders, M] : cases) {
    for (int s : {1, -1}) {
      const auto d = standard(orders, M, s);
      int rejected = 0;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto m = mutate(d, seed, 1);
        const bool families = scalar_and_gamma(m);
        CHECK(families == verify_by_composition(m).pass);
        rejected += !verify_all(m).pass;
      }
      CHECK(rejected >= 95);
    }
  }
}

TEST_CASE("mutation") {
  const auto d = standard({2}, {{1}}, 1);
  const auto m = mutate(d, 42, 1);
  CHECK(diff_count(d, m) == 1);
  CHECK(mutate(d, 42, 1) == m);
  CHECK_FALSE(mutate(d, 43, 1) == m);
  CHECK(diff_count(d, mutate(d, 5, 3)) <= 3);
  try {
    mutate(d, 1, 0);
    FAIL("count 0 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInput);
  }
}

TEST_CASE("unit checks") {
  auto d = standard({3}, {{1}}, 1);
  CHECK(verify_units(d).pass);
  d.a2[0 * 3 + 2] = Phase(1, 3);
  CHECK_FALSE(verify_units(d).pass);
  auto d2 = standard({3}, {{1}}, 1);
  d2.b1[0 * 3 + 1] = Phase(1, 2);
  CHECK_FALSE(verify_units(d2).pass);
  // b-tables have no unit constraint in their second slot.
  auto d3 = standard({3}, {{1}}, 1);
  d3.b2[1 * 3 + 0] = Phase(1, 3);
  CHECK(verify_units(d3).pass);
}

TEST_CASE("report json round trip") {
  auto d = standard({2}, {{1}}, 1);
  d.b2[3] = Phase();
  const auto r = verify_all(d);
  const auto back = report_from_json(to_json(r));
  CHECK(back.pass == r.pass);
  REQUIRE(back.families.size() == r.families.size());
  for (std::size_t i = 0; i < r.families.size(); ++i) {
    CHECK(back.families[i].id == r.families[i].id);
    CHECK(back.families[i].violations == r.families[i].violations);
    CHECK(back.families[i].max_deviation == r.families[i].max_deviation);
    CHECK(back.families[i].sample == r.families[i].sample);
  }
  CHECK(to_json(back) == to_json(r));
}
