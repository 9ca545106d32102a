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

#include "tycat/error.hpp"
#include "tycat/normalize.hpp"
#include "tycat/pentagon.hpp"

using namespace tycat;

namespace {

TYData standard(std::vector<std::int64_t> orders, std::vector<std::vector<std::int64_t>> M, int s) {
  GroupSpec spec(std::move(orders));
  return construct_standard(spec, Bicharacter{spec, std::move(M)}, sign_from_int(s));
}

bool all_zero(const std::vector<Phase>& t) {
  return std::all_of(t.begin(), t.end(), [](const Phase& p) { return p.is_zero(); });
}

// Gauge with only one component set.
GaugeTransform only_omega(const GroupSpec& spec, std::uint64_t seed) {
  auto g = random_gauge(spec, seed);
  const auto id = GaugeTransform::identity(spec);
  g.theta = id.theta;
  g.phi = id.phi;
  g.psi = id.psi;
  return g;
}

GaugeTransform only_psi(const GroupSpec& spec, std::uint64_t seed) {
  auto g = GaugeTransform::identity(spec);
  g.psi = random_gauge(spec, seed).psi;
  return g;
}

}  // namespace

TEST_CASE("gauge basics") {
  const auto d = standard({3}, {{1}}, 1);
  CHECK(apply_gauge(d, GaugeTransform::identity(d.spec)) == d);
  const auto g = random_gauge(d.spec, 3);
  CHECK(g.unit_normalized());
  CHECK(random_gauge(d.spec, 3) == g);
  const auto gd = apply_gauge(d, g);
  CHECK(gd.a2 == d.a2);
  CHECK(verify_all(gd).pass);

  auto bad = g;
  bad.phi[0] = Phase(1, 2);
  try {
    apply_gauge(d, bad);
    FAIL("non-normalized gauge accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvariant);
  }
  auto bad_theta = g;
  bad_theta.theta[1] = Phase(1, 2);
  CHECK_FALSE(bad_theta.unit_normalized());
  // omega is unconstrained.
  auto free_omega = g;
  free_omega.omega[0] = Phase(1, 5);
  CHECK(free_omega.unit_normalized());
}

TEST_CASE("gauges compose by addition") {
  for (auto orders : std::vector<std::vector<std::int64_t>>{{2}, {4}, {2, 2}}) {
    const GroupSpec spec(orders);
    const auto d = construct_standard(spec, enumerate_symmetric_nondegenerate(spec)[0], Sign::kMinus);
    const auto g = random_gauge(spec, 11), h = random_gauge(spec, 12);
    const auto two_steps = apply_gauge(apply_gauge(d, g), h);
    const auto one_step = apply_gauge(d, compose(g, h));
    for (const char* name : kPhaseTableNames) CHECK(phase_table(two_steps, name) == phase_table(one_step, name));
    CHECK((two_steps.gamma - one_step.gamma).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("gauged data stays coherent") {
  for (auto orders : std::vector<std::vector<std::int64_t>>{{}, {2}, {3}, {5}, {2, 2}, {2, 4}}) {
    const GroupSpec spec(orders);
    for (const auto& chi : enumerate_symmetric_nondegenerate(spec)) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto d = apply_gauge(construct_standard(spec, chi, Sign::kPlus), random_gauge(spec, seed));
        CHECK(verify_all(d).pass);
      }
    }
  }
}

TEST_CASE("step 1") {
  const auto d = standard({3}, {{1}}, 1);
  const auto s = step1_trivialize_a(d);
  CHECK(s.data == d);
  CHECK(s.gauge == GaugeTransform::identity(d.spec));

  auto g = GaugeTransform::identity(d.spec);
  g.theta = random_gauge(d.spec, 2).theta;
  g.psi = random_gauge(d.spec, 3).psi;
  const auto gd = apply_gauge(d, g);
  CHECK_FALSE(all_zero(gd.a));
  const auto s1 = step1_trivialize_a(gd);
  CHECK(all_zero(s1.data.a));
  CHECK(all_zero(s1.data.a3));

  auto broken = d;
  broken.b2[4] += Phase(1, 3);
  try {
    step1_trivialize_a(broken);
    FAIL("invalid data accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPrecondition);
  }
}

TEST_CASE("step 2") {
  const auto d = standard({4}, {{1}}, 1);
  const auto s = step2_shift_b1(d);
  CHECK(s.data == d);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = only_omega(d.spec, seed);
    const auto gd = apply_gauge(d, g);
    const auto s2 = step2_shift_b1(step1_trivialize_a(gd).data);
    CHECK(all_zero(s2.data.b1));
    // The recovered omega undoes the applied one up to a constant.
    const Phase c = s2.gauge.omega[0] + g.omega[0];
    for (std::size_t x = 0; x < g.omega.size(); ++x) CHECK(s2.gauge.omega[x] + g.omega[x] == c);
  }
  auto bad = d;
  bad.b1[1 * 4 + 2] = Phase(1, 2);
  try {
    step2_shift_b1(bad);
    FAIL("inconsistent b1 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInconsistency);
  }
}

TEST_CASE("step 3") {
  const auto d = standard({5}, {{2}}, -1);
  CHECK(step3_symmetrize(d).data == d);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto gd = apply_gauge(d, compose(random_gauge(d.spec, seed), only_psi(d.spec, seed + 100)));
    const auto s3 = step3_symmetrize(step2_shift_b1(step1_trivialize_a(gd).data).data);
    const std::size_t n = 5;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) CHECK(s3.data.b2[x * n + y] == s3.data.a2[y * n + x]);
    }
    CHECK(all_zero(s3.data.b3));
    CHECK(all_zero(s3.data.a1));
    CHECK(verify_all(s3.data).pass);
  }
}

TEST_CASE("extraction") {
  const auto r = extract_invariants(standard({2}, {{1}}, 1));
  CHECK(r.sign == Sign::kPlus);
  CHECK(r.residual < 1e-12);
  REQUIRE(r.bicharacter.has_value());
  CHECK(r.bicharacter->M == std::vector<std::vector<std::int64_t>>{{1}});
  const auto r3 = extract_invariants(standard({3}, {{2}}, -1));
  CHECK(r3.sign == Sign::kMinus);
  CHECK(r3.bicharacter->M[0][0] == 2);

  auto bad = standard({3}, {{2}}, -1);
  bad.gamma *= std::complex<double>(0, 1);
  CHECK_THROWS_AS(extract_invariants(bad), Error);
  auto bad2 = standard({3}, {{2}}, -1);
  bad2.gamma(1, 2) = -bad2.gamma(1, 2);
  CHECK_THROWS_AS(extract_invariants(bad2), Error);
}

TEST_CASE("normalize recovers the invariants of gauged data") {
  for (auto orders : std::vector<std::vector<std::int64_t>>{{}, {2}, {3}, {4}, {5}, {2, 2}, {6}, {2, 4}}) {
    const GroupSpec spec(orders);
    for (const auto& chi : enumerate_symmetric_nondegenerate(spec)) {
      for (Sign s : {Sign::kPlus, Sign::kMinus}) {
        const auto d = construct_standard(spec, chi, s);
        const auto base = normalize(d);
        CHECK(base.chi == d.a2);
        CHECK(base.sign == s);
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          const auto gd = apply_gauge(d, random_gauge(spec, seed));
          const auto r = normalize(gd);
          CHECK(r.chi == base.chi);
          CHECK(r.sign == base.sign);
          CHECK(r.residual < 1e-10);
          // Replaying the composite gauge lands on the normal form.
          const auto nf = apply_gauge(gd, r.gauge);
          CHECK(all_zero(nf.a));
          CHECK(all_zero(nf.a1));
          CHECK(all_zero(nf.a3));
          CHECK(all_zero(nf.b1));
          CHECK(all_zero(nf.b3));
          CHECK(nf.a2 == d.a2);
          CHECK(nf.b2 == d.b2);
          CHECK(heisenberg_commutant_dim(spec, r.chi) == 1);
        }
      }
    }
  }
}

TEST_CASE("normalize rejects invalid data") {
  auto d = standard({3}, {{1}}, 1);
  d.a[5] = Phase(1, 3);
  CHECK_THROWS_AS(normalize(d), Error);
}

TEST_CASE("Heisenberg commutant") {
  CHECK(heisenberg_commutant_dim(GroupSpec({2}), Bicharacter{GroupSpec({2}), {{1}}}) == 1);
  CHECK(heisenberg_commutant_dim(GroupSpec({2}), Bicharacter{GroupSpec({2}), {{0}}}) == 2);
  CHECK(heisenberg_commutant_dim(GroupSpec({3}), Bicharacter{GroupSpec({3}), {{1}}}) == 1);
  // With chi trivial only translations remain, whose commutant is the group
  // algebra: dimension |G|.
  CHECK(heisenberg_commutant_dim(GroupSpec({4}), Bicharacter{GroupSpec({4}), {{0}}}) == 4);
  CHECK(heisenberg_commutant_dim(GroupSpec({4}), Bicharacter{GroupSpec({4}), {{2}}}) == 2);
  CHECK_THROWS_AS(heisenberg_commutant_dim(GroupSpec({32}), Bicharacter{GroupSpec({32}), {{1}}}), Error);
}

TEST_CASE("equivalence") {
  const GroupSpec z5({5});
  const auto r1 = normalize(construct_standard(z5, Bicharacter{z5, {{1}}}, Sign::kPlus));
  const auto r4 = normalize(construct_standard(z5, Bicharacter{z5, {{4}}}, Sign::kPlus));
  const auto r2 = normalize(construct_standard(z5, Bicharacter{z5, {{2}}}, Sign::kPlus));
  const auto r1m = normalize(construct_standard(z5, Bicharacter{z5, {{1}}}, Sign::kMinus));
  CHECK(equivalent(z5, r1, r1));
  CHECK(equivalent(z5, r1, r4));
  CHECK_FALSE(equivalent(z5, r1, r2));
  CHECK_FALSE(equivalent(z5, r1, r1m));
  CHECK_THROWS_AS(equivalent(GroupSpec({3}), r1, r4), Error);
}

TEST_CASE("classification counts") {
  CHECK(classify_all(GroupSpec({2})).size() == 2);
  CHECK(classify_all(GroupSpec({3})).size() == 4);
  CHECK(classify_all(GroupSpec({4})).size() == 4);
  CHECK(classify_all(GroupSpec({5})).size() == 4);
  CHECK(classify_all(GroupSpec()).size() == 2);
}

TEST_CASE("gauge and result json") {
  const GroupSpec spec({2, 2});
  const auto g = random_gauge(spec, 9);
  CHECK(gauge_from_json(to_json(g)) == g);
  CHECK_THROWS_AS(gauge_from_json("{\"orders\":[2]}"), Error);
  const auto r = normalize(apply_gauge(construct_standard(spec, enumerate_symmetric_nondegenerate(spec)[1], Sign::kMinus), g));
  const auto text = to_json(r);
  CHECK(text.find("\"sign\": -1") != std::string::npos);
  CHECK(text.find("\"gauge\"") != std::string::npos);
}
