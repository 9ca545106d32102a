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
#include "tycat/phase.hpp"

using tycat::Phase;

TEST_CASE("phase normal form") {
  CHECK(Phase(2, 4) == Phase(1, 2));
  CHECK(Phase(-1, 4) == Phase(3, 4));
  CHECK(Phase(5, 4) == Phase(1, 4));
  CHECK(Phase(3, 3).is_zero());
  CHECK(Phase().to_string() == "0/1");
  CHECK_THROWS_AS(Phase(1, 0), tycat::Error);
}

TEST_CASE("phase arithmetic is addition mod 1") {
  CHECK(Phase(1, 2) + Phase(1, 2) == Phase());
  CHECK(Phase(1, 3) + Phase(1, 6) == Phase(1, 2));
  CHECK(Phase(1, 4) - Phase(1, 2) == Phase(3, 4));
  CHECK(-Phase(1, 3) == Phase(2, 3));
  CHECK(3 * Phase(1, 4) == Phase(3, 4));
  CHECK(-2 * Phase(1, 3) == Phase(1, 3));
}

TEST_CASE("phase complex values have unit modulus") {
  for (std::int64_t d = 1; d <= 24; ++d) {
    for (std::int64_t k = 0; k < d; ++k) CHECK(std::abs(std::abs(Phase(k, d).to_complex()) - 1.0) < 1e-15);
  }
  CHECK(std::abs(Phase(1, 4).to_complex() - std::complex<double>(0, 1)) < 1e-15);
  CHECK(std::abs(Phase(1, 2).to_complex() + 1.0) < 1e-15);
}

TEST_CASE("phase parsing") {
  CHECK(Phase::parse("3/4") == Phase(3, 4));
  CHECK(Phase::parse("-1/3") == Phase(2, 3));
  CHECK(Phase::parse("2") == Phase());
  CHECK(Phase::parse(Phase(5, 12).to_string()) == Phase(5, 12));
  for (const char* bad : {"", "1/", "/2", "a/b", "1/0", "1/2x", "1.5"}) {
    try {
      Phase::parse(bad);
      FAIL("accepted " << bad);
    } catch (const tycat::Error& e) {
      CHECK(e.kind() == tycat::ErrorKind::kParse);
    }
  }
}

TEST_CASE("phase denominator overflow is reported") {
  const Phase p(1, (std::int64_t{1} << 40) + 1);
  const Phase q(1, (std::int64_t{1} << 40) - 1);
  CHECK_THROWS_AS(p + q, tycat::Error);
}
