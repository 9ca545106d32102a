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

#include "tycat/phase.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "tycat/error.hpp"

namespace tycat {

namespace {

constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 62;

std::int64_t floor_mod(__int128 value, std::int64_t modulus) {
  __int128 r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::int64_t>(r);
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInput: return "input error";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kInvariant: return "invariant error";
    case ErrorKind::kSize: return "size error";
    case ErrorKind::kPrecondition: return "precondition error";
    case ErrorKind::kInconsistency: return "inconsistency error";
  }
  return "error";
}

Phase::Phase(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) fail(ErrorKind::kInput, "phase denominator must be positive");
  std::int64_t n = floor_mod(numerator, denominator);
  std::int64_t g = std::gcd(n, denominator);
  num_ = n / g;
  den_ = denominator / g;
}

std::complex<double> Phase::to_complex() const {
  if (num_ == 0) return {1.0, 0.0};
  // Reduce to the angle in (-pi, pi] before evaluating for symmetric rounding.
  std::int64_t n = num_;
  if (2 * n > den_) n -= den_;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(den_);
  return std::polar(1.0, angle);
}

std::string Phase::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Phase Phase::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      fail(ErrorKind::kParse, "invalid phase '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Phase(parse_int(text), 1);
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) fail(ErrorKind::kParse, "invalid phase denominator in '" + std::string(text) + "'");
  return Phase(parse_int(text.substr(0, slash)), den);
}

Phase Phase::operator-() const {
  Phase p;
  p.num_ = num_ == 0 ? 0 : den_ - num_;
  p.den_ = den_;
  return p;
}

Phase& Phase::operator+=(const Phase& other) {
  if (other.num_ == 0) return *this;
  if (den_ == other.den_) {
    *this = Phase(num_ + other.num_, den_);
    return *this;
  }
  const std::int64_t g = std::gcd(den_, other.den_);
  const __int128 l = static_cast<__int128>(den_ / g) * other.den_;
  if (l >= kMaxDenominator) fail(ErrorKind::kSize, "phase denominator overflow");
  const auto lcm = static_cast<std::int64_t>(l);
  const __int128 n = static_cast<__int128>(num_) * (lcm / den_) +
                     static_cast<__int128>(other.num_) * (lcm / other.den_);
  *this = Phase(floor_mod(n, lcm), lcm);
  return *this;
}

Phase operator*(std::int64_t k, const Phase& p) {
  return Phase(floor_mod(static_cast<__int128>(k) * p.num_, p.den_), p.den_);
}

}  // namespace tycat
