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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace tycat {

/// A unit complex number exp(2*pi*i*q) carried exactly as a rational q mod 1.
///
/// The fraction is always reduced with 0 <= numerator < denominator, so two
/// phases are equal iff their (numerator, denominator) pairs are equal.
/// Addition is the group law of U(1); denominators combine through their lcm
/// and an Error(kSize) is thrown if that lcm would not fit in 62 bits.
class Phase {
 public:
  constexpr Phase() = default;
  Phase(std::int64_t numerator, std::int64_t denominator);

  static Phase zero() { return Phase(); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  std::complex<double> to_complex() const;
  double turns() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "num/den", e.g. "3/4"; zero prints as "0/1".
  std::string to_string() const;
  /// Accepts "num/den" or a bare integer; throws Error(kParse).
  static Phase parse(std::string_view text);

  Phase operator-() const;
  Phase& operator+=(const Phase& other);
  Phase& operator-=(const Phase& other) { return *this += -other; }
  friend Phase operator+(Phase lhs, const Phase& rhs) { return lhs += rhs; }
  friend Phase operator-(Phase lhs, const Phase& rhs) { return lhs -= rhs; }
  /// Integer multiple k*q mod 1.
  friend Phase operator*(std::int64_t k, const Phase& p);

  friend bool operator==(const Phase&, const Phase&) = default;
  friend auto operator<=>(const Phase&, const Phase&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace tycat
