// Copyright 2026 The vaguescore Authors.
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

#ifndef VAGUESCORE_RATIONAL_H_
#define VAGUESCORE_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>

namespace vaguescore {

// Exact non-negative-denominator fraction in lowest terms. Sentence ratios
// are small counts over small counts, so 64-bit parts never overflow in
// practice; arithmetic that would overflow throws.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Fixed-point rendering rounded half away from zero, e.g. 1/3 -> "0.333333".
  std::string to_decimal(int fraction_digits = 6) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace vaguescore

#endif  // VAGUESCORE_RATIONAL_H_
