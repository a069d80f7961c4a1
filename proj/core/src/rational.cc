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

#include "vaguescore/rational.h"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace vaguescore {

namespace {

__extension__ typedef __int128 Wide;

Rational from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || -num > kMax || den > kMax) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return Rational(static_cast<std::int64_t>(num),
                  static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::to_decimal(int fraction_digits) const {
  Wide scale = 1;
  for (int i = 0; i < fraction_digits; ++i) scale *= 10;
  const bool negative = num_ < 0;
  const Wide abs_num = negative ? -static_cast<Wide>(num_) : num_;
  // Round half away from zero on the scaled magnitude.
  const Wide scaled = (abs_num * scale * 2 + den_) / (static_cast<Wide>(den_) * 2);
  const Wide whole = scaled / scale;
  Wide frac = scaled % scale;

  std::string digits;
  for (int i = 0; i < fraction_digits; ++i) {
    digits.insert(digits.begin(), static_cast<char>('0' + frac % 10));
    frac /= 10;
  }
  std::string out = negative && scaled != 0 ? "-" : "";
  out += std::to_string(static_cast<long long>(whole));
  if (fraction_digits > 0) out += "." + digits;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  return from_wide(static_cast<Wide>(a.num_) * b.den_ +
                       static_cast<Wide>(b.num_) * a.den_,
                   static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return from_wide(static_cast<Wide>(a.num_) * b.den_ -
                       static_cast<Wide>(b.num_) * a.den_,
                   static_cast<Wide>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace vaguescore
