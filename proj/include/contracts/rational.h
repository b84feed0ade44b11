// Copyright 2026 The Contract Menus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONTRACTS_RATIONAL_H_
#define CONTRACTS_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace contracts {

// Exact rational number in canonical form: the denominator is positive and
// coprime with the numerator. Every solver in this library works over this
// type; there is no floating point on any solver path.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value)  // NOLINT(google-explicit-constructor)
      : value_(FromInteger(value)) {}
  explicit Rational(mpq_class value);

  const mpq_class& mpq() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  // "p/q", or "p" when q = 1. ASCII, no whitespace.
  std::string ToString() const;

  // Inverse of ToString. Also accepts a bare integer. Throws
  // std::invalid_argument on malformed text, std::domain_error on a zero
  // denominator.
  static Rational Parse(std::string_view text);

 private:
  template <std::integral I>
  static mpq_class FromInteger(I value) {
    static_assert(sizeof(I) <= sizeof(long), "integer wider than long");
    if constexpr (std::is_signed_v<I>) {
      return mpq_class(mpz_class(static_cast<long>(value)));
    } else {
      return mpq_class(mpz_class(static_cast<unsigned long>(value)));
    }
  }

  mpq_class value_;
};

// num/den in canonical form. Throws std::domain_error when den == 0.
Rational rat(long long num, long long den);
Rational rat(const mpz_class& num, const mpz_class& den);

// Exact base^exp. A negative exponent inverts; 0 to a negative power throws
// std::domain_error.
Rational PowInt(const Rational& base, long long exp);

Rational Abs(const Rational& x);
Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

Rational Sum(const std::vector<Rational>& values);
Rational Dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Display-only rendering with `digits` significant digits in scientific
// notation, e.g. "3.1625000000000000000e-01". Never used for comparisons.
std::string ToDecimal(const Rational& x, int digits = 20);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace contracts

#endif  // CONTRACTS_RATIONAL_H_
