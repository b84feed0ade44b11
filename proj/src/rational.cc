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

#include "contracts/rational.h"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace contracts {
namespace {

bool IsIntegerText(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("zero denominator");
  value_.canonicalize();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

std::string Rational::ToString() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::Parse(std::string_view text) {
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!IsIntegerText(text)) {
      throw std::invalid_argument("malformed rational \"" + std::string(text) +
                                  "\"");
    }
    return Rational(mpq_class(ParseInteger(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!IsIntegerText(num) || !IsIntegerText(den) || den[0] == '-' ||
      den[0] == '+') {
    throw std::invalid_argument("malformed rational \"" + std::string(text) +
                                "\"");
  }
  return rat(ParseInteger(num), ParseInteger(den));
}

Rational rat(long long num, long long den) {
  static_assert(sizeof(long long) == sizeof(long));
  return rat(mpz_class(static_cast<long>(num)),
             mpz_class(static_cast<long>(den)));
}

Rational rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(mpq_class(num, den));
}

Rational PowInt(const Rational& base, long long exp) {
  if (exp < 0) {
    if (base.is_zero()) {
      throw std::domain_error("zero raised to a negative power");
    }
    return PowInt(Rational(1) / base, -exp);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(),
             static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(),
             static_cast<unsigned long>(exp));
  return rat(num, den);
}

Rational Abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational Sum(const std::vector<Rational>& values) {
  mpq_class acc;
  for (const Rational& v : values) acc += v.mpq();
  return Rational(acc);
}

Rational Dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot size mismatch");
  mpq_class acc;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i].mpq() * b[i].mpq();
  }
  return Rational(acc);
}

std::string ToDecimal(const Rational& x, int digits) {
  if (digits < 1) digits = 1;
  if (x.is_zero()) {
    return "0." + std::string(static_cast<size_t>(digits - 1), '0') + "e+00";
  }
  const mpz_class num = abs(x.numerator());
  const mpz_class den = x.denominator();

  // Find e with 10^e <= |x| < 10^(e+1), starting from a size estimate.
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto ten_pow = [](long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return p;
  };
  auto at_least_pow10 = [&](long k) {  // |x| >= 10^k
    if (k >= 0) return num >= den * ten_pow(k);
    return num * ten_pow(-k) >= den;
  };
  while (!at_least_pow10(e)) --e;
  while (at_least_pow10(e + 1)) ++e;

  // scaled = round(|x| * 10^(digits-1-e)), half away from zero.
  const long shift = digits - 1 - e;
  mpz_class n = num;
  mpz_class d = den;
  if (shift >= 0) {
    n *= ten_pow(shift);
  } else {
    d *= ten_pow(-shift);
  }
  mpz_class q;
  mpz_class r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (2 * r >= d) q += 1;
  std::string mantissa = q.get_str();
  if (static_cast<int>(mantissa.size()) > digits) {  // rounded up to 10^digits
    ++e;
    mantissa.pop_back();
  }
  std::string out = x.sign() < 0 ? "-" : "";
  out += mantissa.substr(0, 1);
  if (digits > 1) out += "." + mantissa.substr(1);
  out += e < 0 ? "e-" : "e+";
  const std::string exp_text = std::to_string(e < 0 ? -e : e);
  if (exp_text.size() < 2) out += "0";
  out += exp_text;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.ToString();
}

}  // namespace contracts
