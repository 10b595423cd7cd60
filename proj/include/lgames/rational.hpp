// Copyright 2026 The lgames Authors
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

#ifndef LGAMES_RATIONAL_HPP_
#define LGAMES_RATIONAL_HPP_

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "lgames/error.hpp"

namespace lgames {

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of literals
  Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  // Accepts "m/n", "k" and an optional leading sign. Surrounding whitespace
  // is ignored.
  static Rational parse(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view t = text.substr(b, e - b);
    auto digits_ok = [](std::string_view s, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      }
      return true;
    };
    std::size_t slash = t.find('/');
    std::string_view num = t.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) {
      throw InputError("malformed rational literal '" + std::string(text) + "'");
    }
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    mpz_class zn(n, 10);
    mpz_class zd(std::string(den), 10);
    if (zd == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
    mpq_class q(zn, zd);
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& get() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // Lowest terms "m/n"; integers are printed bare.
  std::string str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.value_ == 0) throw SemanticError("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// An element of some algebra's carrier: a rational in [0, 1].
class TruthValue {
 public:
  TruthValue() = default;
  TruthValue(long num, long den) : TruthValue(Rational(num, den)) {}
  explicit TruthValue(Rational value) : value_(std::move(value)) {
    if (value_ < Rational(0) || value_ > Rational(1)) {
      throw DomainError("truth value " + value_.str() + " outside [0,1]");
    }
  }

  static TruthValue zero() { return TruthValue(); }
  static TruthValue one() { return TruthValue(Rational(1)); }
  static TruthValue parse(std::string_view text) { return TruthValue(Rational::parse(text)); }

  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT
  std::string str() const { return value_.str(); }
  bool is_zero() const { return value_.sign() == 0; }
  bool is_one() const { return value_ == Rational(1); }

  friend bool operator==(const TruthValue& a, const TruthValue& b) = default;
  friend std::strong_ordering operator<=>(const TruthValue& a, const TruthValue& b) {
    return a.value_ <=> b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const TruthValue& v) { return os << v.str(); }

 private:
  Rational value_;
};

struct RationalHash {
  std::size_t operator()(const Rational& r) const {
    std::size_t h1 = std::hash<std::string>{}(r.numerator().get_str(16));
    std::size_t h2 = std::hash<std::string>{}(r.denominator().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

inline long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace lgames

#endif  // LGAMES_RATIONAL_HPP_
