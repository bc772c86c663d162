// Copyright 2026 The fracdim Authors.
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

#ifndef FRACDIM_RATIONAL_H_
#define FRACDIM_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fracdim {

// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0.
// Thin value wrapper over GMP's mpq_class; every constructor and operator
// leaves the value canonicalized.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "p" or "p/q" with optional leading '-'; q must be positive.
  static Rational Parse(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s) {
        if (c < '0' || c > '9') return false;
      }
      return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1")
                                        : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) +
                                  "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // "p/q", or "p" when q = 1.
  std::string ToString() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  // Round-half-up decimal approximation with `digits` fractional digits.
  std::string ToDecimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = abs(q_.get_num()) * scale * 2 + q_.get_den();
    mpz_class den = q_.get_den() * 2;
    mpz_class scaled = num / den;
    std::string body = scaled.get_str();
    if (digits > 0) {
      if (body.size() <= static_cast<std::size_t>(digits)) {
        body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
      }
      body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (sgn(q_) < 0 && scaled != 0 ? "-" : "") + body;
  }

  mpz_class Ceil() const {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
  }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class q_;
};

inline Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace fracdim

#endif  // FRACDIM_RATIONAL_H_
