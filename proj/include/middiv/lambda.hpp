// Copyright 2026 The middiv Authors
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

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace middiv {

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_dec_float_100;

/// Thrown when an approximate-lambda comparison lands inside the guard band.
/// The inputs cannot be classified at the configured precision, and the
/// word built from them would change discontinuously on a misclassification,
/// so the comparison aborts instead of guessing.
class near_tie_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The scaling parameter lambda > 1. Two representations:
///   - Exact p/q in lowest terms (p > q >= 1): every comparison in the
///     library reduces to a big-integer cross-multiplication, so results
///     are exact and machine-precision independent.
///   - Approx: a 100-digit decimal plus a guard-digit count; comparisons
///     raise near_tie_error when the margin drops below 10 ulps at the
///     guard precision.
class Lambda {
 public:
  static constexpr unsigned kDefaultGuardDigits = 30;
  static constexpr unsigned kMinGuardDigits = 5;
  // Working precision is 100 digits; leave headroom above representation
  // noise so a passed guard is meaningful.
  static constexpr unsigned kMaxGuardDigits = 90;

  static Lambda exact(BigInt num, BigInt den) {
    if (num <= 0 || den <= 0) {
      throw std::invalid_argument("Lambda: numerator and denominator must be positive");
    }
    BigInt g = boost::multiprecision::gcd(num, den);
    num /= g;
    den /= g;
    if (num <= den) throw std::invalid_argument("Lambda: value must exceed 1");
    Lambda l;
    l.num_ = std::move(num);
    l.den_ = std::move(den);
    l.exact_ = true;
    return l;
  }

  static Lambda exact(BigInt value) { return exact(std::move(value), 1); }

  static Lambda approx(BigFloat value, unsigned guard_digits = kDefaultGuardDigits) {
    if (guard_digits < kMinGuardDigits || guard_digits > kMaxGuardDigits) {
      throw std::invalid_argument("Lambda: guard digits must lie in [" +
                                  std::to_string(kMinGuardDigits) + ", " +
                                  std::to_string(kMaxGuardDigits) + "]");
    }
    if (value <= 1) throw std::invalid_argument("Lambda: value must exceed 1");
    Lambda l;
    l.value_ = std::move(value);
    l.guard_digits_ = guard_digits;
    l.exact_ = false;
    return l;
  }

  bool is_exact() const { return exact_; }

  const BigInt& num() const {
    require_exact();
    return num_;
  }

  const BigInt& den() const {
    require_exact();
    return den_;
  }

  const BigFloat& value() const {
    if (exact_) throw std::logic_error("Lambda: exact form has no stored decimal value");
    return value_;
  }

  unsigned guard_digits() const { return guard_digits_; }

  /// Numeric view for display and diagnostics only.
  BigFloat as_float() const {
    if (exact_) return BigFloat(num_) / BigFloat(den_);
    return value_;
  }

  std::string str() const {
    if (!exact_) return value_.str();
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  void require_exact() const {
    if (!exact_) throw std::logic_error("Lambda: operation requires the exact form");
  }

  BigInt num_{0};
  BigInt den_{1};
  BigFloat value_{0};
  unsigned guard_digits_ = kDefaultGuardDigits;
  bool exact_ = true;
};

/// Parses "p/q", an integer, or a decimal literal. Rational notation yields
/// the exact form; a decimal yields the approximate form and requires an
/// explicit precision (the guard-digit count). Values <= 1 are rejected.
inline Lambda parse_lambda(std::string_view text,
                           std::optional<unsigned> precision = std::nullopt) {
  if (text.empty()) throw std::invalid_argument("lambda: empty value");
  const bool decimal = text.find('.') != std::string_view::npos ||
                       text.find('e') != std::string_view::npos ||
                       text.find('E') != std::string_view::npos;
  const auto slash = text.find('/');

  if (decimal) {
    if (slash != std::string_view::npos) {
      throw std::invalid_argument("lambda: mixed decimal/fraction notation");
    }
    if (!precision) {
      throw std::invalid_argument("lambda: decimal value requires an explicit precision");
    }
    BigFloat value;
    try {
      value = BigFloat(std::string(text));
    } catch (const std::exception&) {
      throw std::invalid_argument("lambda: malformed decimal '" + std::string(text) + "'");
    }
    return Lambda::approx(value, *precision);
  }

  if (precision) {
    throw std::invalid_argument("lambda: precision applies only to decimal values");
  }

  auto parse_nat = [](std::string_view s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("lambda: malformed rational");
    for (char c : s) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("lambda: malformed rational '" + std::string(s) + "'");
      }
    }
    return BigInt(std::string(s));
  };

  if (slash == std::string_view::npos) {
    return Lambda::exact(parse_nat(text));
  }
  return Lambda::exact(parse_nat(text.substr(0, slash)), parse_nat(text.substr(slash + 1)));
}

/// Guarded three-way comparison of two nonnegative high-precision values.
/// Throws near_tie_error when |lhs - rhs| < 10 ulps of max(lhs, rhs) at the
/// given guard precision. Never reports equality: a genuine tie is always
/// inside the band.
inline std::strong_ordering guarded_compare(const BigFloat& lhs, const BigFloat& rhs,
                                            unsigned guard_digits, const char* context) {
  using boost::multiprecision::abs;
  BigFloat margin = abs(lhs - rhs);
  BigFloat scale = lhs > rhs ? lhs : rhs;
  BigFloat threshold = scale * pow(BigFloat(10), 1 - static_cast<int>(guard_digits));
  if (margin < threshold) {
    throw near_tie_error(std::string(context) +
                         ": comparison margin below the guard threshold (" +
                         std::to_string(guard_digits) + " digits); supply lambda as an " +
                         "exact rational or raise the precision");
  }
  return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
}

inline BigFloat to_bigfloat(const BigInt& x) { return BigFloat(x); }

/// d > sqrt(n/lambda), decided square-root-free as lambda*d^2 > n
/// (p*d^2 > q*n for exact lambda).
inline bool above_lower_bound(const BigInt& d, const BigInt& n, const Lambda& lambda) {
  if (d < 1 || n < 1) throw std::invalid_argument("above_lower_bound: inputs must be >= 1");
  if (lambda.is_exact()) {
    return lambda.num() * d * d > lambda.den() * n;
  }
  BigFloat lhs = lambda.value() * to_bigfloat(d * d);
  return guarded_compare(lhs, to_bigfloat(n), lambda.guard_digits(), "above_lower_bound") ==
         std::strong_ordering::greater;
}

/// d <= sqrt(lambda*n), decided square-root-free as d^2 <= lambda*n
/// (q*d^2 <= p*n for exact lambda).
inline bool at_most_upper_bound(const BigInt& d, const BigInt& n, const Lambda& lambda) {
  if (d < 1 || n < 1) throw std::invalid_argument("at_most_upper_bound: inputs must be >= 1");
  if (lambda.is_exact()) {
    return lambda.den() * d * d <= lambda.num() * n;
  }
  BigFloat rhs = lambda.value() * to_bigfloat(n);
  return guarded_compare(to_bigfloat(d * d), rhs, lambda.guard_digits(), "at_most_upper_bound") ==
         std::strong_ordering::less;
}

/// Sign of d - lambda*e, computed as q*d - p*e for exact lambda. With an
/// approximate lambda, equality is never reported; a tie lands in the guard
/// band and throws.
inline std::strong_ordering compare_scaled(const BigInt& d, const BigInt& e,
                                           const Lambda& lambda) {
  if (d < 1 || e < 1) throw std::invalid_argument("compare_scaled: inputs must be >= 1");
  if (lambda.is_exact()) {
    BigInt lhs = lambda.den() * d;
    BigInt rhs = lambda.num() * e;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  BigFloat rhs = lambda.value() * to_bigfloat(e);
  return guarded_compare(to_bigfloat(d), rhs, lambda.guard_digits(), "compare_scaled");
}

}  // namespace middiv
