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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "middiv/lambda.hpp"

namespace middiv {

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
  };
  auto powmod = [&](std::uint64_t base, std::uint64_t exp, std::uint64_t m) -> std::uint64_t {
    std::uint64_t acc = 1;
    base %= m;
    while (exp > 0) {
      if (exp & 1) acc = mulmod(acc, base, m);
      base = mulmod(base, base, m);
      exp >>= 1;
    }
    return acc;
  };
  // This witness set decides primality for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// A positive integer carried together with its prime factorization. `value`
/// is the expanded product and may lie far beyond 64-bit range (the
/// lattice-strip construction routinely produces hundreds of digits).
struct FactoredInteger {
  std::map<std::uint64_t, unsigned> factors;  // prime -> exponent >= 1
  BigInt value{1};

  /// Plain integers are factored by trial division, which is only sensible
  /// up to this bound; larger inputs must arrive in factored form.
  static constexpr std::uint64_t kTrialDivisionLimit = 1'000'000'000'000ull;  // 10^12

  static FactoredInteger from_integer(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("FactoredInteger: value must be >= 1");
    if (n > kTrialDivisionLimit) {
      throw std::invalid_argument(
          "FactoredInteger: value exceeds the trial-division limit (10^12); "
          "supply the factorization, e.g. 2^6*3^4");
    }
    FactoredInteger out;
    out.value = n;
    std::uint64_t rest = n;
    for (std::uint64_t p : {2ull, 3ull}) {
      while (rest % p == 0) {
        rest /= p;
        ++out.factors[p];
      }
    }
    for (std::uint64_t p = 5; p * p <= rest; p += 6) {
      for (std::uint64_t q : {p, p + 2}) {
        while (rest % q == 0) {
          rest /= q;
          ++out.factors[q];
        }
      }
    }
    if (rest > 1) ++out.factors[rest];
    return out;
  }

  static FactoredInteger from_factors(std::map<std::uint64_t, unsigned> factors) {
    FactoredInteger out;
    for (const auto& [p, e] : factors) {
      if (!is_prime(p)) {
        throw std::invalid_argument("FactoredInteger: base " + std::to_string(p) +
                                    " is not prime");
      }
      if (e == 0) continue;
      out.factors[p] = e;
      for (unsigned i = 0; i < e; ++i) out.value *= p;
    }
    return out;
  }

  /// Accepts a plain decimal or a product of prime powers like "2^6*3^4"
  /// (whitespace allowed, '^' optional for exponent 1).
  static FactoredInteger parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
      if (c != ' ' && c != '\t') compact.push_back(c);
    }
    if (compact.empty()) throw std::invalid_argument("FactoredInteger: empty value");
    if (compact.find_first_not_of("0123456789") == std::string::npos) {
      BigInt v(compact);
      if (v > kTrialDivisionLimit) {
        throw std::invalid_argument(
            "FactoredInteger: value exceeds the trial-division limit (10^12); "
            "supply the factorization, e.g. 2^6*3^4");
      }
      return from_integer(v.convert_to<std::uint64_t>());
    }
    std::map<std::uint64_t, unsigned> factors;
    std::size_t pos = 0;
    auto read_number = [&]() -> std::uint64_t {
      std::size_t start = pos;
      while (pos < compact.size() && compact[pos] >= '0' && compact[pos] <= '9') ++pos;
      if (pos == start) {
        throw std::invalid_argument("FactoredInteger: malformed factorization '" +
                                    std::string(text) + "'");
      }
      return std::stoull(compact.substr(start, pos - start));
    };
    while (true) {
      std::uint64_t prime = read_number();
      unsigned exponent = 1;
      if (pos < compact.size() && compact[pos] == '^') {
        ++pos;
        std::uint64_t e = read_number();
        if (e == 0 || e > 1'000'000) {
          throw std::invalid_argument("FactoredInteger: exponent out of range");
        }
        exponent = static_cast<unsigned>(e);
      }
      factors[prime] += exponent;
      if (pos == compact.size()) break;
      if (compact[pos] != '*') {
        throw std::invalid_argument("FactoredInteger: malformed factorization '" +
                                    std::string(text) + "'");
      }
      ++pos;
    }
    return from_factors(std::move(factors));
  }

  std::string factored_str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : factors) {
      if (!out.empty()) out += "*";
      out += std::to_string(p);
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  std::string decimal_str() const { return value.str(); }
};

inline std::strong_ordering compare_divisors_factored(const FactoredInteger& lhs,
                                                      const FactoredInteger& rhs) {
  if (lhs.value < rhs.value) return std::strong_ordering::less;
  if (lhs.value > rhs.value) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// All divisors in increasing order, by exponent-vector expansion.
inline std::vector<BigInt> divisors(const FactoredInteger& n) {
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& [p, e] : n.factors) {
    const std::size_t base = out.size();
    out.reserve(base * (e + 1));
    BigInt power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace middiv
