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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "middiv/divisors.hpp"
#include "middiv/word.hpp"

namespace middiv {

/// The self-reciprocal q-analog of the divisor sum (Kassel-Reutenauer):
/// coefficient a_{n,k} sits at exponents n-1+k and n-1-k, so the polynomial
/// has degree 2n-2 and center exponent n-1. Evaluating at q=1 gives
/// sigma(n).
struct KRPolynomial {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> coefficients;  // index = exponent, size 2n-1

  std::uint64_t coefficient(std::uint64_t exponent) const {
    return exponent < coefficients.size() ? coefficients[exponent] : 0;
  }

  BigInt evaluate(const BigInt& q) const {
    BigInt acc = 0;
    for (std::size_t e = coefficients.size(); e-- > 0;) {
      acc = acc * q + coefficients[e];
    }
    return acc;
  }
};

/// a_{n,k} = #{d|n : (k+sqrt(k^2+2n))/2 < d <= k+sqrt(k^2+2n)}, decided
/// square-root-free:
///   d > (k+s)/2  <=>  2d-k > 0 and (2d-k)^2 > k^2+2n
///   d <= k+s     <=>  d <= k or (d-k)^2 <= k^2+2n
/// where s = sqrt(k^2+2n).
inline std::uint64_t kr_coefficient(std::span<const std::uint64_t> divs, std::uint64_t n,
                                    std::uint64_t k) {
  if (k >= n) throw std::invalid_argument("kr_coefficient: k must satisfy 0 <= k <= n-1");
  using u128 = unsigned __int128;
  const u128 bound = static_cast<u128>(k) * k + 2 * static_cast<u128>(n);
  std::uint64_t count = 0;
  for (std::uint64_t d : divs) {
    const bool lower = 2 * d > k && static_cast<u128>(2 * d - k) * (2 * d - k) > bound;
    const bool upper = d <= k || static_cast<u128>(d - k) * (d - k) <= bound;
    if (lower && upper) ++count;
  }
  return count;
}

inline std::uint64_t kr_coefficient(std::uint64_t n, std::uint64_t k) {
  auto divs = divisors(n);
  return kr_coefficient(divs, n, k);
}

inline KRPolynomial kr_polynomial(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("kr_polynomial: n must be >= 1");
  auto divs = divisors(n);
  KRPolynomial p;
  p.n = n;
  p.coefficients.assign(2 * n - 1, 0);
  p.coefficients[n - 1] = kr_coefficient(divs, n, 0);
  for (std::uint64_t k = 1; k < n; ++k) {
    std::uint64_t a = kr_coefficient(divs, n, k);
    p.coefficients[n - 1 + k] = a;
    p.coefficients[n - 1 - k] = a;
  }
  return p;
}

/// Coefficients of (q-1) * P_n(q), exponents 0..2n-1. For these polynomials
/// every entry is -1, 0, or +1.
inline std::vector<std::int64_t> times_q_minus_one(const KRPolynomial& p) {
  std::vector<std::int64_t> out(p.coefficients.size() + 1, 0);
  for (std::size_t e = 0; e < p.coefficients.size(); ++e) {
    const auto c = static_cast<std::int64_t>(p.coefficients[e]);
    out[e + 1] += c;
    out[e] -= c;
  }
  return out;
}

/// Nonzero coefficients of (q-1)*P_n(q) in increasing exponent order,
/// -1 as 'a' and +1 as 'b'. Equals the divisor-encoded word of n at
/// lambda = 2.
inline Word kr_sign_word(std::uint64_t n) {
  auto prod = times_q_minus_one(kr_polynomial(n));
  std::string letters;
  for (std::int64_t c : prod) {
    if (c == -1) {
      letters.push_back('a');
    } else if (c == 1) {
      letters.push_back('b');
    } else if (c != 0) {
      throw std::logic_error("kr_sign_word: coefficient of (q-1)*P_n outside {-1,0,1} at n=" +
                             std::to_string(n));
    }
  }
  return Word(std::move(letters));
}

}  // namespace middiv
