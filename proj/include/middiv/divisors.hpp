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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "middiv/factored.hpp"
#include "middiv/lambda.hpp"
#include "middiv/word.hpp"

namespace middiv {

/// All divisors of n in increasing order, by trial division up to sqrt(n).
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::vector<BigInt> divisors_big(std::uint64_t n) {
  std::vector<BigInt> out;
  for (std::uint64_t d : divisors(n)) out.emplace_back(d);
  return out;
}

/// Divisors d of n with sqrt(n/lambda) < d <= sqrt(lambda*n), in increasing
/// order. `divs` must be the full sorted divisor list of n.
inline std::vector<BigInt> lambda_middle_divisors(std::span<const BigInt> divs, const BigInt& n,
                                                  const Lambda& lambda) {
  std::vector<BigInt> out;
  for (const BigInt& d : divs) {
    if (above_lower_bound(d, n, lambda) && at_most_upper_bound(d, n, lambda)) {
      out.push_back(d);
    }
  }
  return out;
}

inline std::vector<BigInt> lambda_middle_divisors(std::uint64_t n, const Lambda& lambda) {
  auto divs = divisors_big(n);
  return lambda_middle_divisors(divs, BigInt(n), lambda);
}

inline std::vector<BigInt> lambda_middle_divisors(const FactoredInteger& n,
                                                  const Lambda& lambda) {
  auto divs = divisors(n);
  return lambda_middle_divisors(divs, n.value, lambda);
}

/// One element of the sorted symmetric difference D_n (triangle) lambda*D_n.
/// `divisor` is the generating d: the element's value is d itself for
/// letter 'a' (in D_n only) and lambda*d for letter 'b' (in lambda*D_n only).
struct SymDiffEntry {
  BigInt divisor;
  char letter;
};

/// Merges D_n against lambda*D_n by exact scaled comparison. An exact
/// coincidence d = lambda*d' belongs to both sets and drops out of the
/// symmetric difference entirely.
inline std::vector<SymDiffEntry> symmetric_difference(std::span<const BigInt> divs,
                                                      const Lambda& lambda) {
  std::vector<SymDiffEntry> out;
  out.reserve(2 * divs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < divs.size() && j < divs.size()) {
    auto ord = compare_scaled(divs[i], divs[j], lambda);
    if (ord == std::strong_ordering::less) {
      out.push_back({divs[i++], 'a'});
    } else if (ord == std::strong_ordering::greater) {
      out.push_back({divs[j++], 'b'});
    } else {
      ++i;
      ++j;
    }
  }
  for (; i < divs.size(); ++i) out.push_back({divs[i], 'a'});
  for (; j < divs.size(); ++j) out.push_back({divs[j], 'b'});
  return out;
}

/// The divisor-encoded word of n: letters of the symmetric difference
/// D_n (triangle) lambda*D_n read in increasing order, 'a' for elements of
/// D_n only, 'b' for elements of lambda*D_n only. Always a sigma-palindromic
/// Dyck word.
inline Word build_word(std::span<const BigInt> divs, const Lambda& lambda) {
  auto entries = symmetric_difference(divs, lambda);
  std::string letters;
  letters.reserve(entries.size());
  for (const SymDiffEntry& e : entries) letters.push_back(e.letter);
  return Word(std::move(letters));
}

inline Word build_word(std::uint64_t n, const Lambda& lambda) {
  auto divs = divisors_big(n);
  return build_word(divs, lambda);
}

inline Word build_word(const FactoredInteger& n, const Lambda& lambda) {
  auto divs = divisors(n);
  return build_word(divs, lambda);
}

/// max over real t > 0 of #{d|n : t < d <= lambda*t}. The count only jumps
/// up where lambda*t reaches a divisor, so sweeping t = d/lambda over the
/// divisor list attains the supremum. With lambda = e this is Hooley's
/// Delta function evaluated pointwise.
inline std::size_t interval_divisor_max(std::span<const BigInt> divs, const Lambda& lambda) {
  std::size_t best = 0;
  for (const BigInt& dj : divs) {
    std::size_t count = 0;
    for (const BigInt& d : divs) {
      if (d > dj) break;
      // d lies in ]dj/lambda, dj]  <=>  lambda*d > dj.
      if (compare_scaled(dj, d, lambda) == std::strong_ordering::less) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

inline std::size_t interval_divisor_max(std::uint64_t n, const Lambda& lambda) {
  auto divs = divisors_big(n);
  return interval_divisor_max(divs, lambda);
}

inline std::size_t interval_divisor_max(const FactoredInteger& n, const Lambda& lambda) {
  auto divs = divisors(n);
  return interval_divisor_max(divs, lambda);
}

}  // namespace middiv
