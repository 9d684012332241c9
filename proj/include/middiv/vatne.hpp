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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "middiv/divisors.hpp"
#include "middiv/factored.hpp"
#include "middiv/lambda.hpp"

namespace middiv {

/// Thrown when the doubling search hits its box-size ceiling before
/// collecting enough strip points.
class box_limit_error : public std::runtime_error {
 public:
  box_limit_error(std::uint64_t ceiling, std::uint64_t wanted, std::uint64_t found)
      : std::runtime_error("lattice-strip search: box-size ceiling " + std::to_string(ceiling) +
                           " exceeded with " + std::to_string(found) + " of " +
                           std::to_string(wanted) + " points; raise the ceiling"),
        ceiling_(ceiling) {}

  std::uint64_t ceiling() const { return ceiling_; }

 private:
  std::uint64_t ceiling_;
};

/// Membership in the logarithmic strip: 1/lambda < (2^x * 3^y)^2 <= lambda.
/// For exact lambda = p/q the powers are cleared of negative exponents and
/// the test is a big-integer cross-multiplication; no logarithms anywhere.
inline bool in_strip(const Lambda& lambda, std::int64_t x, std::int64_t y) {
  using boost::multiprecision::pow;
  const auto xp = static_cast<unsigned>(std::max<std::int64_t>(x, 0));
  const auto xn = static_cast<unsigned>(std::max<std::int64_t>(-x, 0));
  const auto yp = static_cast<unsigned>(std::max<std::int64_t>(y, 0));
  const auto yn = static_cast<unsigned>(std::max<std::int64_t>(-y, 0));
  // (2^x 3^y)^2 = num/den with both sides nonnegative powers.
  const BigInt num = pow(BigInt(2), 2 * xp) * pow(BigInt(3), 2 * yp);
  const BigInt den = pow(BigInt(2), 2 * xn) * pow(BigInt(3), 2 * yn);
  if (lambda.is_exact()) {
    return lambda.num() * num > lambda.den() * den && lambda.den() * num <= lambda.num() * den;
  }
  const BigFloat v = to_bigfloat(num) / to_bigfloat(den);
  const unsigned g = lambda.guard_digits();
  const bool above = guarded_compare(v * lambda.value(), BigFloat(1), g, "in_strip") ==
                     std::strong_ordering::greater;
  const bool below = guarded_compare(v, lambda.value(), g, "in_strip") ==
                     std::strong_ordering::less;
  return above && below;
}

struct StripWindow {
  Lambda lambda;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> points;  // lexicographic
};

/// Enumerates the strip restricted to the box |x| <= a, |y| <= b. The origin
/// is always a member since lambda > 1.
inline StripWindow strip_points(const Lambda& lambda, std::uint64_t a, std::uint64_t b) {
  StripWindow window{lambda, a, b, {}};
  const auto sa = static_cast<std::int64_t>(a);
  const auto sb = static_cast<std::int64_t>(b);
  for (std::int64_t x = -sa; x <= sa; ++x) {
    for (std::int64_t y = -sb; y <= sb; ++y) {
      if (in_strip(lambda, x, y)) window.points.emplace_back(x, y);
    }
  }
  return window;
}

struct VatneResult {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  FactoredInteger n;
  std::vector<FactoredInteger> witnesses;  // ascending value
};

inline constexpr std::uint64_t kDefaultMaxBox = 1024;

namespace detail {

inline VatneResult assemble_vatne(const Lambda& lambda, const StripWindow& window) {
  VatneResult result;
  result.a = window.a;
  result.b = window.b;
  result.n = FactoredInteger::from_factors(
      {{2, static_cast<unsigned>(2 * window.a)}, {3, static_cast<unsigned>(2 * window.b)}});
  for (const auto& [x, y] : window.points) {
    std::map<std::uint64_t, unsigned> factors;
    const auto e2 = static_cast<std::int64_t>(window.a) + x;
    const auto e3 = static_cast<std::int64_t>(window.b) + y;
    if (e2 > 0) factors[2] = static_cast<unsigned>(e2);
    if (e3 > 0) factors[3] = static_cast<unsigned>(e3);
    FactoredInteger witness = FactoredInteger::from_factors(std::move(factors));
    if (!above_lower_bound(witness.value, result.n.value, lambda) ||
        !at_most_upper_bound(witness.value, result.n.value, lambda)) {
      throw std::logic_error("vatne: strip point produced a non-middle divisor");
    }
    result.witnesses.push_back(std::move(witness));
  }
  std::sort(result.witnesses.begin(), result.witnesses.end(),
            [](const FactoredInteger& lhs, const FactoredInteger& rhs) {
              return compare_divisors_factored(lhs, rhs) == std::strong_ordering::less;
            });
  return result;
}

}  // namespace detail

/// n = 2^{2a} * 3^{2b} together with the witness divisors 2^{a+x} * 3^{b+y}
/// coming from the strip points; each witness is re-checked against the
/// middle-divisor inequalities before being returned.
inline VatneResult vatne_at(const Lambda& lambda, std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("vatne_at: a and b must be >= 1");
  return detail::assemble_vatne(lambda, strip_points(lambda, a, b));
}

/// Doubles a = b = 1, 2, 4, ... until the strip window holds at least M
/// points, then builds the corresponding integer. Termination for any fixed
/// lambda > 1 is a property of the strip (the window count is unbounded);
/// the ceiling exists to fail loudly instead of looping on a bad call.
inline VatneResult vatne_integer(const Lambda& lambda, std::uint64_t M,
                                 std::uint64_t max_box = kDefaultMaxBox) {
  if (M == 0) throw std::invalid_argument("vatne_integer: M must be >= 1");
  std::uint64_t last_count = 0;
  for (std::uint64_t s = 1; s <= max_box; s *= 2) {
    StripWindow window = strip_points(lambda, s, s);
    last_count = window.points.size();
    if (last_count >= M) return detail::assemble_vatne(lambda, window);
  }
  throw box_limit_error(max_box, M, last_count);
}

/// Independent recount: asks the divisor layer for the lambda-middle
/// divisors of n and checks there are at least M, with no reference to the
/// strip construction.
inline bool verify_vatne(const FactoredInteger& n, const Lambda& lambda, std::uint64_t M) {
  return lambda_middle_divisors(n, lambda).size() >= M;
}

}  // namespace middiv
