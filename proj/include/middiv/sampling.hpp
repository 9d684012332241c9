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

#include <cstddef>
#include <string>
#include <vector>

#include "middiv/word.hpp"

namespace middiv {

// Only raw generator words are consumed below (no distribution adaptors),
// so sequences are reproducible across standard libraries.

template <typename URBG>
Word random_word(std::size_t length, URBG& rng) {
  std::string letters(length, 'a');
  for (char& c : letters) {
    if (rng() & 1u) c = 'b';
  }
  return Word(std::move(letters));
}

/// Uniform Dyck word of the given semilength via the cycle lemma: shuffle
/// m+1 openers and m closers; exactly one rotation keeps every partial sum
/// positive (the one starting after the last minimum of the prefix sums),
/// and dropping its leading opener leaves a Dyck word. Each Dyck word arises
/// from equally many shuffles, so the result is uniform.
template <typename URBG>
Word random_dyck_word(std::size_t semilength, URBG& rng) {
  const std::size_t total = 2 * semilength + 1;
  std::string seq(total, 'b');
  for (std::size_t i = 0; i <= semilength; ++i) seq[i] = 'a';
  for (std::size_t i = total - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(seq[i], seq[j]);
  }
  long long sum = 0;
  long long min_sum = 0;
  std::size_t start = 0;  // index right after the last minimum prefix
  for (std::size_t i = 0; i < total; ++i) {
    sum += (seq[i] == 'a') ? 1 : -1;
    if (sum <= min_sum) {
      min_sum = sum;
      start = i + 1;
    }
  }
  std::string rotated;
  rotated.reserve(total);
  rotated.append(seq, start, total - start);
  rotated.append(seq, 0, start);
  return Word(rotated.substr(1));  // drop the leading opener
}

}  // namespace middiv
