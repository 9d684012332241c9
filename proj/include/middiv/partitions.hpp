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
#include <stdexcept>

namespace middiv {

struct ConsecutivePartitionCounts {
  std::uint64_t odd_parts = 0;
  std::uint64_t even_parts = 0;

  friend bool operator==(const ConsecutivePartitionCounts&,
                         const ConsecutivePartitionCounts&) = default;
};

/// Counts representations n = m + (m+1) + ... + (m+j-1) with m, j >= 1,
/// split by the parity of the number of parts j. A run of j parts starting
/// at m sums to j*m + j(j-1)/2, so j ranges up to O(sqrt(n)).
inline ConsecutivePartitionCounts consecutive_partitions(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("consecutive_partitions: n must be >= 1");
  ConsecutivePartitionCounts counts;
  for (std::uint64_t j = 1; j * (j - 1) / 2 < n; ++j) {
    const std::uint64_t rest = n - j * (j - 1) / 2;
    if (rest % j == 0) {
      if (j % 2 == 1) {
        ++counts.odd_parts;
      } else {
        ++counts.even_parts;
      }
    }
  }
  return counts;
}

}  // namespace middiv
