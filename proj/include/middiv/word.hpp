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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace middiv {

/// A finite word over the alphabet {a,b}, read as parentheses when
/// convenient ('a' opens, 'b' closes). Immutable value type.
class Word {
 public:
  Word() = default;

  explicit Word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_) {
      if (c != 'a' && c != 'b') {
        throw std::invalid_argument("Word: letter must be 'a' or 'b'");
      }
    }
  }

  /// Parses either notation, mixed freely: a/( open, b/) close.
  static Word parse(std::string_view text) {
    std::string letters;
    letters.reserve(text.size());
    for (char c : text) {
      switch (c) {
        case 'a':
        case '(':
          letters.push_back('a');
          break;
        case 'b':
        case ')':
          letters.push_back('b');
          break;
        default:
          throw std::invalid_argument(std::string("Word: unexpected character '") + c + "'");
      }
    }
    return Word(std::move(letters));
  }

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  std::string str() const { return letters_; }

  std::string parens() const {
    std::string out;
    out.reserve(letters_.size());
    for (char c : letters_) out.push_back(c == 'a' ? '(' : ')');
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

constexpr char flip_letter(char c) { return c == 'a' ? 'b' : 'a'; }

/// The monoid morphism swapping a and b letterwise.
inline Word sigma_map(const Word& w) {
  std::string out = w.letters();
  for (char& c : out) c = flip_letter(c);
  return Word(std::move(out));
}

inline Word mirror(const Word& w) {
  return Word(std::string(w.letters().rbegin(), w.letters().rend()));
}

/// True iff the mirror image equals the letter swap. Only even-length words
/// qualify: a middle letter would have to equal its own swap.
inline bool is_sigma_palindromic(const Word& w) {
  const std::size_t n = w.size();
  if (n % 2 != 0) return false;
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (w[n - 1 - i] != flip_letter(w[i])) return false;
  }
  return true;
}

inline bool is_dyck(const Word& w) {
  long long depth = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    depth += (w[i] == 'a') ? 1 : -1;
    if (depth < 0) return false;
  }
  return depth == 0;
}

/// 1-based position of the first unmatched letter, or nullopt for Dyck input.
/// A surplus 'b' is reported where the depth first goes negative; a surplus
/// 'a' is reported at the earliest opener that never closes.
inline std::optional<std::size_t> first_dyck_violation(const Word& w) {
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'a') {
      open.push_back(i + 1);
    } else {
      if (open.empty()) return i + 1;
      open.pop_back();
    }
  }
  if (!open.empty()) return open.front();
  return std::nullopt;
}

/// Maximum nesting depth of a Dyck word (0 for the empty word).
inline std::size_t dyck_height(const Word& w) {
  if (!is_dyck(w)) throw std::invalid_argument("dyck_height: not a Dyck word");
  long long depth = 0;
  long long best = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    depth += (w[i] == 'a') ? 1 : -1;
    if (depth > best) best = depth;
  }
  return static_cast<std::size_t>(best);
}

}  // namespace middiv
