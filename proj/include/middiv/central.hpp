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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "middiv/word.hpp"

namespace middiv {

/// The four two-letter symbols S = {aa, ab, ba, bb}. Bit 1 holds the first
/// letter, bit 0 the second (0 = 'a', 1 = 'b').
enum class PairSymbol : unsigned char { aa = 0, ab = 1, ba = 2, bb = 3 };

constexpr char pair_first(PairSymbol p) {
  return (static_cast<unsigned>(p) & 2u) ? 'b' : 'a';
}

constexpr char pair_second(PairSymbol p) {
  return (static_cast<unsigned>(p) & 1u) ? 'b' : 'a';
}

constexpr PairSymbol make_pair_symbol(char x, char y) {
  return static_cast<PairSymbol>(((x == 'b') ? 2u : 0u) | ((y == 'b') ? 1u : 0u));
}

using PairSeq = std::vector<PairSymbol>;

/// Serializes as a comma-free run of two-letter blocks, e.g. "abba".
inline std::string to_string(const PairSeq& p) {
  std::string out;
  out.reserve(2 * p.size());
  for (PairSymbol s : p) {
    out.push_back(pair_first(s));
    out.push_back(pair_second(s));
  }
  return out;
}

inline PairSeq parse_pair_seq(std::string_view text) {
  if (text.size() % 2 != 0) {
    throw std::invalid_argument("parse_pair_seq: odd number of letters");
  }
  PairSeq out;
  out.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    char x = text[i];
    char y = text[i + 1];
    if ((x != 'a' && x != 'b') || (y != 'a' && y != 'b')) {
      throw std::invalid_argument("parse_pair_seq: letter must be 'a' or 'b'");
    }
    out.push_back(make_pair_symbol(x, y));
  }
  return out;
}

/// Outside-in pairing: for |w| = 2m, pair i is (w_i, w_{2m+1-i}). Bijection
/// between even-length words and pair sequences.
inline PairSeq phi(const Word& w) {
  const std::size_t n = w.size();
  if (n % 2 != 0) throw std::invalid_argument("phi: word length must be even");
  PairSeq out;
  out.reserve(n / 2);
  for (std::size_t i = 0; i < n / 2; ++i) {
    out.push_back(make_pair_symbol(w[i], w[n - 1 - i]));
  }
  return out;
}

inline Word phi_inv(std::span<const PairSymbol> p) {
  const std::size_t m = p.size();
  std::string out(2 * m, 'a');
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = pair_first(p[i]);
    out[2 * m - 1 - i] = pair_second(p[i]);
  }
  return Word(std::move(out));
}

inline Word phi_inv(const PairSeq& p) {
  return phi_inv(std::span<const PairSymbol>(p));
}

/// Dyck test of phi_inv(p) without materializing the word: the word reads
/// all first components left to right, then all second components right to
/// left.
inline bool is_dyck_pairs(std::span<const PairSymbol> p) {
  long long depth = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    depth += (pair_first(p[i]) == 'a') ? 1 : -1;
    if (depth < 0) return false;
  }
  for (std::size_t i = p.size(); i-- > 0;) {
    depth += (pair_second(p[i]) == 'a') ? 1 : -1;
    if (depth < 0) return false;
  }
  return depth == 0;
}

/// Central concatenation: u's pairs stay outermost, v's nest inside. The
/// empty word is the two-sided identity and the operation is associative
/// (it is plain concatenation of pair sequences).
inline Word central_concat(const Word& u, const Word& v) {
  PairSeq pu = phi(u);
  PairSeq pv = phi(v);
  pu.insert(pu.end(), pv.begin(), pv.end());
  return phi_inv(pu);
}

struct Factorization {
  std::vector<Word> factors;
};

/// Factors a nonempty Dyck word into centrally irreducible Dyck words, the
/// unique decomposition under central concatenation. Greedy peel: take the
/// shortest nonempty prefix of phi(w) whose own word AND whose remainder's
/// word are both Dyck. The remainder condition is not redundant — for
/// "abab" the one-pair prefix leaves "baba", so the first factor is the
/// whole word.
inline Factorization central_factorize(const Word& w) {
  if (w.empty()) throw std::invalid_argument("central_factorize: empty word");
  if (!is_dyck(w)) throw std::invalid_argument("central_factorize: not a Dyck word");
  PairSeq pairs = phi(w);
  std::span<const PairSymbol> rest(pairs);
  Factorization out;
  while (!rest.empty()) {
    std::size_t len = 1;
    for (; len < rest.size(); ++len) {
      if (is_dyck_pairs(rest.first(len)) && is_dyck_pairs(rest.subspan(len))) break;
    }
    // No proper split: the remainder itself (Dyck by induction) is the factor.
    out.factors.push_back(phi_inv(rest.first(len)));
    rest = rest.subspan(len);
  }
  return out;
}

/// True iff w is a nonempty Dyck word not expressible as a central
/// concatenation of two nonempty Dyck words.
inline bool is_centrally_irreducible(const Word& w) {
  if (w.empty() || !is_dyck(w)) return false;
  PairSeq pairs = phi(w);
  std::span<const PairSymbol> all(pairs);
  for (std::size_t len = 1; len < all.size(); ++len) {
    if (is_dyck_pairs(all.first(len)) && is_dyck_pairs(all.subspan(len))) return false;
  }
  return true;
}

/// Number of occurrences of x in phi(w); the morphism l_x on the central
/// concatenation monoid.
inline std::size_t count_pair(PairSymbol x, const Word& w) {
  const std::size_t n = w.size();
  if (n % 2 != 0) throw std::invalid_argument("count_pair: word length must be even");
  std::size_t count = 0;
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (make_pair_symbol(w[i], w[n - 1 - i]) == x) ++count;
  }
  return count;
}

/// First half of a sigma-palindromic word w, the unique h with
/// w = h . sigma(mirror(h)).
inline Word half_word(const Word& w) {
  if (!is_sigma_palindromic(w)) {
    throw std::invalid_argument("half_word: word is not sigma-palindromic");
  }
  return Word(w.letters().substr(0, w.size() / 2));
}

/// Counts matched pairs (i, j) with i + j = |w| + 1, i.e. tunnels symmetric
/// about the center.
inline std::size_t centered_tunnels_direct(const Word& w) {
  if (!is_dyck(w)) throw std::invalid_argument("centered_tunnels_direct: not a Dyck word");
  std::vector<std::size_t> open;
  std::size_t count = 0;
  const std::size_t target = w.size() + 1;
  for (std::size_t j = 1; j <= w.size(); ++j) {
    if (w[j - 1] == 'a') {
      open.push_back(j);
    } else {
      if (open.back() + j == target) ++count;
      open.pop_back();
    }
  }
  return count;
}

/// The same statistic through the monoid morphism that sends "ab" to 1 and
/// every other irreducible to 0: counts "ab" factors in the central
/// factorization. Must agree with centered_tunnels_direct on all Dyck words.
inline std::size_t centered_tunnels_morphism(const Word& w) {
  if (!is_dyck(w)) throw std::invalid_argument("centered_tunnels_morphism: not a Dyck word");
  if (w.empty()) return 0;
  static const Word kAB = Word("ab");
  std::size_t count = 0;
  for (const Word& f : central_factorize(w).factors) {
    if (f == kAB) ++count;
  }
  return count;
}

}  // namespace middiv
