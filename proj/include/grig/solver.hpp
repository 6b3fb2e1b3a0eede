#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "grig/portrait.hpp"
#include "grig/split.hpp"
#include "grig/word.hpp"

namespace grig {

// Decides w = I by the halving recursion: reduce, reject on odd a-parity,
// otherwise split into the two wreath coordinates and recurse on both.
// Iterative with an explicit stack so million-letter inputs are fine; each
// letter is rewritten O(log n) times, so the whole run is O(n log n).
inline bool is_identity(const Word& w) {
  std::vector<Word> pending;
  pending.push_back(w);
  while (!pending.empty()) {
    Word cur = std::move(pending.back());
    pending.pop_back();
    ReducedWord r = reduce(cur);
    if (r.letters.empty()) continue;
    if (odd_a_count(r.letters)) return false;
    if (r.letters.size() == 1) return false;  // a single b, c or d is nontrivial
    WreathSplit s = raw_split(r.letters);
    pending.push_back(std::move(s.w0));
    pending.push_back(std::move(s.w1));
  }
  return true;
}

inline bool are_equal(const Word& u, const Word& v) {
  Word probe;
  probe.reserve(u.size() + v.size());
  probe.insert(probe.end(), u.begin(), u.end());
  probe.insert(probe.end(), v.rbegin(), v.rend());  // v^-1 is v reversed
  return is_identity(probe);
}

// Every element has order 2^k; returns the smallest k <= k_max with
// w^(2^k) = I, found by repeated squaring with reduction between steps.
// nullopt means the budget ran out, not that the order is infinite.
inline std::optional<int> order_exponent(const Word& w, int k_max = 30) {
  Word cur = reduce(w).letters;
  for (int k = 0; k <= k_max; ++k) {
    if (is_identity(cur)) return k;
    if (k == k_max) break;
    cur = reduce(concat(cur, cur)).letters;
  }
  return std::nullopt;
}

// Truncated action of a single generator. The letters b, c, d act by swaps
// along the all-ones path: the sign of x at vertex 1^k 0 is set iff k avoids
// one residue class mod 3 (2 for b, 1 for c, 0 for d).
inline FinitePortrait letter_portrait(Letter l, int depth) {
  FinitePortrait p(depth);
  if (l == Letter::a) {
    if (depth >= 1) p.set_sign(0, true);
    return p;
  }
  int skip = (l == Letter::b) ? 2 : (l == Letter::c) ? 1 : 0;
  std::size_t ones = 0;  // heap index of 1^k
  for (int k = 0; k + 1 < depth; ++k) {
    if (k % 3 != skip) p.set_sign(2 * ones + 1, true);  // sign sits at 1^k 0
    ones = 2 * ones + 2;
  }
  return p;
}

// Action of a word on the depth-m truncation; multiplicative over
// concatenation under the left-action convention.
inline FinitePortrait portrait_of(const Word& w, int depth) {
  FinitePortrait acc = FinitePortrait::identity(depth);
  for (Letter l : w) acc = compose(acc, letter_portrait(l, depth));
  return acc;
}

}  // namespace grig
