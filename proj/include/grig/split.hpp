#pragma once

#include <array>
#include <cstdint>

#include "grig/word.hpp"

namespace grig {

// The two halves of the level-1 wreath decomposition of the element spelled
// by a word, plus the root swap bit. sigma is the parity of the a-count; the
// element stabilizes level 1 exactly when sigma is 0.
struct WreathSplit {
  Word w0;
  Word w1;
  bool sigma = false;
};

namespace detail {

// Images of b, c, d under the two coordinate projections: on side 0 a letter
// preceded by an even number of a's contributes its subtree-0 action, after
// an odd number of a's the root swaps have routed it to the other side.
// Encoding: kSplitImage[side][parity][letter], -1 means the letter vanishes.
//   side 0, even: b->a  c->a  d->(nothing)
//   side 0, odd:  b->c  c->d  d->b
// and side 1 is the mirror image.
inline constexpr std::array<std::array<std::array<int8_t, 4>, 2>, 2> kSplitImage = {{
    {{{-1, 0, 0, -1},     // side 0, even parity
      {-1, 2, 3, 1}}},    // side 0, odd parity
    {{{-1, 2, 3, 1},      // side 1, even parity
      {-1, 0, 0, -1}}},   // side 1, odd parity
}};

}  // namespace detail

// Splits an arbitrary word (reduced or not) into its two wreath coordinates,
// dropping the letters that map to the identity. Output words are in general
// not reduced.
inline WreathSplit raw_split(const Word& w) {
  WreathSplit s;
  s.w0.reserve(w.size() / 2 + 1);
  s.w1.reserve(w.size() / 2 + 1);
  int parity = 0;
  for (Letter l : w) {
    if (l == Letter::a) {
      parity ^= 1;
      continue;
    }
    int idx = static_cast<int>(l);
    int8_t img0 = detail::kSplitImage[0][parity][idx];
    int8_t img1 = detail::kSplitImage[1][parity][idx];
    if (img0 >= 0) s.w0.push_back(static_cast<Letter>(img0));
    if (img1 >= 0) s.w1.push_back(static_cast<Letter>(img1));
  }
  s.sigma = (parity != 0);
  return s;
}

// Reduces first, then splits. The output spelling lengths obey the per-type
// bounds: at most (len-1)/2 for type I, len/2 for II/III, (len+1)/2 for IV.
inline WreathSplit psi_split(const Word& w) { return raw_split(reduce(w).letters); }

// Half-length bound on each split coordinate for a reduced spelling of the
// given type and length, as twice the bound so it stays integral.
inline std::size_t split_bound_times_two(WordType t, std::size_t len) {
  switch (t) {
    case WordType::I: return len == 0 ? 0 : len - 1;
    case WordType::IV: return len + 1;
    default: return len;
  }
}

}  // namespace grig
