#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grig/errors.hpp"

namespace grig {

// The four generators. All of them are involutions, so a word never needs
// inverse letters and the inverse of a word is its reversal.
enum class Letter : uint8_t { a = 0, b = 1, c = 2, d = 3 };

using Word = std::vector<Letter>;

inline char letter_char(Letter l) { return static_cast<char>('a' + static_cast<int>(l)); }

inline Letter letter_from_char(char ch, std::size_t position = 0) {
  if (ch < 'a' || ch > 'd') throw parse_error("expected one of a,b,c,d", position);
  return static_cast<Letter>(ch - 'a');
}

// ASCII word format: a string over {a,b,c,d}; "" is the identity.
inline Word parse_word(std::string_view s) {
  Word w;
  w.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) w.push_back(letter_from_char(s[i], i));
  return w;
}

inline std::string word_str(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(letter_char(l));
  return s;
}

inline Word inverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

inline Word concat(const Word& u, const Word& v) {
  Word w;
  w.reserve(u.size() + v.size());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

inline std::size_t count_letter(const Word& w, Letter l) {
  std::size_t n = 0;
  for (Letter x : w)
    if (x == l) ++n;
  return n;
}

inline bool odd_a_count(const Word& w) {
  bool odd = false;
  for (Letter x : w)
    if (x == Letter::a) odd = !odd;
  return odd;
}

// For distinct x, y in {b,c,d}: the third letter. x*y = third(x,y) in the group.
inline Letter third_letter(Letter x, Letter y) {
  return static_cast<Letter>(6 - static_cast<int>(x) - static_cast<int>(y));
}

// Shape classes of reduced spellings (a)*a*a...*a*(a), * in {b,c,d}:
//   I   starts and ends with a (odd length; includes the single letter a)
//   II  starts with a, ends with *
//   III starts with *, ends with a
//   IV  starts and ends with * (odd length; includes a single b, c or d)
// The empty spelling is tagged II by convention: it sits with the even-length
// family, whose split length bound (half the length) is the one the identity
// element satisfies.
enum class WordType : uint8_t { I, II, III, IV };

inline const char* word_type_name(WordType t) {
  switch (t) {
    case WordType::I: return "I";
    case WordType::II: return "II";
    case WordType::III: return "III";
    default: return "IV";
  }
}

struct ReducedWord {
  Word letters;
  WordType type;
};

inline WordType classify_spelling(const Word& w) {
  if (w.empty()) return WordType::II;
  bool first_a = w.front() == Letter::a;
  bool last_a = w.back() == Letter::a;
  if (first_a && last_a) return WordType::I;
  if (first_a) return WordType::II;
  if (last_a) return WordType::III;
  return WordType::IV;
}

inline bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) return false;
    if (w[i] != Letter::a && w[i - 1] != Letter::a) return false;
  }
  return true;
}

// One left-to-right pass with a stack: cancel x*x, fuse adjacent pairs from
// {b,c,d} into the third letter, re-inspecting the top after each fuse. The
// result alternates a with letters from {b,c,d} and spells the same element.
inline ReducedWord reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter incoming : w) {
    Letter cur = incoming;
    bool consumed = false;
    while (!out.empty()) {
      Letter top = out.back();
      if (top == cur) {
        out.pop_back();
        consumed = true;
        break;
      }
      if (top != Letter::a && cur != Letter::a) {
        out.pop_back();
        cur = third_letter(top, cur);
        continue;
      }
      break;
    }
    if (!consumed) out.push_back(cur);
  }
  WordType type = classify_spelling(out);
  return ReducedWord{std::move(out), type};
}

// The substitution a -> aba, b -> d, c -> b, d -> c, applied letterwise.
// Iterating it from the single letter a yields an infinite family of
// pairwise distinct elements.
inline Word eta(const Word& w) {
  Word out;
  out.reserve(3 * w.size());
  for (Letter l : w) {
    switch (l) {
      case Letter::a:
        out.push_back(Letter::a);
        out.push_back(Letter::b);
        out.push_back(Letter::a);
        break;
      case Letter::b: out.push_back(Letter::d); break;
      case Letter::c: out.push_back(Letter::b); break;
      default: out.push_back(Letter::c); break;
    }
  }
  return out;
}

}  // namespace grig
