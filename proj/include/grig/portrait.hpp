#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "grig/errors.hpp"

namespace grig {

// Single-portrait operations stay cheap up to this depth (2^24 sign bits).
inline constexpr int kMaxPortraitDepth = 24;
// Full closure enumeration of the level-m truncation group; m = 5 already has
// 2^31 elements, refuse it unless the caller raises the cap explicitly.
inline constexpr int kDefaultEnumDepthCap = 4;

// A vertex of the rooted binary tree, identified by its 0/1 path from the root.
// The empty path is the root; level == number of path bits.
class Vertex {
public:
  Vertex() = default;
  explicit Vertex(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}

  static Vertex root() { return Vertex{}; }

  // Accepts a string over {'0','1'}, e.g. "011". "" is the root.
  static Vertex parse(std::string_view s) {
    std::vector<uint8_t> bits;
    bits.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') throw parse_error("invalid vertex bit", i);
      bits.push_back(s[i] == '1');
    }
    return Vertex{std::move(bits)};
  }

  int level() const { return static_cast<int>(bits_.size()); }
  bool bit(int i) const { return bits_[static_cast<std::size_t>(i)] != 0; }
  const std::vector<uint8_t>& bits() const { return bits_; }

  Vertex child(bool b) const {
    std::vector<uint8_t> next = bits_;
    next.push_back(b ? 1 : 0);
    return Vertex{std::move(next)};
  }

  // Path bits read MSB-first as an integer in [0, 2^level).
  uint64_t value() const {
    uint64_t v = 0;
    for (uint8_t b : bits_) v = (v << 1) | b;
    return v;
  }

  // Position in the heap layout: root 0, children of i at 2i+1 and 2i+2.
  std::size_t heap_index() const {
    return (std::size_t{1} << level()) - 1 + static_cast<std::size_t>(value());
  }

  std::string str() const {
    std::string s;
    s.reserve(bits_.size());
    for (uint8_t b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  friend bool operator==(const Vertex&, const Vertex&) = default;

private:
  std::vector<uint8_t> bits_;
};

// A tree automorphism truncated at a fixed depth m: one swap/no-swap sign per
// vertex of level < m, i.e. an element of the finite group A_m. Signs are kept
// as a flat bit array in heap order, which makes portraits cheap to hash and
// compare; they are the canonical dedup keys everywhere in this library.
//
// Text format: levels joined by '|', each level's signs left to right, e.g.
// depth 2 is "1|00" (root sign, then the two level-1 signs).
class FinitePortrait {
public:
  explicit FinitePortrait(int depth) : depth_(check_depth(depth)) {
    words_.assign((sign_count() + 63) / 64, 0);
  }

  static FinitePortrait identity(int depth) { return FinitePortrait(depth); }

  // The root swap truncated at `depth`; the generator usually written a.
  static FinitePortrait root_swap(int depth) {
    FinitePortrait p(depth);
    if (depth >= 1) p.set_sign(0, true);
    return p;
  }

  // The swap of the two subtrees below `v`, truncated at `depth`.
  static FinitePortrait single_swap(int depth, const Vertex& v) {
    FinitePortrait p(depth);
    if (v.level() >= depth)
      throw depth_error("single_swap: vertex level must be below portrait depth");
    p.set_sign(v.heap_index(), true);
    return p;
  }

  int depth() const { return depth_; }
  std::size_t sign_count() const { return (std::size_t{1} << depth_) - 1; }

  bool sign(std::size_t heap_index) const {
    return (words_[heap_index >> 6] >> (heap_index & 63)) & 1u;
  }
  bool sign_at(const Vertex& v) const {
    if (v.level() >= depth_) throw depth_error("sign_at: vertex level must be below depth");
    return sign(v.heap_index());
  }
  void set_sign(std::size_t heap_index, bool value) {
    uint64_t mask = uint64_t{1} << (heap_index & 63);
    if (value)
      words_[heap_index >> 6] |= mask;
    else
      words_[heap_index >> 6] &= ~mask;
  }

  bool is_identity() const {
    for (uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  // Image of a vertex with |v| <= depth. Walking down from the root, bit i is
  // flipped iff the sign at the level-i prefix of the *input* path is set.
  Vertex apply(const Vertex& v) const {
    if (v.level() > depth_) throw depth_error("apply: vertex deeper than portrait");
    std::vector<uint8_t> out;
    out.reserve(static_cast<std::size_t>(v.level()));
    std::size_t prefix = 0;  // heap index of the input prefix
    for (int i = 0; i < v.level(); ++i) {
      bool b = v.bit(i);
      out.push_back(static_cast<uint8_t>(b ^ sign(prefix)));
      prefix = 2 * prefix + 1 + (b ? 1 : 0);
    }
    return Vertex{std::move(out)};
  }

  std::string str() const {
    std::string s;
    for (int lvl = 0; lvl < depth_; ++lvl) {
      if (lvl > 0) s.push_back('|');
      std::size_t start = (std::size_t{1} << lvl) - 1;
      std::size_t count = std::size_t{1} << lvl;
      for (std::size_t i = 0; i < count; ++i) s.push_back(sign(start + i) ? '1' : '0');
    }
    return s;
  }

  // Inverse of str(). "" parses as the depth-0 (identity) portrait.
  static FinitePortrait parse(std::string_view s) {
    if (s.empty()) return FinitePortrait(0);
    std::vector<std::string_view> levels;
    std::size_t pos = 0;
    while (true) {
      std::size_t bar = s.find('|', pos);
      levels.push_back(s.substr(pos, bar == std::string_view::npos ? bar : bar - pos));
      if (bar == std::string_view::npos) break;
      pos = bar + 1;
    }
    if (levels.size() > static_cast<std::size_t>(kMaxPortraitDepth))
      throw cap_error("portrait text deeper than the portrait depth cap");
    FinitePortrait p(static_cast<int>(levels.size()));
    std::size_t offset = 0;
    for (std::size_t lvl = 0; lvl < levels.size(); ++lvl) {
      std::size_t expect = std::size_t{1} << lvl;
      if (levels[lvl].size() != expect)
        throw parse_error("level " + std::to_string(lvl) + " must have " +
                              std::to_string(expect) + " signs",
                          offset);
      for (std::size_t i = 0; i < expect; ++i) {
        char ch = levels[lvl][i];
        if (ch != '0' && ch != '1') throw parse_error("invalid sign character", offset + i);
        p.set_sign((expect - 1) + i, ch == '1');
      }
      offset += expect + 1;
    }
    return p;
  }

  friend bool operator==(const FinitePortrait& x, const FinitePortrait& y) {
    return x.depth_ == y.depth_ && x.words_ == y.words_;
  }

  struct Hash {
    std::size_t operator()(const FinitePortrait& p) const noexcept {
      uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(p.depth_);
      for (uint64_t w : p.words_) {
        h ^= w;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

private:
  static int check_depth(int depth) {
    if (depth < 0) throw depth_error("portrait depth must be nonnegative");
    if (depth > kMaxPortraitDepth) throw cap_error("portrait depth exceeds cap");
    return depth;
  }

  int depth_;
  std::vector<uint64_t> words_;  // unused high bits stay zero
};

// Left-action product p*q: apply(compose(p, q), v) == q.apply(p.apply(v)).
inline FinitePortrait compose(const FinitePortrait& p, const FinitePortrait& q) {
  if (p.depth() != q.depth()) throw depth_error("compose: depth mismatch");
  const int m = p.depth();
  FinitePortrait r(m);
  if (m == 0) return r;
  const std::size_t n = p.sign_count();
  // image[i] = heap index of p(vertex i); computed top-down level by level.
  std::vector<std::size_t> image(n);
  image[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t left = 2 * i + 1;
    if (left < n) {
      bool flip = p.sign(i);
      image[left] = 2 * image[i] + 1 + (flip ? 1 : 0);
      image[left + 1] = 2 * image[i] + 1 + (flip ? 0 : 1);
    }
    r.set_sign(i, p.sign(i) ^ q.sign(image[i]));
  }
  return r;
}

// Assembles the depth-(m+1) portrait with root sign `swap`, p0 on subtree 0
// and p1 on subtree 1. This realizes the wreath product map: the result acts
// as x.rest -> (x^swap).(p_x(rest)).
inline FinitePortrait wreath_compose(const FinitePortrait& p0, const FinitePortrait& p1,
                                     bool swap) {
  if (p0.depth() != p1.depth()) throw depth_error("wreath_compose: depth mismatch");
  const int m = p0.depth();
  FinitePortrait r(m + 1);
  r.set_sign(0, swap);
  for (int lvl = 0; lvl < m; ++lvl) {
    std::size_t src = (std::size_t{1} << lvl) - 1;
    std::size_t count = std::size_t{1} << lvl;
    std::size_t dst = (std::size_t{1} << (lvl + 1)) - 1;
    for (std::size_t i = 0; i < count; ++i) {
      r.set_sign(dst + i, p0.sign(src + i));
      r.set_sign(dst + count + i, p1.sign(src + i));
    }
  }
  return r;
}

struct WreathParts {
  FinitePortrait left;
  FinitePortrait right;
  bool swap;
};

// Exact inverse of wreath_compose; requires depth >= 1.
inline WreathParts wreath_split(const FinitePortrait& p) {
  if (p.depth() < 1) throw depth_error("wreath_split: depth 0 portrait");
  const int m = p.depth() - 1;
  WreathParts parts{FinitePortrait(m), FinitePortrait(m), p.sign(0)};
  for (int lvl = 0; lvl < m; ++lvl) {
    std::size_t src = (std::size_t{1} << (lvl + 1)) - 1;
    std::size_t count = std::size_t{1} << lvl;
    std::size_t dst = (std::size_t{1} << lvl) - 1;
    for (std::size_t i = 0; i < count; ++i) {
      parts.left.set_sign(dst + i, p.sign(src + i));
      parts.right.set_sign(dst + i, p.sign(src + count + i));
    }
  }
  return parts;
}

// Embedding at `anchor`: a depth-m portrait becomes a depth-(m + |anchor|)
// portrait acting inside the subtree below anchor and trivially elsewhere.
inline FinitePortrait embed_at(const FinitePortrait& p, const Vertex& anchor) {
  const int m = p.depth();
  const int k = anchor.level();
  FinitePortrait r(m + k);
  const uint64_t aval = anchor.value();
  for (int lvl = 0; lvl < m; ++lvl) {
    std::size_t src = (std::size_t{1} << lvl) - 1;
    std::size_t count = std::size_t{1} << lvl;
    std::size_t dst = (std::size_t{1} << (lvl + k)) - 1 +
                      (static_cast<std::size_t>(aval) << lvl);
    for (std::size_t i = 0; i < count; ++i) r.set_sign(dst + i, p.sign(src + i));
  }
  return r;
}

// Smallest n >= 1 with p^n trivial, by repeated composition.
inline uint64_t order_of(const FinitePortrait& p, uint64_t limit = uint64_t{1} << 20) {
  FinitePortrait acc = p;
  uint64_t n = 1;
  while (!acc.is_identity()) {
    if (++n > limit) throw cap_error("order_of: iteration limit exceeded");
    acc = compose(acc, p);
  }
  return n;
}

// The full group of depth-m truncations, as the closure of the single-vertex
// swaps under composition (breadth-first, so the result order is stable).
// Size is 2^(2^m - 1), which is why m defaults to being capped at 4.
inline std::vector<FinitePortrait> enumerate_am(int m, int cap = kDefaultEnumDepthCap) {
  if (m < 0) throw depth_error("enumerate_am: negative depth");
  if (m > cap) throw cap_error("enumerate_am: depth exceeds the enumeration cap");
  std::vector<FinitePortrait> generators;
  for (int lvl = 0; lvl < m; ++lvl) {
    std::size_t start = (std::size_t{1} << lvl) - 1;
    std::size_t count = std::size_t{1} << lvl;
    for (std::size_t i = 0; i < count; ++i) {
      FinitePortrait g(m);
      g.set_sign(start + i, true);
      generators.push_back(std::move(g));
    }
  }
  std::vector<FinitePortrait> elements{FinitePortrait::identity(m)};
  std::unordered_set<FinitePortrait, FinitePortrait::Hash> seen{elements[0]};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    FinitePortrait cur = elements[head];
    for (const FinitePortrait& g : generators) {
      FinitePortrait next = compose(cur, g);
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

// Depth-m truncation of the automorphism whose signs sit exactly on the
// all-ones path: a finite odometer whose order grows without bound in m.
inline FinitePortrait infinite_order_witness(int m, int cap = kMaxPortraitDepth) {
  if (m < 1) throw depth_error("infinite_order_witness: depth must be >= 1");
  if (m > cap) throw cap_error("infinite_order_witness: depth exceeds cap");
  FinitePortrait p(m);
  std::size_t idx = 0;  // heap index of 1^k
  for (int k = 0; k < m; ++k) {
    p.set_sign(idx, true);
    idx = 2 * idx + 2;
  }
  return p;
}

}  // namespace grig
