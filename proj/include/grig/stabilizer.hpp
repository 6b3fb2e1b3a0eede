#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grig/growth.hpp"
#include "grig/solver.hpp"

namespace grig {

inline constexpr int kDefaultStabilizerCap = 4;
inline constexpr int kMaxEtaIterates = 25;

// Level-n stabilizer membership, decided by peeling wreath coordinates: the
// swap bit must vanish at every node down to depth n.
inline bool in_stabilizer(const Word& w, int level, int cap = kDefaultStabilizerCap) {
  if (level < 0) throw domain_error("in_stabilizer: negative level");
  if (level > cap) throw cap_error("in_stabilizer: level exceeds cap");
  if (level == 0) return true;
  WreathSplit s = psi_split(w);
  if (s.sigma) return false;
  return in_stabilizer(s.w0, level - 1, cap) && in_stabilizer(s.w1, level - 1, cap);
}

// Cosets of the level-n stabilizer. Since the stabilizer is exactly the
// kernel of the action on level n, cosets are labeled by depth-n portraits
// and the computed index is exact, not just bounded.
struct CosetTable {
  int level = 0;
  // shortlex-first BFS discovery order; .first spells a representative,
  // .second is its level-n action.
  std::vector<std::pair<Word, FinitePortrait>> representatives;

  std::size_t index() const { return representatives.size(); }
};

inline CosetTable build_coset_table(int level, int cap = kDefaultStabilizerCap) {
  if (level < 1) throw domain_error("build_coset_table: level must be >= 1");
  if (level > cap) throw cap_error("build_coset_table: level exceeds cap");
  CosetTable table;
  table.level = level;
  FinitePortrait gens[4] = {
      letter_portrait(Letter::a, level), letter_portrait(Letter::b, level),
      letter_portrait(Letter::c, level), letter_portrait(Letter::d, level)};
  std::unordered_map<FinitePortrait, std::size_t, FinitePortrait::Hash> seen;
  table.representatives.emplace_back(Word{}, FinitePortrait::identity(level));
  seen.emplace(table.representatives[0].second, 0);
  for (std::size_t head = 0; head < table.representatives.size(); ++head) {
    // copy: the vector may reallocate while we append
    auto [word, image] = table.representatives[head];
    for (int g = 0; g < 4; ++g) {
      FinitePortrait next = compose(image, gens[g]);
      if (seen.contains(next)) continue;
      Word nw = word;
      nw.push_back(static_cast<Letter>(g));
      seen.emplace(next, table.representatives.size());
      table.representatives.emplace_back(std::move(nw), std::move(next));
    }
  }
  return table;
}

// A tiny concrete group given by reduced-word representatives and its full
// multiplication table (indices into `elements`).
struct SmallGroupTable {
  std::vector<Word> elements;
  std::vector<std::vector<std::size_t>> product;

  std::size_t size() const { return elements.size(); }
};

// Closure of the given generators under multiplication, with equality decided
// by the solver. Only meant for small subgroups; aborts past max_size.
inline SmallGroupTable enumerate_closure(const std::vector<Word>& generators,
                                         std::size_t max_size = 64) {
  SmallGroupTable g;
  g.elements.push_back(Word{});
  auto index_of = [&g](const Word& w) -> std::size_t {
    for (std::size_t i = 0; i < g.elements.size(); ++i)
      if (are_equal(g.elements[i], w)) return i;
    return g.elements.size();
  };
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (const Word& gen : generators) {
      Word w = reduce(concat(g.elements[head], gen)).letters;
      if (index_of(w) == g.elements.size()) {
        if (g.elements.size() >= max_size)
          throw cap_error("enumerate_closure: subgroup larger than max_size");
        g.elements.push_back(std::move(w));
      }
    }
  }
  g.product.assign(g.size(), std::vector<std::size_t>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      g.product[i][j] = index_of(concat(g.elements[i], g.elements[j]));
  return g;
}

inline SmallGroupTable closure_ad() {
  return enumerate_closure({parse_word("a"), parse_word("d")});
}

// Checks that a closure table with designated involutions x, y realizes the
// dihedral group of order 8: x^2 = y^2 = (xy)^4 = identity, (xy)^2 nontrivial,
// the rotation is inverted under conjugation by x, and the eight elements are
// exactly the cosets (xy)^i and (xy)^i x.
inline bool is_dihedral8(const SmallGroupTable& g, const Word& x_word, const Word& y_word) {
  if (g.size() != 8) return false;
  std::size_t e = g.size(), x = g.size(), y = g.size();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (are_equal(g.elements[i], Word{})) e = i;
    if (are_equal(g.elements[i], x_word)) x = i;
    if (are_equal(g.elements[i], y_word)) y = i;
  }
  if (e == g.size() || x == g.size() || y == g.size()) return false;
  if (g.product[x][x] != e || g.product[y][y] != e) return false;
  std::size_t r = g.product[x][y];  // xy
  std::size_t r2 = g.product[r][r];
  std::size_t r4 = g.product[r2][r2];
  if (r4 != e || r2 == e) return false;
  // x r x = r^-1 = r^3
  std::size_t r3 = g.product[r2][r];
  if (g.product[g.product[x][r]][x] != r3) return false;
  std::vector<bool> hit(g.size(), false);
  std::size_t cur = e;
  for (int i = 0; i < 4; ++i) {
    hit[cur] = true;
    hit[g.product[cur][x]] = true;
    cur = g.product[cur][r];
  }
  for (bool h : hit)
    if (!h) return false;
  return true;
}

struct SplitRow {
  Word source;
  Word comp0;
  Word comp1;
};

// Wreath coordinates of the six standard generators of the level-1
// stabilizer: b, c, d and their conjugates by a. Components are reduced.
inline std::array<SplitRow, 6> fundamental_generator_table() {
  const char* sources[6] = {"b", "c", "d", "aba", "aca", "ada"};
  std::array<SplitRow, 6> rows;
  for (int i = 0; i < 6; ++i) {
    Word src = parse_word(sources[i]);
    WreathSplit s = psi_split(src);
    rows[static_cast<std::size_t>(i)] =
        SplitRow{std::move(src), reduce(s.w0).letters, reduce(s.w1).letters};
  }
  return rows;
}

// Level-3 wreath coordinates of a word, produced by three rounds of raw
// splitting with identity letters stripped after each round and nothing else
// rewritten. The intermediate concatenation lengths feed the contraction
// inequalities, so they are recorded alongside the components.
struct OctupleSplit {
  std::array<Word, 8> components;  // index (i<<2)|(j<<1)|k for the vertex ijk
  Word source_reduced;
  std::array<std::size_t, 3> stage_lengths{};  // total letters after rounds 1..3
};

inline OctupleSplit psi3_split(const Word& h) {
  OctupleSplit out;
  out.source_reduced = reduce(h).letters;

  WreathSplit top = raw_split(out.source_reduced);
  if (top.sigma) throw domain_error("psi3_split: word does not stabilize level 1");
  std::array<Word, 2> level1 = {std::move(top.w0), std::move(top.w1)};
  out.stage_lengths[0] = level1[0].size() + level1[1].size();

  std::array<Word, 4> level2;
  for (int i = 0; i < 2; ++i) {
    WreathSplit s = raw_split(level1[static_cast<std::size_t>(i)]);
    if (s.sigma) throw domain_error("psi3_split: word does not stabilize level 2");
    level2[static_cast<std::size_t>(2 * i)] = std::move(s.w0);
    level2[static_cast<std::size_t>(2 * i + 1)] = std::move(s.w1);
  }
  out.stage_lengths[1] = 0;
  for (const Word& w : level2) out.stage_lengths[1] += w.size();

  for (int i = 0; i < 4; ++i) {
    WreathSplit s = raw_split(level2[static_cast<std::size_t>(i)]);
    if (s.sigma) throw domain_error("psi3_split: word does not stabilize level 3");
    out.components[static_cast<std::size_t>(2 * i)] = std::move(s.w0);
    out.components[static_cast<std::size_t>(2 * i + 1)] = std::move(s.w1);
  }
  out.stage_lengths[2] = 0;
  for (const Word& w : out.components) out.stage_lengths[2] += w.size();
  return out;
}

// Contraction data for an element of the level-3 stabilizer: the summed true
// lengths of the eight components against (5/6) l(h) + 8, plus the per-round
// letter-count inequalities of the splitting pipeline. True lengths come from
// the ball table; the spelling passed in should be a geodesic for the source
// inequality to be sharp (ball witnesses are).
struct CancellationCheck {
  uint64_t sum_component_lengths = 0;
  uint64_t source_length = 0;
  bool bound_ok = false;               // 6*sum <= 5*l(h) + 48, exact integers
  std::array<bool, 3> pipeline_ok{};   // |w'| <= |w|+1-|w|_d etc.

  double bound() const { return 5.0 * static_cast<double>(source_length) / 6.0 + 8.0; }
};

inline CancellationCheck check_cancellation(const Word& h, const BallTable& ball) {
  OctupleSplit oct = psi3_split(h);
  CancellationCheck out;
  out.source_length = ball.length_of(h);
  for (const Word& comp : oct.components) out.sum_component_lengths += ball.length_of(comp);
  out.bound_ok = 6 * out.sum_component_lengths <= 5 * out.source_length + 48;
  const std::size_t len = oct.source_reduced.size();
  const std::size_t count_b = count_letter(oct.source_reduced, Letter::b);
  const std::size_t count_c = count_letter(oct.source_reduced, Letter::c);
  const std::size_t count_d = count_letter(oct.source_reduced, Letter::d);
  out.pipeline_ok[0] = oct.stage_lengths[0] + count_d <= len + 1;
  out.pipeline_ok[1] = oct.stage_lengths[1] + count_c <= len + 3;
  out.pipeline_ok[2] = oct.stage_lengths[2] + count_b <= len + 7;
  return out;
}

// x_1 = a, x_{i+1} = eta(x_i); distinct for every i < j <= k. Pairwise
// distinctness of these iterates is a hands-on certificate that the group
// is infinite.
inline bool eta_iterates_distinct(int k) {
  if (k < 1) throw domain_error("eta_iterates_distinct: k must be >= 1");
  if (k > kMaxEtaIterates) throw cap_error("eta_iterates_distinct: k exceeds cap");
  std::vector<Word> xs;
  xs.push_back(parse_word("a"));
  for (int i = 1; i < k; ++i) xs.push_back(eta(xs.back()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (are_equal(xs[i], xs[j])) return false;
  return true;
}

}  // namespace grig
