#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grig/growth.hpp"
#include "grig/solver.hpp"
#include "grig/stabilizer.hpp"

namespace grig {

// One verdict row of a verification suite, as printed by the CLI and the
// acceptance runner.
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

using CheckList = std::vector<CheckLine>;

inline bool all_pass(const CheckList& list) {
  for (const CheckLine& line : list)
    if (!line.pass) return false;
  return true;
}

namespace detail {

inline Word power(const Word& w, int n) {
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

inline Word random_word(std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, 3);
  Word w;
  w.reserve(len);
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>(letter(rng)));
  return w;
}

// Independent route for the star sum: direct recursion over tuples,
// B(k, n) = sum_i f(i) B(k-1, n-i) with B(0, .) = 1.
inline BigInt star_by_enumeration(const std::vector<BigInt>& f, int k, int n) {
  if (k == 0) return 1;
  BigInt total = 0;
  for (int i = 0; i <= n; ++i)
    total += f[static_cast<std::size_t>(i)] * star_by_enumeration(f, k - 1, n - i);
  return total;
}

}  // namespace detail

// Defining relations and the exact orders of ad, ac, ab.
inline CheckList check_relations() {
  CheckList out;
  auto line = [&out](std::string name, bool pass, std::string detail = "") {
    out.push_back(CheckLine{std::move(name), pass, std::move(detail)});
  };

  bool invol = true;
  for (const char* s : {"aa", "bb", "cc", "dd"}) invol = invol && is_identity(parse_word(s));
  line("generators are involutions", invol);
  line("bcd is trivial", is_identity(parse_word("bcd")));

  bool comm = true;
  for (const char* s : {"bcbc", "bdbd", "cdcd"}) comm = comm && is_identity(parse_word(s));
  line("b, c, d commute", comm);

  bool fuse = are_equal(parse_word("bc"), parse_word("d")) &&
              are_equal(parse_word("bd"), parse_word("c")) &&
              are_equal(parse_word("cd"), parse_word("b"));
  line("products of two of b, c, d give the third", fuse);

  bool pow_id = is_identity(detail::power(parse_word("ad"), 4)) &&
                is_identity(detail::power(parse_word("ac"), 8)) &&
                is_identity(detail::power(parse_word("ab"), 16));
  line("(ad)^4, (ac)^8, (ab)^16 are trivial", pow_id);

  bool pow_nt = !is_identity(detail::power(parse_word("ad"), 2)) &&
                !is_identity(detail::power(parse_word("ac"), 4)) &&
                !is_identity(detail::power(parse_word("ab"), 8));
  line("(ad)^2, (ac)^4, (ab)^8 are nontrivial", pow_nt);

  bool orders = order_exponent(parse_word("ad")) == 2 &&
                order_exponent(parse_word("ac")) == 3 &&
                order_exponent(parse_word("ab")) == 4;
  line("orders of ad, ac, ab are exactly 4, 8, 16", orders);
  return out;
}

// The six wreath-coordinate rows of the level-1 stabilizer generators, the
// surjectivity of both coordinate projections, and the defining recursions
// of b, c, d as portrait identities at depths 1..8.
inline CheckList check_psi_table() {
  CheckList out;
  const char* expected[6][2] = {{"a", "c"}, {"a", "d"}, {"", "b"},
                                {"c", "a"}, {"d", "a"}, {"b", ""}};
  auto rows = fundamental_generator_table();
  bool table_ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table_ok = table_ok && rows[i].comp0 == parse_word(expected[i][0]) &&
               rows[i].comp1 == parse_word(expected[i][1]);
  }
  out.push_back(CheckLine{"stabilizer generator coordinates match the six expected rows",
                          table_ok, ""});

  bool surjective = true;
  for (int coord = 0; coord < 2; ++coord) {
    bool seen[4] = {false, false, false, false};
    for (const SplitRow& row : rows) {
      const Word& w = coord == 0 ? row.comp0 : row.comp1;
      if (w.size() == 1) seen[static_cast<int>(w[0])] = true;
    }
    for (bool s : seen) surjective = surjective && s;
  }
  out.push_back(CheckLine{"each coordinate projection hits all four generators",
                          surjective, ""});

  bool circ = true;
  for (int m = 1; m <= 8 && circ; ++m) {
    FinitePortrait a1 = letter_portrait(Letter::a, m - 1);
    FinitePortrait b1 = letter_portrait(Letter::b, m - 1);
    FinitePortrait c1 = letter_portrait(Letter::c, m - 1);
    FinitePortrait d1 = letter_portrait(Letter::d, m - 1);
    circ = letter_portrait(Letter::b, m) == wreath_compose(a1, c1, false) &&
           letter_portrait(Letter::c, m) == wreath_compose(a1, d1, false) &&
           letter_portrait(Letter::d, m) ==
               wreath_compose(FinitePortrait::identity(m - 1), b1, false);
  }
  out.push_back(
      CheckLine{"b=(a,c), c=(a,d), d=(I,b) hold as portraits at depths 1..8", circ, ""});
  return out;
}

// Closure enumeration sizes of the depth-m truncation groups.
inline CheckList check_am_sizes(int max_m = 4) {
  CheckList out;
  for (int m = 1; m <= max_m; ++m) {
    std::size_t expect = std::size_t{1} << ((std::size_t{1} << m) - 1);
    std::size_t got = enumerate_am(m).size();
    std::ostringstream detail;
    detail << "|A_" << m << "| = " << got << ", expected " << expect;
    out.push_back(CheckLine{"truncation group size at depth " + std::to_string(m),
                            got == expect, detail.str()});
  }
  return out;
}

// Exact stabilizer indices, their doubly exponential bound, representative
// lengths, and the order-8 dihedral subgroup generated by a and d.
inline CheckList check_indices(int max_level = 4) {
  CheckList out;
  static constexpr std::size_t kExactIndex[5] = {1, 2, 8, 128, 4096};  // fixture, levels 0..4
  for (int n = 1; n <= max_level; ++n) {
    CosetTable t = build_coset_table(n);
    std::size_t bound = std::size_t{1} << ((std::size_t{1} << n) - 1);
    bool ok = t.index() <= bound;
    if (n <= 4) ok = ok && t.index() == kExactIndex[n];
    std::size_t max_rep = 0;
    for (const auto& [word, image] : t.representatives)
      max_rep = std::max(max_rep, word.size());
    ok = ok && max_rep <= t.index() - 1;
    std::ostringstream detail;
    detail << "index " << t.index() << " (bound " << bound << "), longest representative "
           << max_rep;
    out.push_back(CheckLine{"stabilizer index at level " + std::to_string(n), ok,
                            detail.str()});
  }
  SmallGroupTable ad = closure_ad();
  std::ostringstream detail;
  detail << "closure size " << ad.size();
  out.push_back(CheckLine{"subgroup generated by a and d is dihedral of order 8",
                          ad.size() == 8 &&
                              is_dihedral8(ad, parse_word("a"), parse_word("d")),
                          detail.str()});
  return out;
}

// Per-type halving bounds on the wreath coordinates, the +1 sum bound, and
// the reverse bound with constant 50, over every element of the ball with
// exact BFS lengths on both sides.
inline CheckList check_split_length_bounds(const BallResult& ball) {
  CheckList out;
  std::size_t type_viol = 0, sum_viol = 0, reverse_viol = 0, total = 0;
  for (const auto& [key, entry] : ball.table.elements) {
    ++total;
    const Word& w = entry.witness;
    WordType type = classify_spelling(w);
    WreathSplit s = raw_split(w);
    uint64_t l0 = ball.table.length_of(s.w0);
    uint64_t l1 = ball.table.length_of(s.w1);
    uint64_t lg = entry.length;
    uint64_t twice_bound = split_bound_times_two(type, lg);
    if (2 * l0 > twice_bound || 2 * l1 > twice_bound) ++type_viol;
    if (l0 + l1 > lg + 1) ++sum_viol;
    if (lg > 2 * l0 + 2 * l1 + 50) ++reverse_viol;
  }
  std::ostringstream base;
  base << total << " elements at radius " << ball.radius_reached;
  out.push_back(CheckLine{"per-type coordinate length bounds", type_viol == 0,
                          base.str() + ", violations " + std::to_string(type_viol)});
  out.push_back(CheckLine{"coordinate lengths sum to at most length + 1", sum_viol == 0,
                          base.str() + ", violations " + std::to_string(sum_viol)});
  out.push_back(CheckLine{"length at most twice the coordinate sum plus 50",
                          reverse_viol == 0,
                          base.str() + ", violations " + std::to_string(reverse_viol)});
  return out;
}

// The level-3 contraction: for every ball element of the level-3 stabilizer,
// the eight component lengths sum to at most (5/6) l(h) + 8, and the
// splitting pipeline obeys its per-round letter-count inequalities.
inline CheckList check_cancellation_suite(const BallResult& ball) {
  CheckList out;
  std::size_t tested = 0, bound_viol = 0, pipeline_viol = 0;
  for (const auto& [key, entry] : ball.table.elements) {
    if (odd_a_count(entry.witness) || !in_stabilizer(entry.witness, 3)) continue;
    ++tested;
    CancellationCheck c = check_cancellation(entry.witness, ball.table);
    if (!c.bound_ok) ++bound_viol;
    if (!c.pipeline_ok[0] || !c.pipeline_ok[1] || !c.pipeline_ok[2]) ++pipeline_viol;
  }
  std::ostringstream base;
  base << tested << " stabilizer elements within radius " << ball.radius_reached;
  out.push_back(CheckLine{"component length sum within (5/6) l(h) + 8", bound_viol == 0,
                          base.str() + ", violations " + std::to_string(bound_viol)});
  out.push_back(CheckLine{"splitting pipeline letter-count bounds", pipeline_viol == 0,
                          base.str() + ", violations " + std::to_string(pipeline_viol)});
  return out;
}

// Growth series sanity plus the star-convolution machinery: monotonicity,
// submultiplicativity, the recursion bound, the sandwich, the enumeration
// oracle for the convolution, and solver agreement with portrait keys.
inline CheckList check_growth_bounds(const BallResult& ball,
                                     std::size_t pair_samples = 100000,
                                     uint64_t seed = 0x67726f77) {
  CheckList out;
  const GrowthSeries& g = ball.series;
  const int N = g.radius;

  bool first_two = g.gamma(0) == 1 && N >= 1 && g.gamma(1) == 5;
  {
    const char* five[] = {"", "a", "b", "c", "d"};
    for (int i = 0; i < 5 && first_two; ++i)
      for (int j = i + 1; j < 5; ++j)
        first_two = first_two && !are_equal(parse_word(five[i]), parse_word(five[j]));
  }
  out.push_back(CheckLine{"gamma(0) = 1 and gamma(1) = 5 with solver-certified distinctness",
                          first_two, ""});

  bool mono = true;
  for (int n = 0; n < N; ++n) mono = mono && g.gamma(n) < g.gamma(n + 1);
  out.push_back(CheckLine{"gamma strictly increasing", mono,
                          "radius " + std::to_string(N)});

  bool subm = true;
  for (int m = 0; m <= N && subm; ++m)
    for (int n = 0; m + n <= N; ++n)
      if (g.gamma(m + n) > g.gamma(m) * g.gamma(n)) {
        subm = false;
        break;
      }
  out.push_back(CheckLine{"gamma submultiplicative", subm, ""});

  BoundReport upper = verify_upper_recursion(g);
  out.push_back(CheckLine{"gamma(n) <= 128 * gamma*8(floor(5n/6) + 114)", upper.all_pass(),
                          std::to_string(upper.checked()) + " instances (argument clamped "
                          "to the computed radius; the star table is monotone)"});

  BoundReport shifted = verify_upper_recursion_shifted(g);
  out.push_back(CheckLine{"shifted recursion form", shifted.all_pass(),
                          std::to_string(shifted.checked()) +
                              " evaluable instances (needs radius >= 137)"});

  BoundReport sandwich = verify_sandwich(g.values, 8);
  out.push_back(CheckLine{"star sandwich bounds on gamma", sandwich.all_pass(),
                          std::to_string(sandwich.checked()) + " instances"});

  bool star_oracle = true;
  for (int k = 1; k <= 3 && star_oracle; ++k)
    for (int n = 0; n <= std::min(N, 12); ++n)
      if (star_convolution(g.values, k, n) != detail::star_by_enumeration(g.values, k, n)) {
        star_oracle = false;
        break;
      }
  out.push_back(CheckLine{"star convolution matches tuple enumeration (n <= 12, k <= 3)",
                          star_oracle, ""});

  // Key-vs-solver agreement, two-sided: random pairs must agree on equality,
  // and relator-mutated spellings of table witnesses must collide keys.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len_dist(0, static_cast<std::size_t>(N));
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < pair_samples; ++i) {
    Word u = detail::random_word(len_dist(rng), rng);
    Word v = detail::random_word(len_dist(rng), rng);
    bool keys_agree = portrait_of(u, ball.table.key_depth) ==
                      portrait_of(v, ball.table.key_depth);
    if (keys_agree != are_equal(u, v)) ++mismatches;
  }
  static const char* kRelators[] = {"aa", "bb", "cc", "dd", "bcd", "cdb", "dbc",
                                    "adadadad"};
  std::vector<const Word*> witnesses;
  witnesses.reserve(ball.table.elements.size());
  for (const auto& [key, entry] : ball.table.elements) witnesses.push_back(&entry.witness);
  std::uniform_int_distribution<std::size_t> wit_dist(0, witnesses.size() - 1);
  std::uniform_int_distribution<std::size_t> rel_dist(0, std::size(kRelators) - 1);
  for (std::size_t i = 0; i < pair_samples / 10; ++i) {
    const Word& base = *witnesses[wit_dist(rng)];
    Word relator = parse_word(kRelators[rel_dist(rng)]);
    std::uniform_int_distribution<std::size_t> pos_dist(0, base.size());
    Word mutated = base;
    std::size_t pos = pos_dist(rng);
    mutated.insert(mutated.begin() + static_cast<std::ptrdiff_t>(pos), relator.begin(),
                   relator.end());
    bool keys_agree =
        portrait_of(mutated, ball.table.key_depth) == portrait_of(base, ball.table.key_depth);
    if (!keys_agree || !are_equal(mutated, base)) ++mismatches;
  }
  out.push_back(CheckLine{"portrait keys agree with the solver on sampled pairs",
                          mismatches == 0,
                          std::to_string(pair_samples + pair_samples / 10) +
                              " pairs, mismatches " + std::to_string(mismatches)});

  LowerFit fit = search_lower_recursion(g.values, 2, 1, N);
  std::ostringstream fit_detail;
  if (fit.found)
    fit_detail << "premise holds on 1.." << N << " with C = " << fit.C
               << ", alpha = " << fit.alpha << " (nu = " << fit.consts.nu << ")";
  else
    fit_detail << "no grid instance found";
  out.push_back(
      CheckLine{"lower recursion grid instance recorded", fit.found, fit_detail.str()});
  return out;
}

// Every element within the sample radius has order 2^k within the doubling
// budget; the exponent histogram is reported for fixture comparison.
inline CheckList check_periodicity(const BallResult& ball, int sample_radius = 8,
                                   int k_max = 30,
                                   std::map<int, std::size_t>* histogram_out = nullptr) {
  CheckList out;
  std::map<int, std::size_t> histogram;
  std::size_t tested = 0, unresolved = 0;
  for (const auto& [key, entry] : ball.table.elements) {
    if (entry.length > static_cast<uint32_t>(sample_radius)) continue;
    ++tested;
    std::optional<int> k = order_exponent(entry.witness, k_max);
    if (!k)
      ++unresolved;
    else
      ++histogram[*k];
  }
  std::ostringstream detail;
  detail << tested << " elements within radius " << sample_radius << "; exponents:";
  for (const auto& [k, count] : histogram) detail << " 2^" << k << " x" << count;
  out.push_back(CheckLine{"all sampled orders are powers of two within the budget",
                          unresolved == 0 && tested > 0, detail.str()});
  if (histogram_out) *histogram_out = std::move(histogram);
  return out;
}

inline CheckList check_eta_chain(int k = 15) {
  CheckList out;
  out.push_back(CheckLine{"eta iterates x_1..x_" + std::to_string(k) + " pairwise distinct",
                          eta_iterates_distinct(k), ""});
  return out;
}

// The stretched-exponential constants: the exponent formula on a parameter
// grid against an independent evaluation route, the branch continuity at
// C = 1, and rejection of alpha >= 1.
inline CheckList check_lower_constants() {
  CheckList out;
  static constexpr struct {
    int m;
    double alpha;
  } kGrid[10] = {{2, 0.5},  {2, 0.25},      {2, 0.75}, {3, 0.5}, {3, 1.0 / 3},
                 {4, 0.5},  {4, 0.2},       {5, 0.4},  {8, 0.5}, {16, 0.125}};
  bool formula_ok = true;
  for (const auto& point : kGrid) {
    LowerConstants c = lower_bound_constants(point.m, point.alpha, 1.0);
    double reference = std::log2(static_cast<double>(point.m)) / std::log2(1.0 / point.alpha);
    if (std::fabs(c.nu - reference) > 1e-12 * std::max(1.0, std::fabs(reference)))
      formula_ok = false;
  }
  formula_ok = formula_ok &&
               std::fabs(lower_bound_constants(2, 0.5, 1.0).nu - 1.0) <= 1e-12 &&
               std::fabs(lower_bound_constants(4, 0.5, 1.0).nu - 2.0) <= 1e-12;
  out.push_back(
      CheckLine{"nu = log m / log(1/alpha) on a 10-point grid", formula_ok, "tolerance 1e-12"});

  bool continuity = true;
  for (int m : {2, 3, 5}) {
    double lo = lower_bound_constants(m, 0.5, std::exp(-1e-9)).A;
    double hi = lower_bound_constants(m, 0.5, std::exp(1e-9)).A;
    if (std::fabs(lo - hi) > 1e-6 * std::max(1.0, std::fabs(hi))) continuity = false;
  }
  out.push_back(CheckLine{"constant branches agree at C = 1", continuity, ""});

  bool rejected = true;
  for (double alpha : {1.0, 1.5, 2.0}) {
    try {
      lower_bound_constants(2, alpha, 1.0);
      rejected = false;
    } catch (const domain_error&) {
    }
  }
  out.push_back(CheckLine{"alpha >= 1 rejected", rejected, ""});
  return out;
}

}  // namespace grig
