#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "grig/errors.hpp"
#include "grig/solver.hpp"

namespace grig {

inline constexpr std::size_t kMaxBenchLength = std::size_t{1} << 24;

// Uniform random reduced word of the exact requested length: alternates a
// with random letters from {b,c,d} starting at a. Lengths divisible by 4
// carry an even a-count, so the solver's parity shortcut does not trigger
// and the halving recursion is actually exercised.
inline Word random_reduced_word(std::size_t length, std::mt19937_64& rng) {
  Word w;
  w.reserve(length);
  std::uniform_int_distribution<int> star(1, 3);
  for (std::size_t i = 0; i < length; ++i)
    w.push_back(i % 2 == 0 ? Letter::a : static_cast<Letter>(star(rng)));
  return w;
}

struct BenchPoint {
  std::size_t length = 0;
  double seconds = 0.0;  // per solve
  std::size_t solves = 0;
};

struct BenchResult {
  uint64_t seed = 0;
  std::vector<BenchPoint> points;
  std::vector<double> doubling_ratios;  // t(2n)/t(n), one per consecutive pair
  double max_top3_ratio = 0.0;          // worst single ratio among the last three
  double top3_per_doubling = 0.0;       // (t_top / t_top-3)^(1/3), growth per doubling
                                        // measured across the top three doublings
  double loglog_slope = 0.0;            // log t vs log n, upper half of points
  double per_length_slope = 0.0;        // log(t/n) vs log log n, upper half
  double total_seconds = 0.0;
};

namespace detail {

inline double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace detail

// Times the word-problem solver on random reduced words at doubling lengths.
// Each point runs at least `reps` solves and keeps going until the point has
// accumulated enough wall time to be measurable.
inline BenchResult run_solver_bench(std::size_t max_len = std::size_t{1} << 20, int reps = 8,
                                    uint64_t seed = 0x67726967, std::size_t min_len = 16,
                                    double min_point_secs = 0.025) {
  if (max_len > kMaxBenchLength) throw cap_error("run_solver_bench: max_len exceeds cap");
  if (reps < 1) reps = 1;
  using clock = std::chrono::steady_clock;
  std::mt19937_64 rng(seed);
  BenchResult result;
  result.seed = seed;
  const auto bench_start = clock::now();

  for (std::size_t len = min_len; len <= max_len; len *= 2) {
    std::vector<Word> inputs;
    inputs.reserve(static_cast<std::size_t>(reps));
    for (int i = 0; i < reps; ++i) inputs.push_back(random_reduced_word(len, rng));
    volatile bool sink = is_identity(inputs[0]);  // warm-up
    (void)sink;
    // Minimum over a few independently timed rounds; scheduler hiccups only
    // ever inflate a round, so the minimum is the stable per-solve estimate.
    constexpr int kRounds = 4;
    const double round_target = std::max(min_point_secs / kRounds, 0.004);
    double best = std::numeric_limits<double>::infinity();
    std::size_t total_solves = 0;
    for (int round = 0; round < kRounds; ++round) {
      std::size_t solves = 0;
      auto t0 = clock::now();
      double elapsed = 0.0;
      while (solves < static_cast<std::size_t>(reps) || elapsed < round_target) {
        sink = is_identity(inputs[solves % inputs.size()]);
        ++solves;
        elapsed = std::chrono::duration<double>(clock::now() - t0).count();
      }
      best = std::min(best, elapsed / static_cast<double>(solves));
      total_solves += solves;
    }
    result.points.push_back(BenchPoint{len, best, total_solves});
  }

  for (std::size_t i = 1; i < result.points.size(); ++i)
    result.doubling_ratios.push_back(result.points[i].seconds /
                                     result.points[i - 1].seconds);
  for (std::size_t i = result.doubling_ratios.size() >= 3 ? result.doubling_ratios.size() - 3 : 0;
       i < result.doubling_ratios.size(); ++i)
    result.max_top3_ratio = std::max(result.max_top3_ratio, result.doubling_ratios[i]);
  if (result.points.size() >= 4) {
    const double top = result.points.back().seconds;
    const double base = result.points[result.points.size() - 4].seconds;
    result.top3_per_doubling = std::cbrt(top / base);
  }

  if (result.points.size() >= 2) {
    std::vector<double> lx, ly, px, py;
    for (std::size_t i = result.points.size() / 2; i < result.points.size(); ++i) {
      const auto& p = result.points[i];
      lx.push_back(std::log(static_cast<double>(p.length)));
      ly.push_back(std::log(p.seconds));
      px.push_back(std::log(std::log(static_cast<double>(p.length))));
      py.push_back(std::log(p.seconds / static_cast<double>(p.length)));
    }
    if (lx.size() >= 2) {
      result.loglog_slope = detail::fit_slope(lx, ly);
      result.per_length_slope = detail::fit_slope(px, py);
    }
  }
  result.total_seconds = std::chrono::duration<double>(clock::now() - bench_start).count();
  return result;
}

}  // namespace grig
