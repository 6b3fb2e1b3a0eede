// Acceptance runner: executes the twelve release criteria end to end and
// prints one PASS/FAIL line each. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "grig/bench.hpp"
#include "grig/checks.hpp"
#include "grig/series_io.hpp"

using namespace grig;

namespace {

struct Runner {
  int failures = 0;

  void report(int id, const std::string& name, bool pass, double seconds,
              const std::string& detail) {
    std::printf("%s %2d %s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(), seconds,
                detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }

  template <typename Fn>
  void criterion(int id, const std::string& name, double time_limit_secs, Fn&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
      pass = body(detail);
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > time_limit_secs) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over the ") +
                std::to_string(static_cast<int>(time_limit_secs)) + " s budget";
    }
    report(id, name, pass, secs, detail);
  }
};

std::string summarize(const CheckList& list) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const CheckLine& line : list) {
    if (line.pass)
      ++passed;
    else
      out << " [failed: " << line.name << (line.detail.empty() ? "" : " | " + line.detail)
          << "]";
  }
  return std::to_string(passed) + "/" + std::to_string(list.size()) + " checks" + out.str();
}

int oracle_depth(std::size_t len) {
  int d = 0;
  while ((std::size_t{1} << d) < len + 2) ++d;
  return d + 3;
}

}  // namespace

int main() {
  Runner runner;
  const int kRadius = 12;

  runner.criterion(1, "relation suite with exact orders 4, 8, 16", 1.0,
                   [](std::string& detail) {
                     CheckList list = check_relations();
                     detail = summarize(list);
                     return all_pass(list);
                   });

  runner.criterion(2, "truncation group sizes 2, 8, 128, 32768", 30.0,
                   [](std::string& detail) {
                     CheckList list = check_am_sizes(4);
                     detail = summarize(list);
                     return all_pass(list);
                   });

  runner.criterion(3, "generator coordinate table and portrait recursions", 1.0,
                   [](std::string& detail) {
                     CheckList list = check_psi_table();
                     detail = summarize(list);
                     return all_pass(list);
                   });

  BallResult ball = enumerate_ball(kRadius, 0, 600.0);

  runner.criterion(4, "radius-12 ball: monotone, submultiplicative, key-solver agreement",
                   600.0, [&ball](std::string& detail) {
                     bool ok = ball.complete && ball.radius_reached >= 10;
                     const GrowthSeries& g = ball.series;
                     for (int n = 0; n < g.radius; ++n) ok = ok && g.gamma(n) < g.gamma(n + 1);
                     for (int m = 0; m <= g.radius; ++m)
                       for (int n = 0; m + n <= g.radius; ++n)
                         ok = ok && g.gamma(m + n) <= g.gamma(m) * g.gamma(n);

                     // solver vs portrait key on 100000 sampled pairs
                     std::mt19937_64 rng(0xba11);
                     std::uniform_int_distribution<std::size_t> len(0, 12);
                     std::uniform_int_distribution<int> letter(0, 3);
                     auto random_word = [&](std::size_t n) {
                       Word w;
                       for (std::size_t i = 0; i < n; ++i)
                         w.push_back(static_cast<Letter>(letter(rng)));
                       return w;
                     };
                     std::size_t mismatches = 0;
                     for (int i = 0; i < 100000; ++i) {
                       Word u = random_word(len(rng));
                       Word v = random_word(len(rng));
                       bool same_key = portrait_of(u, ball.table.key_depth) ==
                                       portrait_of(v, ball.table.key_depth);
                       if (same_key != are_equal(u, v)) ++mismatches;
                     }
                     // solver vs portrait triviality on 100000 single words
                     for (int i = 0; i < 100000; ++i) {
                       Word w = random_word(len(rng));
                       if (is_identity(w) !=
                           portrait_of(w, oracle_depth(w.size())).is_identity())
                         ++mismatches;
                     }
                     std::ostringstream out;
                     out << ball.table.elements.size() << " elements, gamma(12) = "
                         << g.gamma(g.radius).get_str() << ", mismatches " << mismatches;
                     detail = out.str();
                     return ok && mismatches == 0;
                   });

  runner.criterion(5, "per-type split bounds, sum bound +1, reverse bound +50", 60.0,
                   [&ball](std::string& detail) {
                     CheckList list = check_split_length_bounds(ball);
                     detail = summarize(list);
                     return all_pass(list);
                   });

  runner.criterion(6, "level-3 contraction (5/6)l+8 and pipeline inequalities", 60.0,
                   [&ball](std::string& detail) {
                     CheckList list = check_cancellation_suite(ball);
                     detail = summarize(list);
                     return all_pass(list);
                   });

  runner.criterion(7, "orders within radius 8 are powers of two (fixture histogram)", 60.0,
                   [&ball](std::string& detail) {
                     std::map<int, std::size_t> histogram;
                     CheckList list = check_periodicity(ball, 8, 30, &histogram);
                     const std::map<int, std::size_t> expected{
                         {0, 1}, {1, 36}, {2, 42}, {3, 72}, {4, 120}};
                     bool ok = all_pass(list) && histogram == expected;
                     detail = summarize(list);
                     if (histogram != expected) detail += " [histogram drifted from fixture]";
                     return ok;
                   });

  runner.criterion(8, "stabilizer indices 2, 8, 128, 4096 and the dihedral subgroup", 60.0,
                   [](std::string& detail) {
                     CheckList list = check_indices(4);
                     detail = summarize(list);
                     return all_pass(list);
                   });

  runner.criterion(9, "eta iterates x_1..x_15 pairwise distinct", 120.0,
                   [](std::string& detail) {
                     CheckList list = check_eta_chain(15);
                     detail = summarize(list);
                     return all_pass(list);
                   });

  runner.criterion(10, "star recursion bound, enumeration oracle, sandwich", 120.0,
                    [&ball](std::string& detail) {
                      const GrowthSeries& g = ball.series;
                      BoundReport upper = verify_upper_recursion(g);
                      BoundReport sandwich = verify_sandwich(g.values, 8);
                      bool star_oracle = true;
                      for (int k = 1; k <= 3; ++k)
                        for (int n = 0; n <= 12; ++n)
                          if (star_convolution(g.values, k, n) !=
                              grig::detail::star_by_enumeration(g.values, k, n))
                            star_oracle = false;
                      std::ostringstream out;
                      out << "recursion " << (upper.all_pass() ? "ok" : "FAILED") << " on "
                          << upper.checked() << " instances, sandwich "
                          << (sandwich.all_pass() ? "ok" : "FAILED") << ", oracle "
                          << (star_oracle ? "ok" : "FAILED");
                      detail = out.str();
                      return upper.all_pass() && sandwich.all_pass() && star_oracle;
                    });

  runner.criterion(11, "stretched-exponential constants and alpha rejection", 10.0,
                    [](std::string& detail) {
                      CheckList list = check_lower_constants();
                      detail = summarize(list);
                      return all_pass(list);
                    });

  runner.criterion(12, "word-problem scaling to 2^20 letters", 60.0,
                    [](std::string& detail) {
                      BenchResult r = run_solver_bench(std::size_t{1} << 20, 8, 0xbe9c);
                      std::ostringstream out;
                      out << "growth per doubling over the top three " << r.top3_per_doubling
                          << " (limit 2.5, worst single ratio " << r.max_top3_ratio
                          << "), log-log slope " << r.loglog_slope << " (limit 1.5), "
                          << r.total_seconds << " s total";
                      detail = out.str();
                      return r.top3_per_doubling <= 2.5 && r.loglog_slope < 1.5 &&
                             r.points.back().seconds > 0.0;
                    });

  std::printf("%s: %d of 12 criteria failed\n", runner.failures == 0 ? "OK" : "FAILED",
              runner.failures);
  return runner.failures == 0 ? 0 : 1;
}
