// Command-line front end: word reduction, the word-problem solver, orders,
// portraits, ball enumeration with series export, the verification suites,
// and the solver scaling bench.
//
// Exit codes: 0 success/PASS, 1 FAIL, 2 usage or parse error, 3 budget or
// resource cap exhausted.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grig/bench.hpp"
#include "grig/checks.hpp"
#include "grig/series_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace grig;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOptions {
  std::string cache_dir;
  double budget_secs = 600.0;
  bool as_json = false;
};

void emit(const GlobalOptions& opts, const json& machine, const std::string& human) {
  if (opts.as_json)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << human;
}

json check_list_json(const CheckList& list) {
  json arr = json::array();
  for (const CheckLine& line : list)
    arr.push_back({{"name", line.name}, {"pass", line.pass}, {"detail", line.detail}});
  return arr;
}

std::string check_list_text(const CheckList& list) {
  std::string out;
  for (const CheckLine& line : list) {
    out += line.pass ? "PASS  " : "FAIL  ";
    out += line.name;
    if (!line.detail.empty()) out += "  [" + line.detail + "]";
    out += "\n";
  }
  return out;
}

BallResult obtain_ball(const GlobalOptions& opts, int radius, int key_depth) {
  BallResult ball = load_or_enumerate_ball(radius, key_depth, opts.cache_dir.empty()
                                                                  ? fs::path{}
                                                                  : fs::path(opts.cache_dir),
                                           opts.budget_secs);
  if (!ball.complete) {
    std::cerr << "budget exhausted at radius " << ball.radius_reached << " of " << radius
              << "; rerun with a larger --budget-secs or precompute with:\n"
              << "  grig growth --radius " << radius << " --cache-dir <dir>\n";
    std::exit(kExitBudget);
  }
  return ball;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations in the first Grigorchuk group"};
  app.require_subcommand(1);

  GlobalOptions opts;
  const char* env_cache = std::getenv("GRIG_CACHE_DIR");
  if (env_cache) opts.cache_dir = env_cache;
  app.add_option("--cache-dir", opts.cache_dir,
                 "directory for ball caches (env GRIG_CACHE_DIR)");
  app.add_option("--budget-secs", opts.budget_secs, "wall-clock budget for enumerations")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opts.as_json, "machine-readable output on stdout");

  std::string word_arg, other_arg;
  int k_max = 30, depth = 6, radius = 12, key_depth = 0, eta_count = 15;
  std::size_t max_len = std::size_t{1} << 20;
  int reps = 3;
  uint64_t seed = 0x67726967;
  std::string out_path, format = "csv", suite = "all";

  auto* cmd_reduce = app.add_subcommand("reduce", "reduce a word to its normal spelling");
  cmd_reduce->add_option("word", word_arg, "word over a,b,c,d")->required();

  auto* cmd_solve = app.add_subcommand("solve", "decide whether a word is the identity");
  cmd_solve->add_option("word", word_arg)->required();

  auto* cmd_equal = app.add_subcommand("equal", "decide whether two words are equal");
  cmd_equal->add_option("u", word_arg)->required();
  cmd_equal->add_option("v", other_arg)->required();

  auto* cmd_order = app.add_subcommand("order", "order of the element, a power of two");
  cmd_order->add_option("word", word_arg)->required();
  cmd_order->add_option("--k-max", k_max, "doubling budget")->check(CLI::NonNegativeNumber);

  auto* cmd_portrait = app.add_subcommand("portrait", "truncated action of a word");
  cmd_portrait->add_option("word", word_arg)->required();
  cmd_portrait->add_option("--depth", depth, "truncation depth")->check(CLI::PositiveNumber);

  auto* cmd_growth = app.add_subcommand("growth", "enumerate a Cayley ball");
  cmd_growth->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  cmd_growth->add_option("--key-depth", key_depth, "0 = automatic");
  cmd_growth->add_option("--out", out_path, "series file to write");
  cmd_growth->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify
      ->add_option("suite", suite,
                   "relations|lemma7|cancellation|growth-bounds|indices|all")
      ->check(CLI::IsMember(
          {"relations", "lemma7", "cancellation", "growth-bounds", "indices", "all"}));
  cmd_verify->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--eta-count", eta_count)->check(CLI::PositiveNumber);
  cmd_verify->add_option("--out", out_path, "also write the JSON report here");

  auto* cmd_bench = app.add_subcommand("bench", "word-problem scaling harness");
  cmd_bench->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
  cmd_bench->add_option("--reps", reps)->check(CLI::PositiveNumber);
  cmd_bench->add_option("--seed", seed);
  cmd_bench->add_option("--out", out_path, "timing csv to write");

  auto* cmd_export = app.add_subcommand("export", "re-export a cached ball series");
  cmd_export->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  cmd_export->add_option("--key-depth", key_depth, "0 = automatic");
  cmd_export->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  cmd_export->add_option("--out", out_path)->required();

  // global flags remain usable after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cmd_reduce->parsed()) {
      ReducedWord r = reduce(parse_word(word_arg));
      emit(opts,
           json{{"input", word_arg},
                {"reduced", word_str(r.letters)},
                {"type", word_type_name(r.type)}},
           word_str(r.letters) + "\n");
      return kExitPass;
    }

    if (cmd_solve->parsed()) {
      bool id = is_identity(parse_word(word_arg));
      emit(opts, json{{"input", word_arg}, {"identity", id}},
           std::string(id ? "identity" : "nontrivial") + "\n");
      return kExitPass;
    }

    if (cmd_equal->parsed()) {
      bool eq = are_equal(parse_word(word_arg), parse_word(other_arg));
      emit(opts, json{{"u", word_arg}, {"v", other_arg}, {"equal", eq}},
           std::string(eq ? "equal" : "distinct") + "\n");
      return kExitPass;
    }

    if (cmd_order->parsed()) {
      std::optional<int> k = order_exponent(parse_word(word_arg), k_max);
      if (!k) {
        emit(opts, json{{"input", word_arg}, {"exceeded_k_max", k_max}},
             "exceeded k_max " + std::to_string(k_max) + "\n");
        return kExitBudget;
      }
      emit(opts, json{{"input", word_arg}, {"order", uint64_t{1} << *k}, {"k", *k}},
           std::to_string(uint64_t{1} << *k) + "\n");
      return kExitPass;
    }

    if (cmd_portrait->parsed()) {
      FinitePortrait p = portrait_of(parse_word(word_arg), depth);
      emit(opts, json{{"input", word_arg}, {"depth", depth}, {"portrait", p.str()}},
           p.str() + "\n");
      return kExitPass;
    }

    if (cmd_growth->parsed()) {
      BallResult ball = obtain_ball(opts, radius, key_depth);
      if (!out_path.empty()) {
        if (format == "csv")
          export_series_csv(ball.series, out_path);
        else
          export_series_json(ball.series, out_path);
      }
      std::string table;
      for (int n = 0; n <= ball.series.radius; ++n)
        table += "gamma(" + std::to_string(n) + ") = " + ball.series.gamma(n).get_str() + "\n";
      table += "elements " + std::to_string(ball.series.element_count) + ", wall " +
               std::to_string(ball.series.wall_ms) + " ms";
      if (!ball.series.cache_id.empty()) table += ", cache " + ball.series.cache_id;
      table += "\n";
      emit(opts, series_json(ball.series), table);
      return kExitPass;
    }

    if (cmd_verify->parsed()) {
      CheckList list;
      auto need_ball = [&]() { return obtain_ball(opts, radius, 0); };
      if (suite == "relations") {
        list = check_relations();
      } else if (suite == "lemma7") {
        list = check_split_length_bounds(need_ball());
      } else if (suite == "cancellation") {
        list = check_cancellation_suite(need_ball());
      } else if (suite == "growth-bounds") {
        list = check_growth_bounds(need_ball());
      } else if (suite == "indices") {
        CheckList am = check_am_sizes(4);
        list = check_indices(4);
        list.insert(list.end(), am.begin(), am.end());
      } else {  // all
        BallResult ball = need_ball();
        for (CheckList part :
             {check_relations(), check_psi_table(), check_am_sizes(4), check_indices(4),
              check_split_length_bounds(ball), check_cancellation_suite(ball),
              check_growth_bounds(ball), check_periodicity(ball),
              check_eta_chain(eta_count), check_lower_constants()})
          list.insert(list.end(), part.begin(), part.end());
      }
      bool ok = all_pass(list);
      json report{{"suite", suite}, {"radius", radius}, {"all_pass", ok},
                  {"checks", check_list_json(list)}};
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw io_error("cannot open for writing: " + out_path);
        out << report.dump(2) << "\n";
      }
      emit(opts, report,
           check_list_text(list) + (ok ? "all checks passed\n" : "FAILURES present\n"));
      return ok ? kExitPass : kExitFail;
    }

    if (cmd_bench->parsed()) {
      BenchResult r = run_solver_bench(max_len, reps, seed);
      json points = json::array();
      std::string table = "# seed=" + std::to_string(r.seed) + "\n# reps=" +
                          std::to_string(reps) + "\nlength,seconds_per_solve,solves\n";
      for (const BenchPoint& p : r.points) {
        points.push_back(
            {{"length", p.length}, {"seconds", p.seconds}, {"solves", p.solves}});
        table += std::to_string(p.length) + "," + std::to_string(p.seconds) + "," +
                 std::to_string(p.solves) + "\n";
      }
      json report{{"seed", r.seed},
                  {"points", points},
                  {"doubling_ratios", r.doubling_ratios},
                  {"max_top3_ratio", r.max_top3_ratio},
                  {"top3_per_doubling", r.top3_per_doubling},
                  {"loglog_slope", r.loglog_slope},
                  {"per_length_slope", r.per_length_slope},
                  {"total_seconds", r.total_seconds}};
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw io_error("cannot open for writing: " + out_path);
        out << table;
      }
      table += "growth per doubling over the top three " +
               std::to_string(r.top3_per_doubling) + " (worst single " +
               std::to_string(r.max_top3_ratio) + "), log-log slope " +
               std::to_string(r.loglog_slope) + ", seed " + std::to_string(r.seed) + "\n";
      emit(opts, report, table);
      return kExitPass;
    }

    if (cmd_export->parsed()) {
      if (opts.cache_dir.empty())
        throw io_error("export needs --cache-dir or GRIG_CACHE_DIR");
      int kd = key_depth > 0 ? key_depth : default_key_depth(radius);
      auto path = ball_cache_path(opts.cache_dir, radius, kd);
      auto ball = load_ball_cache(path, radius, kd);
      if (!ball) {
        std::cerr << "no cache at " << path << "; create it with:\n  grig growth --radius "
                  << radius << " --cache-dir " << opts.cache_dir << "\n";
        return kExitBudget;
      }
      if (format == "csv")
        export_series_csv(ball->series, out_path);
      else
        export_series_json(ball->series, out_path);
      emit(opts, json{{"written", out_path}, {"radius", radius}},
           "wrote " + out_path + "\n");
      return kExitPass;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cap_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitBudget;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
