#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grig/growth.hpp"
#include "grig/stabilizer.hpp"

namespace grig {

// Natural log of an exact integer with long double precision. Ball counts fit
// 64 bits at any feasible radius; the 2-exponent path covers the rest.
inline long double log_big(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<long double>::infinity();
  if (v.fits_ulong_p()) return logl(static_cast<long double>(v.get_ui()));
  signed long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return logl(static_cast<long double>(mant)) +
         static_cast<long double>(exp2) * 0.693147180559945309417L;
}

namespace detail {

inline std::string format_log(long double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.19Le", v);
  return buf;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

// CSV layout: "# key=value" meta lines, a header row, then one row per n
// with columns n, gamma, log_gamma, loglog_gamma_over_log_n. The last column
// is the quantity to eyeball for stretched-exponential growth and is "nan"
// where the denominator degenerates (n < 2).
inline void export_series_csv(const GrowthSeries& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path.string());
  out << "# radius=" << s.radius << "\n";
  out << "# generator_set=" << s.generator_set << "\n";
  out << "# element_count=" << s.element_count << "\n";
  out << "# wall_ms=" << detail::format_double(s.wall_ms) << "\n";
  out << "# cache_id=" << s.cache_id << "\n";
  out << "n,gamma,log_gamma,loglog_gamma_over_log_n\n";
  for (std::size_t n = 0; n < s.values.size(); ++n) {
    long double lg = log_big(s.values[n]);
    out << n << ',' << s.values[n].get_str() << ',' << detail::format_log(lg) << ',';
    if (n >= 2 && lg > 0.0L)
      out << detail::format_log(logl(lg) / logl(static_cast<long double>(n)));
    else
      out << "nan";
    out << '\n';
  }
  if (!out) throw io_error("write failed: " + path.string());
}

inline GrowthSeries parse_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open for reading: " + path.string());
  GrowthSeries s;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(2, eq - 2);
      std::string val = line.substr(eq + 1);
      if (key == "radius")
        s.radius = std::stoi(val);
      else if (key == "generator_set")
        s.generator_set = val;
      else if (key == "element_count")
        s.element_count = static_cast<std::size_t>(std::stoull(val));
      else if (key == "wall_ms")
        s.wall_ms = std::stod(val);
      else if (key == "cache_id")
        s.cache_id = val;
      continue;
    }
    if (!header_seen) {  // column header row
      header_seen = true;
      continue;
    }
    auto c1 = line.find(',');
    auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw io_error("malformed csv row in " + path.string() + ": " + line);
    s.values.emplace_back(line.substr(c1 + 1, c2 - c1 - 1));
  }
  return s;
}

inline nlohmann::json series_json(const GrowthSeries& s) {
  nlohmann::json j;
  j["meta"] = {{"radius", s.radius},
               {"generator_set", s.generator_set},
               {"element_count", s.element_count},
               {"wall_ms", s.wall_ms},
               {"cache_id", s.cache_id}};
  nlohmann::json gamma = nlohmann::json::array();
  nlohmann::json log_gamma = nlohmann::json::array();
  nlohmann::json ratio = nlohmann::json::array();
  for (std::size_t n = 0; n < s.values.size(); ++n) {
    long double lg = log_big(s.values[n]);
    gamma.push_back(s.values[n].get_str());  // exact, strings survive > 2^53
    log_gamma.push_back(static_cast<double>(lg));
    if (n >= 2 && lg > 0.0L)
      ratio.push_back(static_cast<double>(logl(lg) / logl(static_cast<long double>(n))));
    else
      ratio.push_back(nullptr);
  }
  j["gamma"] = std::move(gamma);
  j["log_gamma"] = std::move(log_gamma);
  j["loglog_gamma_over_log_n"] = std::move(ratio);
  return j;
}

inline void export_series_json(const GrowthSeries& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path.string());
  out << series_json(s).dump(2) << '\n';
  if (!out) throw io_error("write failed: " + path.string());
}

// Parses and validates the schema written by export_series_json.
inline GrowthSeries parse_series_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open for reading: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw io_error("invalid json in " + path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("meta") || !j.contains("gamma") ||
      !j["meta"].is_object() || !j["gamma"].is_array())
    throw io_error("json schema mismatch in " + path.string());
  const auto& meta = j["meta"];
  for (const char* key : {"radius", "generator_set", "element_count", "wall_ms", "cache_id"})
    if (!meta.contains(key)) throw io_error(std::string("json meta missing ") + key);
  GrowthSeries s;
  s.radius = meta["radius"].get<int>();
  s.generator_set = meta["generator_set"].get<std::string>();
  s.element_count = meta["element_count"].get<std::size_t>();
  s.wall_ms = meta["wall_ms"].get<double>();
  s.cache_id = meta["cache_id"].get<std::string>();
  for (const auto& v : j["gamma"]) s.values.emplace_back(v.get<std::string>());
  return s;
}

inline nlohmann::json coset_table_json(const CosetTable& t) {
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& [word, image] : t.representatives) reps.push_back(word_str(word));
  return nlohmann::json{{"level", t.level},
                        {"index", t.representatives.size()},
                        {"representatives", std::move(reps)}};
}

// --- disk cache for enumerated balls -------------------------------------
//
// Binary layout, all integers little-endian:
//   magic "GGB1", u32 format version, u32 code version,
//   u32 radius, u32 key_depth, f64 wall_ms, u64 record count,
//   then per element: u32 length, u32 witness letters ('a'..'d' bytes),
//   and the key's sign bits as (2^key_depth - 1 + 7)/8 bytes.

inline constexpr uint32_t kCacheFormatVersion = 1;
// Bump when enumeration or key semantics change; stale caches are recomputed.
inline constexpr uint32_t kCacheCodeVersion = 1;

namespace detail {

template <typename T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
bool get(std::ifstream& in, T& v) {
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return static_cast<bool>(in);
}

}  // namespace detail

inline std::filesystem::path ball_cache_path(const std::filesystem::path& dir, int radius,
                                             int key_depth) {
  return dir / ("ball_r" + std::to_string(radius) + "_d" + std::to_string(key_depth) + "_v" +
                std::to_string(kCacheCodeVersion) + ".ggb");
}

inline void save_ball_cache(const BallResult& ball, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path.string());
  out.write("GGB1", 4);
  detail::put(out, kCacheFormatVersion);
  detail::put(out, kCacheCodeVersion);
  detail::put(out, static_cast<uint32_t>(ball.radius_reached));
  detail::put(out, static_cast<uint32_t>(ball.table.key_depth));
  detail::put(out, ball.series.wall_ms);
  detail::put(out, static_cast<uint64_t>(ball.table.elements.size()));
  const std::size_t key_bytes =
      ((std::size_t{1} << ball.table.key_depth) - 1 + 7) / 8;
  for (const auto& [key, entry] : ball.table.elements) {
    detail::put(out, entry.length);
    detail::put(out, static_cast<uint32_t>(entry.witness.size()));
    for (Letter l : entry.witness) out.put(letter_char(l));
    for (std::size_t byte = 0; byte < key_bytes; ++byte) {
      uint8_t packed = 0;
      for (int bit = 0; bit < 8; ++bit) {
        std::size_t idx = byte * 8 + static_cast<std::size_t>(bit);
        if (idx < key.sign_count() && key.sign(idx)) packed |= uint8_t(1) << bit;
      }
      out.put(static_cast<char>(packed));
    }
  }
  if (!out) throw io_error("write failed: " + path.string());
}

// Returns nullopt when the file is absent or does not match the expected
// parameters or versions; corrupt files are treated the same way.
inline std::optional<BallResult> load_ball_cache(const std::filesystem::path& path,
                                                 int radius, int key_depth) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4];
  in.read(magic, 4);
  if (!in || std::string_view(magic, 4) != "GGB1") return std::nullopt;
  uint32_t format = 0, code = 0, r = 0, kd = 0;
  double wall_ms = 0.0;
  uint64_t count = 0;
  if (!detail::get(in, format) || !detail::get(in, code) || !detail::get(in, r) ||
      !detail::get(in, kd) || !detail::get(in, wall_ms) || !detail::get(in, count))
    return std::nullopt;
  if (format != kCacheFormatVersion || code != kCacheCodeVersion ||
      r != static_cast<uint32_t>(radius) || kd != static_cast<uint32_t>(key_depth))
    return std::nullopt;

  BallResult ball;
  ball.radius_requested = radius;
  ball.radius_reached = radius;
  ball.table.key_depth = key_depth;
  const std::size_t key_bytes = ((std::size_t{1} << key_depth) - 1 + 7) / 8;
  std::vector<uint64_t> per_length(static_cast<std::size_t>(radius) + 1, 0);
  for (uint64_t i = 0; i < count; ++i) {
    uint32_t length = 0, wlen = 0;
    if (!detail::get(in, length) || !detail::get(in, wlen)) return std::nullopt;
    if (length > static_cast<uint32_t>(radius) || wlen > (1u << 20)) return std::nullopt;
    Word witness;
    witness.reserve(wlen);
    for (uint32_t k = 0; k < wlen; ++k) {
      int ch = in.get();
      if (ch < 'a' || ch > 'd') return std::nullopt;
      witness.push_back(static_cast<Letter>(ch - 'a'));
    }
    FinitePortrait key(key_depth);
    for (std::size_t byte = 0; byte < key_bytes; ++byte) {
      int ch = in.get();
      if (ch < 0) return std::nullopt;
      for (int bit = 0; bit < 8; ++bit) {
        std::size_t idx = byte * 8 + static_cast<std::size_t>(bit);
        if (idx < key.sign_count() && ((ch >> bit) & 1)) key.set_sign(idx, true);
      }
    }
    per_length[length] += 1;
    ball.table.elements.emplace(std::move(key), BallEntry{length, std::move(witness)});
  }
  if (ball.table.elements.size() != count) return std::nullopt;  // duplicate keys

  ball.series.radius = radius;
  ball.series.element_count = ball.table.elements.size();
  ball.series.wall_ms = wall_ms;
  ball.series.cache_id = path.filename().string();
  BigInt run = 0;
  for (uint64_t c : per_length) {
    run += static_cast<unsigned long>(c);
    ball.series.values.push_back(run);
  }
  return ball;
}

// Cache-through enumeration: load when a matching file exists, otherwise
// enumerate and (when a directory is given) persist. An unwritable cache
// directory fails loudly rather than silently skipping persistence.
inline BallResult load_or_enumerate_ball(int radius, int key_depth = 0,
                                         const std::filesystem::path& cache_dir = {},
                                         double budget_secs =
                                             std::numeric_limits<double>::infinity(),
                                         int radius_cap = kDefaultRadiusCap) {
  if (key_depth <= 0) key_depth = default_key_depth(radius);
  if (!cache_dir.empty()) {
    auto path = ball_cache_path(cache_dir, radius, key_depth);
    if (auto cached = load_ball_cache(path, radius, key_depth)) {
      cached->series.cache_id = path.filename().string();
      return *std::move(cached);
    }
  }
  BallResult ball = enumerate_ball(radius, key_depth, budget_secs, radius_cap);
  if (!cache_dir.empty() && ball.complete) {
    std::filesystem::create_directories(cache_dir);
    auto path = ball_cache_path(cache_dir, radius, key_depth);
    save_ball_cache(ball, path);
    ball.series.cache_id = path.filename().string();
  }
  return ball;
}

}  // namespace grig
