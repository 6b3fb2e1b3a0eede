#include <random>

#include <catch2/catch.hpp>

#include "grig/solver.hpp"
#include "grig/split.hpp"

using namespace grig;

namespace {

Word random_word(std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, 3);
  Word w;
  w.reserve(len);
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>(letter(rng)));
  return w;
}

}  // namespace

TEST_CASE("coordinates of single generators") {
  WreathSplit b = psi_split(parse_word("b"));
  CHECK(word_str(b.w0) == "a");
  CHECK(word_str(b.w1) == "c");
  CHECK(!b.sigma);

  WreathSplit d = psi_split(parse_word("d"));
  CHECK(d.w0.empty());
  CHECK(word_str(d.w1) == "b");
  CHECK(!d.sigma);

  WreathSplit a = psi_split(parse_word("a"));
  CHECK(a.w0.empty());
  CHECK(a.w1.empty());
  CHECK(a.sigma);
}

TEST_CASE("swap bit equals the a-count parity") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> len(0, 200);
  for (int i = 0; i < 2000; ++i) {
    Word w = random_word(len(rng), rng);
    CHECK(raw_split(w).sigma == odd_a_count(w));
  }
}

TEST_CASE("splitting an unreduced spelling is still faithful") {
  WreathSplit s = raw_split(parse_word("bb"));
  CHECK(word_str(s.w0) == "aa");
  CHECK(word_str(s.w1) == "cc");
  CHECK(is_identity(s.w0));
  CHECK(is_identity(s.w1));
}

TEST_CASE("split coordinates reassemble to the original action") {
  // the rewriting tables against the portrait action: two independent routes
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::size_t> len(0, 50);
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(len(rng), rng);
    WreathSplit s = raw_split(w);
    FinitePortrait reassembled =
        wreath_compose(portrait_of(s.w0, 5), portrait_of(s.w1, 5), s.sigma);
    CHECK(reassembled == portrait_of(w, 6));
  }
}

TEST_CASE("reduced spellings split within the per-type length bounds") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> len(0, 400);
  for (int i = 0; i < 3000; ++i) {
    ReducedWord r = reduce(random_word(len(rng), rng));
    WreathSplit s = raw_split(r.letters);
    std::size_t twice = split_bound_times_two(r.type, r.letters.size());
    CHECK(2 * s.w0.size() <= twice);
    CHECK(2 * s.w1.size() <= twice);
  }
}

TEST_CASE("psi_split reduces its input first") {
  WreathSplit s = psi_split(parse_word("bbb"));  // reduces to b
  CHECK(word_str(s.w0) == "a");
  CHECK(word_str(s.w1) == "c");
}
