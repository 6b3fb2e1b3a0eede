#include <random>

#include <catch2/catch.hpp>

#include "grig/solver.hpp"
#include "grig/word.hpp"

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

TEST_CASE("word parsing and formatting") {
  CHECK(word_str(parse_word("abadac")) == "abadac");
  CHECK(parse_word("").empty());
  try {
    parse_word("abxd");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("reduction rewrites") {
  CHECK(word_str(reduce(parse_word("bc")).letters) == "d");
  CHECK(word_str(reduce(parse_word("cb")).letters) == "d");
  CHECK(word_str(reduce(parse_word("bd")).letters) == "c");
  CHECK(word_str(reduce(parse_word("cd")).letters) == "b");
  CHECK(reduce(parse_word("aa")).letters.empty());
  CHECK(reduce(parse_word("bcd")).letters.empty());
  CHECK(reduce(parse_word("dbc")).letters.empty());
  CHECK(word_str(reduce(parse_word("abbc")).letters) == "ac");
  // d then c fuse to b, which cancels against the trailing b
  CHECK(word_str(reduce(parse_word("badcb")).letters) == "ba");
}

TEST_CASE("reduction is idempotent and never grows the word") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(0, 1000);
  for (int i = 0; i < 10000; ++i) {
    Word w = random_word(len(rng), rng);
    ReducedWord r = reduce(w);
    CHECK(r.letters.size() <= w.size());
    CHECK(is_reduced(r.letters));
    CHECK(reduce(r.letters).letters == r.letters);
  }
}

TEST_CASE("reduction preserves the group element") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> len(0, 60);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(len(rng), rng);
    CHECK(portrait_of(w, 6) == portrait_of(reduce(w).letters, 6));
  }
}

TEST_CASE("spelling types by boundary letters") {
  CHECK(reduce(parse_word("a")).type == WordType::I);
  CHECK(reduce(parse_word("aba")).type == WordType::I);
  CHECK(reduce(parse_word("bab")).type == WordType::IV);
  CHECK(reduce(parse_word("b")).type == WordType::IV);
  CHECK(reduce(parse_word("adad")).type == WordType::II);
  CHECK(reduce(parse_word("dada")).type == WordType::III);
  // the two spellings above name the same element
  CHECK(are_equal(parse_word("adad"), parse_word("dada")));
  // the empty spelling joins the even-length family by convention
  CHECK(reduce(Word{}).type == WordType::II);
}

TEST_CASE("inverse is reversal") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(40, rng);
    CHECK(inverse(inverse(w)) == w);
    CHECK(is_identity(concat(w, inverse(w))));
  }
}

TEST_CASE("letter counting and parity") {
  Word w = parse_word("abacada");
  CHECK(count_letter(w, Letter::a) == 4);
  CHECK(count_letter(w, Letter::b) == 1);
  CHECK(!odd_a_count(parse_word("abab")));
  CHECK(!odd_a_count(parse_word("aba")));
  CHECK(odd_a_count(parse_word("ab")));
}

TEST_CASE("eta substitution") {
  CHECK(word_str(eta(parse_word("a"))) == "aba");
  CHECK(word_str(eta(parse_word("aba"))) == "abadaba");
  CHECK(word_str(eta(parse_word("bcd"))) == "dbc");

  // iterates double in length: |x_i| = 2^i - 1
  Word x = parse_word("a");
  for (int i = 1; i <= 12; ++i) {
    CHECK(x.size() == (std::size_t{1} << i) - 1);
    x = eta(x);
  }
}

TEST_CASE("eta iterates are pairwise distinct") {
  std::vector<Word> xs{parse_word("a")};
  for (int i = 1; i < 12; ++i) xs.push_back(eta(xs.back()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) CHECK(!are_equal(xs[i], xs[j]));
}
