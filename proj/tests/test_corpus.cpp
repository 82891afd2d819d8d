#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "crosscount/corpus.hpp"
#include "crosscount/oracle.hpp"
#include "helpers.hpp"

using namespace crosscount;
using namespace crosscount::testing;

TEST_CASE("parse_corpus_kind") {
  CHECK(parse_corpus_kind("fibonacci") == CorpusKind::fibonacci);
  CHECK(parse_corpus_kind("square_free_ternary") == CorpusKind::square_free_ternary);
  CHECK_FALSE(parse_corpus_kind("nope").has_value());
}

TEST_CASE("gen_corpus shapes") {
  CHECK(gen_corpus(CorpusKind::unary, 4, 1, 0) == "aaaa");
  CHECK(gen_corpus(CorpusKind::fibonacci, 13, 2, 0) == "abaababaabaab");
  CHECK(gen_corpus(CorpusKind::random, 0, 2, 0).empty());

  const std::string r = gen_corpus(CorpusKind::random, 500, 4, 1);
  CHECK(r.size() == 500);
  CHECK(std::all_of(r.begin(), r.end(), [](char c) { return c >= 'a' && c <= 'd'; }));
  CHECK(r == gen_corpus(CorpusKind::random, 500, 4, 1));
  CHECK(r != gen_corpus(CorpusKind::random, 500, 4, 2));

  const std::string wide = gen_corpus(CorpusKind::random, 4096, 256, 3);
  CHECK(wide.size() == 4096);
  CHECK_THROWS_AS(gen_corpus(CorpusKind::random, 10, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_corpus(CorpusKind::random, 10, 257, 0), std::invalid_argument);
}

TEST_CASE("square-free ternary words are square-free") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::string s = gen_corpus(CorpusKind::square_free_ternary, 1 + seed * 7, 3, seed);
    CHECK(s.size() == 1 + seed * 7);
    CHECK(oracle::is_square_free(bytes(s)));
  }
}

TEST_CASE("markers corpus") {
  const std::string s = gen_corpus(CorpusKind::markers, 5, 3, 9);
  REQUIRE(s.size() == 11);
  for (std::size_t i = 0; i < s.size(); i += 2) {
    CHECK(s[i] == '#');
  }
  for (std::size_t i = 1; i < s.size(); i += 2) {
    CHECK(s[i] != '#');
  }
}
