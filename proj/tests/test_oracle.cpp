#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "crosscount/corpus.hpp"
#include "crosscount/crossing.hpp"
#include "crosscount/oracle.hpp"
#include "helpers.hpp"

using namespace crosscount;
using namespace crosscount::testing;

TEST_CASE("brute runs examples") {
  CHECK(oracle::brute_runs(bytes("abaabab")) == std::vector<Run>{{1, 6, 3}, {3, 4, 1}, {4, 7, 2}});
  CHECK(oracle::brute_runs(bytes("aaaa")) == std::vector<Run>{{1, 4, 1}});
  CHECK(oracle::brute_runs(bytes("abcd")).empty());
}

TEST_CASE("brute counts examples") {
  CHECK(oracle::brute_count_crossing(bytes("aaab"), 2) == 5);
  CHECK(oracle::brute_crossing_all(bytes("aaab")) == CountArray{4, 5, 6, 4});
  CHECK(oracle::brute_count_noncrossing(bytes("aaab"), 1) == 5);
  CHECK(oracle::brute_noncrossing_all(bytes("aaa")) == CountArray{2, 1, 2});
  CHECK(oracle::brute_noncrossing_all(bytes("abcd")) == CountArray{6, 4, 4, 6});
}

TEST_CASE("brute factor tables examples") {
  const FactorTables f = oracle::brute_factor_tables(bytes("aaab"));
  CHECK(f.lpnf == std::vector<std::int32_t>{0, 1, 1, 0});
  CHECK(f.lnf == std::vector<std::int32_t>{2, 1, 0, 0});
}

TEST_CASE("catalog ids agree with string equality") {
  const std::string s = "abaababaab";
  const oracle::SubstringCatalog cat(bytes(s));
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t la = 1; a + la <= s.size(); ++la) {
      const std::size_t c = cat.canonical(a, la);
      CHECK(s.substr(c, la) == s.substr(a, la));
      CHECK(s.find(s.substr(a, la)) == c);
    }
  }
}

TEST_CASE("crossing and duplicate counts agree with multiplicities") {
  // Duplicates at k = crossing occurrences minus crossing distinct substrings.
  const RandomCorpus corpus(100, 40, {1, 2, 3}, 61);
  for (const std::string& s : corpus.strings) {
    const auto n = static_cast<std::int64_t>(s.size());
    const CountArray c = oracle::brute_crossing_all(bytes(s));
    for (std::int64_t k = 1; k <= n; ++k) {
      std::map<std::string, int> crossing;
      std::set<std::string> avoiding;
      for (std::int64_t i = 1; i <= n; ++i) {
        for (std::int64_t j = i; j <= n; ++j) {
          const std::string f = s.substr(i - 1, j - i + 1);
          if (i <= k && k <= j) {
            ++crossing[f];
          } else {
            avoiding.insert(f);
          }
        }
      }
      std::int64_t dups = 0;
      for (const auto& [f, mult] : crossing) {
        dups += mult - 1;
      }
      REQUIRE(c[k - 1] == static_cast<std::int64_t>(crossing.size()));
      REQUIRE(intervals_through(k, n) - c[k - 1] == dups);
      REQUIRE(oracle::brute_count_noncrossing(bytes(s), k) == static_cast<std::int64_t>(avoiding.size()));
    }
  }
}

TEST_CASE("interleave_markers") {
  CHECK(oracle::interleave_markers(bytes("ab")) == bytes("#a#b#"));
  CHECK(oracle::interleave_markers(bytes("")) == bytes("#"));
  CHECK_THROWS_AS(oracle::interleave_markers(bytes("a#b")), std::invalid_argument);
  const Text x = integers("ab");
  const Text y = oracle::interleave_markers(x);
  CHECK(y.size() == 5);
  CHECK(y.symbols()[0] == 3);
}

TEST_CASE("is_square_free") {
  CHECK(oracle::is_square_free(bytes("abcab")));
  CHECK_FALSE(oracle::is_square_free(bytes("abab")));
  CHECK_FALSE(oracle::is_square_free(bytes("aa")));
  CHECK(oracle::is_square_free(bytes("")));
}

TEST_CASE("square-free words are exactly those whose marked form has every crossing interval distinct") {
  std::mt19937_64 rng(71);
  int square_free_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> len(1, 60);
    const std::size_t n = len(rng);
    const std::string x = trial % 2 == 0 ? gen_corpus(CorpusKind::square_free_ternary, n, 3, rng())
                                         : random_string(rng, n, 3);
    const Text phi = oracle::interleave_markers(bytes(x));
    const auto m = static_cast<std::int64_t>(phi.size());
    const CountArray c = count_crossing_all(phi);
    bool all_intervals = true;
    for (std::int64_t k = 1; k <= m; ++k) {
      all_intervals = all_intervals && c[k - 1] == intervals_through(k, m);
    }
    const bool sf = oracle::is_square_free(bytes(x));
    square_free_seen += sf;
    REQUIRE_MESSAGE(sf == all_intervals, x);
  }
  CHECK(square_free_seen >= 100);
}
