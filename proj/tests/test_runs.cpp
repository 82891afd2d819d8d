#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "crosscount/corpus.hpp"
#include "crosscount/oracle.hpp"
#include "crosscount/runs.hpp"
#include "helpers.hpp"

using namespace crosscount;
using namespace crosscount::testing;

namespace {

std::set<Run> table_runs(const CandidateTable& table, bool alive_only) {
  std::set<Run> out;
  for (const auto& slot : table) {
    for (const Candidate& c : slot) {
      if (!alive_only || c.alive) {
        out.insert(c.run());
      }
    }
  }
  return out;
}

// Intervals inside [b,e] crossing m, of length >= 2p, p-periodic and not
// extendable inside [b,e].
std::set<Run> brute_node_candidates(std::string_view s, std::size_t b, std::size_t e) {
  const std::size_t m = (b + e) / 2;
  auto at = [&](std::size_t pos) { return s[pos - 1]; };
  std::set<Run> out;
  for (std::size_t p = 1; p <= (e - b + 1) / 2; ++p) {
    for (std::size_t i = b; i <= m; ++i) {
      for (std::size_t j = std::max(m + 1, i + 2 * p - 1); j <= e; ++j) {
        bool periodic = true;
        for (std::size_t q = i; q + p <= j && periodic; ++q) {
          periodic = at(q) == at(q + p);
        }
        if (!periodic) {
          continue;
        }
        const bool left_closed = i == b || at(i - 1) != at(i - 1 + p);
        const bool right_closed = j == e || at(j + 1) != at(j + 1 - p);
        if (left_closed && right_closed) {
          out.insert({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j), static_cast<std::int32_t>(p)});
        }
      }
    }
  }
  return out;
}

bool smallest_period_is(std::string_view s, const Run& r) {
  auto periodic = [&](std::int32_t q) {
    for (std::int32_t x = r.i; x + q <= r.j; ++x) {
      if (s[x - 1] != s[x + q - 1]) {
        return false;
      }
    }
    return true;
  };
  if (!periodic(r.p)) {
    return false;
  }
  for (std::int32_t q = 1; q < r.p; ++q) {
    if (periodic(q)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("candidates_at_node examples") {
  ComparisonCounter c;
  {
    const CandidateTable table = candidates_at_node(opaque("aaaa"), 1, 4, c);
    REQUIRE(table.size() >= 2);
    const std::set<Run> p1(table_runs({PeriodCandidates{}, table[1]}, false));
    CHECK(p1.count({1, 4, 1}) == 1);
  }
  {
    const CandidateTable table = candidates_at_node(opaque("ab"), 1, 2, c);
    CHECK(table_runs(table, false).empty());
  }
  {
    const CandidateTable table = candidates_at_node(opaque("abaabab"), 1, 7, c);
    REQUIRE(table.size() >= 4);
    CHECK(table_runs({PeriodCandidates{}, PeriodCandidates{}, PeriodCandidates{}, table[3]}, false).count({1, 6, 3}) ==
          1);
  }
}

TEST_CASE("candidates_at_node finds exactly the locally maximal crossing intervals") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 12; ++n) {
    for (const std::string& s : all_strings(n, "ab")) {
      const Text t = opaque(s);
      std::uniform_int_distribution<std::size_t> pick_b(1, n - 1);
      const std::size_t b = pick_b(rng);
      std::uniform_int_distribution<std::size_t> pick_e(b + 1, n);
      const std::size_t e = pick_e(rng);
      for (auto [lo, hi] : {std::pair{std::size_t{1}, n}, std::pair{b, e}}) {
        ComparisonCounter c;
        const CandidateTable table = candidates_at_node(t, lo, hi, c);
        REQUIRE_MESSAGE(table_runs(table, false) == brute_node_candidates(s, lo, hi), s << " [" << lo << "," << hi
                                                                                          << "]");
        for (std::size_t p = 0; p < table.size(); ++p) {
          for (const Candidate& cand : table[p]) {
            REQUIRE(cand.p == static_cast<std::int32_t>(p));
          }
        }
      }
    }
  }
}

TEST_CASE("remove_non_shortest_periods") {
  ComparisonCounter c;
  CandidateTable table = candidates_at_node(opaque("aaaa"), 1, 4, c);
  remove_non_shortest_periods(table);
  CHECK(table_runs(table, true) == std::set<Run>{{1, 4, 1}});

  CandidateTable abab = candidates_at_node(opaque("abab"), 1, 4, c);
  remove_non_shortest_periods(abab);
  CHECK(table_runs(abab, true) == std::set<Run>{{1, 4, 2}});

  // Every survivor has its declared period as smallest period.
  for (std::size_t n = 2; n <= 12; ++n) {
    for (const std::string& s : all_strings(n, "ab")) {
      CandidateTable tb = candidates_at_node(opaque(s), 1, n, c);
      remove_non_shortest_periods(tb);
      for (const Run& r : table_runs(tb, true)) {
        REQUIRE(smallest_period_is(s, r));
      }
    }
  }
}

TEST_CASE("is_globally_maximal") {
  ComparisonCounter c;
  CHECK(is_globally_maximal(opaque("abaabab"), {1, 6, 3, true}, c));
  CHECK_FALSE(is_globally_maximal(opaque("aaaa"), {1, 3, 1, true}, c));
  CHECK(is_globally_maximal(opaque("aaaa"), {1, 4, 1, true}, c));
}

TEST_CASE("find_runs examples") {
  CHECK(find_runs(opaque("abaabab")) == std::vector<Run>{{1, 6, 3}, {3, 4, 1}, {4, 7, 2}});
  CHECK(find_runs(opaque("aaaa")) == std::vector<Run>{{1, 4, 1}});
  CHECK(find_runs(opaque("abcd")).empty());
  CHECK(find_runs(opaque("")).empty());
  CHECK(find_runs(opaque("a")).empty());
  CHECK(find_runs(opaque("aa")) == std::vector<Run>{{1, 2, 1}});
  CHECK(find_runs(opaque("ab")).empty());
}

TEST_CASE("find_runs matches the oracle on every binary string up to length 16") {
  for (std::size_t n = 0; n <= 16; ++n) {
    for (const std::string& s : all_strings(n, "ab")) {
      const Text t = opaque(s);
      const auto runs = find_runs(t);
      REQUIRE_MESSAGE(runs == oracle::brute_runs(t), s);
      if (n > 0) {
        REQUIRE(runs.size() < n);
      }
    }
  }
}

TEST_CASE("find_runs on random strings") {
  const RandomCorpus corpus(1000, 200, {1, 2, 4, 26}, 101);
  for (const std::string& s : corpus.strings) {
    const auto runs = find_runs(opaque(s));
    REQUIRE_MESSAGE(runs == oracle::brute_runs(opaque(s)), s);
    REQUIRE(find_runs(bytes(s)) == runs);
    REQUIRE(std::adjacent_find(runs.begin(), runs.end()) == runs.end());
    for (const Run& r : runs) {
      REQUIRE(r.length() >= 2 * r.p);
      REQUIRE(smallest_period_is(s, r));
      const bool left = r.i == 1 || s[r.i - 2] != s[r.i - 2 + r.p];
      const bool right = r.j == static_cast<std::int32_t>(s.size()) || s[r.j] != s[r.j - r.p];
      REQUIRE(left);
      REQUIRE(right);
    }
  }
}

TEST_CASE("run count on Fibonacci prefixes stays below n") {
  for (std::size_t n : {10u, 100u, 1000u, 10000u}) {
    const std::string s = gen_corpus(CorpusKind::fibonacci, n, 2, 0);
    CHECK(find_runs(opaque(s)).size() < n);
  }
}

TEST_CASE("equality tests grow like n log n") {
  std::mt19937_64 rng(5);
  double first = 0;
  for (std::size_t n = 1u << 10; n <= (1u << 14); n *= 2) {
    const Text t = opaque(random_string(rng, n, 2));
    ComparisonCounter c;
    find_runs(t, c);
    const double ratio = static_cast<double>(c.count) / (static_cast<double>(n) * std::log2(static_cast<double>(n)));
    if (first == 0) {
      first = ratio;
    }
    CHECK(ratio <= 1.5 * first);
  }
}
