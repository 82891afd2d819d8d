#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "crosscount/text.hpp"

namespace crosscount {

/// Maximal repetition w[i..j] with shortest period p; positions are 1-based
/// and inclusive.
struct Run {
  std::int32_t i = 0;
  std::int32_t j = 0;
  std::int32_t p = 0;

  std::int32_t length() const noexcept { return j - i + 1; }
  friend auto operator<=>(const Run&, const Run&) = default;
};

/// Locally maximal crossing periodic interval at one recursion node.
struct Candidate {
  std::int32_t i = 0;
  std::int32_t j = 0;
  std::int32_t p = 0;
  bool alive = true;

  Run run() const noexcept { return {i, j, p}; }
};

/// At most two candidates exist per period, one per anchor.
struct PeriodCandidates {
  std::array<Candidate, 2> slots{};
  std::uint8_t size = 0;

  void push(const Candidate& c) noexcept { slots[size++] = c; }
  const Candidate* begin() const noexcept { return slots.data(); }
  const Candidate* end() const noexcept { return slots.data() + size; }
  Candidate* begin() noexcept { return slots.data(); }
  Candidate* end() noexcept { return slots.data() + size; }
};

/// Entry p holds the candidates of period p; entry 0 is always empty.
using CandidateTable = std::vector<PeriodCandidates>;

/// Candidates of the recursion node [b, e] (1-based) split at
/// m = floor((b+e)/2): for every p <= floor((e-b+1)/2), the maximal p-good
/// blocks through the anchors m-p+1 and m that yield crossing intervals of
/// length >= 2p.  Uses equality tests only.
CandidateTable candidates_at_node(const Text& t, std::size_t b, std::size_t e, ComparisonCounter& counter);

/// Marks candidates whose declared period is a multiple of a smaller alive
/// candidate's period and whose interval that candidate contains.  Integer
/// work only.
void remove_non_shortest_periods(CandidateTable& table);

/// Both boundary inequalities, with positions 0 and n+1 acting as sentinels
/// unequal to every symbol.
bool is_globally_maximal(const Text& t, const Candidate& cand, ComparisonCounter& counter);

/// All runs of `t`, each once, sorted by (i, j).  O(n log n) equality tests.
std::vector<Run> find_runs(const Text& t, ComparisonCounter& counter);

inline std::vector<Run> find_runs(const Text& t) {
  ComparisonCounter unused;
  return find_runs(t, unused);
}

}  // namespace crosscount
