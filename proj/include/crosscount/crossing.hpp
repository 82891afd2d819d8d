#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crosscount/runs.hpp"
#include "crosscount/text.hpp"

namespace crosscount {

/// Per-position counts; entry k-1 belongs to position k.
using CountArray = std::vector<std::int64_t>;

/// Duplicate crossing occurrences charged to `run` at 1-based position k:
/// (k-i-p+1)(j-p+1-k) inside the run interval [i+p, j-p], 0 elsewhere.
std::int64_t dup(const Run& run, std::int64_t k) noexcept;

struct RunEvent {
  Run run;
  std::int64_t b = 0;  ///< run-interval length j-i-2p+1
};

/// Runs bucketed by the first (s = i+p) and last (t = j-p) position of their
/// run interval.  Runs with an empty run interval (length exactly 2p) are
/// left out; they contribute nothing anywhere.
class RunEventIndex {
 public:
  RunEventIndex() = default;
  RunEventIndex(std::span<const Run> runs, std::size_t n);

  std::size_t length() const noexcept { return n_; }
  std::size_t size() const noexcept { return begins_.size(); }

  /// Runs whose run interval starts at k, 1 <= k <= n.
  std::span<const RunEvent> begins_at(std::size_t k) const noexcept { return bucket(begins_, begin_offsets_, k); }
  /// Runs whose run interval ends at k, 0 <= k <= n.
  std::span<const RunEvent> ends_at(std::size_t k) const noexcept { return bucket(ends_, end_offsets_, k); }

 private:
  static std::span<const RunEvent> bucket(const std::vector<RunEvent>& events,
                                          const std::vector<std::uint32_t>& offsets, std::size_t k) noexcept {
    if (k + 1 >= offsets.size()) {
      return {};
    }
    return {events.data() + offsets[k], events.data() + offsets[k + 1]};
  }

  std::size_t n_ = 0;
  // Bucket k occupies [offsets[k], offsets[k+1]); buckets indexed 0..n.
  std::vector<RunEvent> begins_;
  std::vector<RunEvent> ends_;
  std::vector<std::uint32_t> begin_offsets_;
  std::vector<std::uint32_t> end_offsets_;
};

inline RunEventIndex build_event_index(std::span<const Run> runs, std::size_t n) { return {runs, n}; }

/// Accumulators of the duplicate sweep after processing a position.
struct SweepState {
  std::int64_t m = 0;  ///< active runs
  std::int64_t d = 0;  ///< sum of k - s over active runs
  std::int64_t f = 0;  ///< sum of b over active runs
  std::int64_t e = 0;  ///< sum of b over runs that left at this step
  std::int64_t D = 0;  ///< duplicates at the current position
};

/// D[k] = sum over runs of dup(run, k), in one pass over k.
CountArray sweep_duplicates(const RunEventIndex& index);
/// Same, into a caller-owned buffer of length n.
void sweep_duplicates(const RunEventIndex& index, std::span<std::int64_t> dups);

/// C[k] = k(n-k+1) - D[k] from a precomputed run set.
CountArray crossing_from_runs(std::span<const Run> runs, std::size_t n);

/// Distinct substrings with an occurrence crossing each position.
CountArray count_crossing_all(const Text& t, ComparisonCounter& counter);

inline CountArray count_crossing_all(const Text& t) {
  ComparisonCounter unused;
  return count_crossing_all(t, unused);
}

}  // namespace crosscount
