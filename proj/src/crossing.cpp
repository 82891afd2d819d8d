#include "crosscount/crossing.hpp"

#include <cassert>

namespace crosscount {

std::int64_t dup(const Run& run, std::int64_t k) noexcept {
  const std::int64_t first = std::int64_t{run.i} + run.p;
  const std::int64_t last = std::int64_t{run.j} - run.p;
  if (k < first || k > last) {
    return 0;
  }
  return (k - run.i - run.p + 1) * (std::int64_t{run.j} - run.p + 1 - k);
}

RunEventIndex::RunEventIndex(std::span<const Run> runs, std::size_t n)
    : n_(n), begin_offsets_(n + 2, 0), end_offsets_(n + 2, 0) {
  std::size_t kept = 0;
  for (const Run& r : runs) {
    const std::int64_t b = std::int64_t{r.j} - r.i - 2 * std::int64_t{r.p} + 1;
    if (b <= 0) {
      continue;
    }
    assert(r.i + r.p >= 1 && static_cast<std::size_t>(r.j - r.p) <= n);
    ++begin_offsets_[static_cast<std::size_t>(r.i + r.p) + 1];
    ++end_offsets_[static_cast<std::size_t>(r.j - r.p) + 1];
    ++kept;
  }
  for (std::size_t k = 1; k < n + 2; ++k) {
    begin_offsets_[k] += begin_offsets_[k - 1];
    end_offsets_[k] += end_offsets_[k - 1];
  }
  begins_.resize(kept);
  ends_.resize(kept);
  std::vector<std::uint32_t> begin_fill(begin_offsets_.begin(), begin_offsets_.end() - 1);
  std::vector<std::uint32_t> end_fill(end_offsets_.begin(), end_offsets_.end() - 1);
  for (const Run& r : runs) {
    const std::int64_t b = std::int64_t{r.j} - r.i - 2 * std::int64_t{r.p} + 1;
    if (b <= 0) {
      continue;
    }
    begins_[begin_fill[static_cast<std::size_t>(r.i + r.p)]++] = {r, b};
    ends_[end_fill[static_cast<std::size_t>(r.j - r.p)]++] = {r, b};
  }
}

CountArray sweep_duplicates(const RunEventIndex& index) {
  CountArray dups(index.length());
  sweep_duplicates(index, dups);
  return dups;
}

void sweep_duplicates(const RunEventIndex& index, std::span<std::int64_t> dups) {
  const std::size_t n = index.length();
  assert(dups.size() == n);
  SweepState s;
  for (std::size_t k = 1; k <= n; ++k) {
    s.e = 0;
    s.d += s.m;
    for (const RunEvent& ev : index.ends_at(k - 1)) {
      s.f -= ev.b;
      s.m -= 1;
      s.d -= ev.b;
      s.e += ev.b;
    }
    for (const RunEvent& ev : index.begins_at(k)) {
      s.f += ev.b;
      s.m += 1;
    }
    s.D += s.f - s.e - 2 * s.d;
    assert(s.m >= 0 && s.d >= 0 && s.f >= 0 && s.D >= 0);
    dups[k - 1] = s.D;
  }
}

CountArray crossing_from_runs(std::span<const Run> runs, std::size_t n) {
  CountArray counts = sweep_duplicates(RunEventIndex(runs, n));
  const auto len = static_cast<std::int64_t>(n);
  for (std::int64_t k = 1; k <= len; ++k) {
    counts[static_cast<std::size_t>(k - 1)] = k * (len - k + 1) - counts[static_cast<std::size_t>(k - 1)];
  }
  return counts;
}

CountArray count_crossing_all(const Text& t, ComparisonCounter& counter) {
  const std::vector<Run> runs = find_runs(t, counter);
  return crossing_from_runs(runs, t.size());
}

}  // namespace crosscount
