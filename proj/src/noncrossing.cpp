#include "crosscount/noncrossing.hpp"

#include <algorithm>
#include <cassert>

namespace crosscount {

NPipelineInputs prepare_noncrossing(const Text& t) {
  const std::size_t n = t.size();
  NPipelineInputs in;
  {
    const FactorTables f = factor_tables(t);
    in.right.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      in.right[i] = std::max(f.lpnf[i], f.lnf[i]);
    }
    // Each distinct substring of w[2..n] is counted at its last starting
    // position i, for lengths beyond lnf[i].  lnf looks only rightwards, so
    // the table of w serves its suffix w[2..n] unchanged.
    for (std::size_t i = 1; i < n; ++i) {
      in.first += static_cast<std::int64_t>(n - i) - f.lnf[i];
    }
  }
  {
    const FactorTables b = factor_tables(t.reversed());
    in.left.resize(n);
    for (std::size_t y = 2; y <= n; ++y) {
      in.left[n - y + 1] = std::max(b.lpnf[y - 1], b.lnf[y - 1]);
    }
  }
  return in;
}

std::int64_t rho(const NPipelineInputs& in, std::size_t x) {
  const auto n = static_cast<std::int64_t>(in.length());
  assert(x >= 1 && static_cast<std::int64_t>(x) < n);
  return n - static_cast<std::int64_t>(x) - in.right[x];
}

std::int64_t lambda(const NPipelineInputs& in, std::size_t x) {
  assert(x >= 1 && x < in.length());
  return static_cast<std::int64_t>(x) - in.left[x];
}

CountArray sweep_noncrossing(const NPipelineInputs& in) {
  CountArray counts(in.length());
  sweep_noncrossing(in, counts);
  return counts;
}

void sweep_noncrossing(const NPipelineInputs& in, std::span<std::int64_t> counts) {
  const std::size_t n = in.length();
  assert(counts.size() == n);
  if (n == 0) {
    return;
  }
  counts[0] = in.first;
  for (std::size_t x = 1; x < n; ++x) {
    const std::int64_t added = lambda(in, x);
    const std::int64_t removed = rho(in, x);
    assert(added >= 0 && removed >= 0);
    counts[x] = counts[x - 1] + added - removed;
  }
}

CountArray count_noncrossing_all(const Text& t) {
  ComparisonCounter unused;
  return sweep_noncrossing(prepare_noncrossing(to_integer_alphabet(t, unused)));
}

CountArray count_noncrossing_unordered(const Text& t, ComparisonCounter& counter) {
  return sweep_noncrossing(prepare_noncrossing(rename_unordered(t, counter).first));
}

}  // namespace crosscount
