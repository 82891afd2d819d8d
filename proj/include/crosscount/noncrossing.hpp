#pragma once

#include <cstddef>
#include <cstdint>

#include "crosscount/crossing.hpp"
#include "crosscount/suffix.hpp"
#include "crosscount/text.hpp"

namespace crosscount {

/// Everything the N update needs, read front to back by the sweep.
///   right[x] = max(LPnF_w, LNF_w) at position x+1 of w
///   left[x]  = max(LPnF_v, LNF_v) at position n-x+1 of v = reverse(w)
///   first    = N(w,1), the number of distinct substrings of w[2..n]
struct NPipelineInputs {
  std::vector<std::int32_t> right;
  std::vector<std::int32_t> left;
  std::int64_t first = 0;

  std::size_t length() const noexcept { return right.size(); }
};

/// Builds the inputs from an integer-mode text.
NPipelineInputs prepare_noncrossing(const Text& t);

/// Prefixes of w[x+1..n] that disappear when the right part shrinks from
/// w[x+1..n] to w[x+2..n] with w[1..x] already present.  1 <= x <= n-1.
std::int64_t rho(const NPipelineInputs& in, std::size_t x);

/// Suffixes of w[1..x] that are new once the left part grows to w[1..x].
/// 1 <= x <= n-1.
std::int64_t lambda(const NPipelineInputs& in, std::size_t x);

/// N[x+1] = N[x] + lambda(x) - rho(x) starting from in.first.
CountArray sweep_noncrossing(const NPipelineInputs& in);
/// Same, into a caller-owned buffer of length n.
void sweep_noncrossing(const NPipelineInputs& in, std::span<std::int64_t> counts);

/// Distinct substrings with an occurrence avoiding each position.  Byte and
/// integer texts are renamed by sorting; opaque texts by equality scans.
CountArray count_noncrossing_all(const Text& t);

/// Equality-only route: renames with at most n*sigma tests, then runs the
/// integer pipeline without touching symbols again.
CountArray count_noncrossing_unordered(const Text& t, ComparisonCounter& counter);

}  // namespace crosscount
