#include "crosscount/suffix.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>

namespace crosscount {
namespace {

using Index = std::int32_t;

// SA-IS over s[0..n) with alphabet [0, alphabet).  s must end with a unique
// smallest symbol 0.
class InducedSorter {
 public:
  static void sort(std::span<const Index> s, std::span<Index> sa, Index alphabet) {
    const auto n = static_cast<Index>(s.size());
    if (n == 1) {
      sa[0] = 0;
      return;
    }

    std::vector<bool> s_type(static_cast<std::size_t>(n));
    s_type[n - 1] = true;
    for (Index i = n - 2; i >= 0; --i) {
      s_type[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && s_type[i + 1]);
    }
    auto is_lms = [&](Index i) { return i > 0 && s_type[i] && !s_type[i - 1]; };

    std::vector<Index> counts(static_cast<std::size_t>(alphabet), 0);
    for (Index c : s) {
      ++counts[c];
    }
    std::vector<Index> buckets(static_cast<std::size_t>(alphabet));
    auto bucket_heads = [&] {
      Index sum = 0;
      for (Index c = 0; c < alphabet; ++c) {
        buckets[c] = sum;
        sum += counts[c];
      }
    };
    auto bucket_tails = [&] {
      Index sum = 0;
      for (Index c = 0; c < alphabet; ++c) {
        sum += counts[c];
        buckets[c] = sum;
      }
    };
    auto induce = [&] {
      bucket_heads();
      for (Index r = 0; r < n; ++r) {
        const Index j = sa[r] - 1;
        if (sa[r] > 0 && !s_type[j]) {
          sa[buckets[s[j]]++] = j;
        }
      }
      bucket_tails();
      for (Index r = n - 1; r >= 0; --r) {
        const Index j = sa[r] - 1;
        if (sa[r] > 0 && s_type[j]) {
          sa[--buckets[s[j]]] = j;
        }
      }
    };

    // Sort LMS substrings.
    std::fill(sa.begin(), sa.end(), -1);
    bucket_tails();
    for (Index i = 1; i < n; ++i) {
      if (is_lms(i)) {
        sa[--buckets[s[i]]] = i;
      }
    }
    induce();

    Index lms_count = 0;
    for (Index r = 0; r < n; ++r) {
      if (is_lms(sa[r])) {
        sa[lms_count++] = sa[r];
      }
    }
    std::fill(sa.begin() + lms_count, sa.end(), -1);

    // Name LMS substrings; equal substrings share a name.
    Index names = 0;
    Index previous = -1;
    for (Index r = 0; r < lms_count; ++r) {
      const Index pos = sa[r];
      bool differ = previous < 0;
      for (Index d = 0; !differ; ++d) {
        if (s[pos + d] != s[previous + d] || s_type[pos + d] != s_type[previous + d]) {
          differ = true;
        } else if (d > 0 && (is_lms(pos + d) || is_lms(previous + d))) {
          break;
        }
      }
      if (differ) {
        ++names;
        previous = pos;
      }
      sa[lms_count + pos / 2] = names - 1;
    }
    for (Index r = n - 1, w = n - 1; r >= lms_count; --r) {
      if (sa[r] >= 0) {
        sa[w--] = sa[r];
      }
    }

    // Sort the reduced string, recursively when names repeat.
    std::span<Index> reduced = sa.subspan(static_cast<std::size_t>(n - lms_count));
    std::span<Index> reduced_sa = sa.first(static_cast<std::size_t>(lms_count));
    if (names < lms_count) {
      sort(reduced, reduced_sa, names);
    } else {
      for (Index r = 0; r < lms_count; ++r) {
        reduced_sa[reduced[r]] = r;
      }
    }

    // Map back to LMS positions and induce the full order.
    for (Index i = 1, w = 0; i < n; ++i) {
      if (is_lms(i)) {
        reduced[w++] = i;
      }
    }
    for (Index r = 0; r < lms_count; ++r) {
      reduced_sa[r] = reduced[reduced_sa[r]];
    }
    std::fill(sa.begin() + lms_count, sa.end(), -1);
    bucket_tails();
    for (Index r = lms_count - 1; r >= 0; --r) {
      const Index j = sa[r];
      sa[r] = -1;
      sa[--buckets[s[j]]] = j;
    }
    induce();
  }
};

void require_integer(const Text& t) {
  if (t.mode() != AlphabetMode::integer) {
    throw std::invalid_argument("suffix structures need an integer-mode text");
  }
}

}  // namespace

SuffixArray suffix_array(const Text& t) {
  require_integer(t);
  const std::size_t n = t.size();
  SuffixArray out;
  if (n == 0) {
    return out;
  }
  auto symbols = t.symbols();
  std::vector<Index> s(n + 1);
  Index alphabet = 1;
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = static_cast<Index>(symbols[i]);
    alphabet = std::max(alphabet, s[i] + 1);
  }
  s[n] = 0;
  std::vector<Index> sa(n + 1);
  InducedSorter::sort(s, sa, alphabet);

  out.sa.assign(sa.begin() + 1, sa.end());
  out.rank.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    out.rank[static_cast<std::size_t>(out.sa[r])] = static_cast<Index>(r);
  }
  return out;
}

std::vector<std::int32_t> lcp_array(const Text& t, const SuffixArray& s) {
  auto w = t.symbols();
  const std::size_t n = w.size();
  std::vector<Index> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(s.rank[i]);
    if (r == 0) {
      h = 0;
      continue;
    }
    const auto j = static_cast<std::size_t>(s.sa[r - 1]);
    while (i + h < n && j + h < n && w[i + h] == w[j + h]) {
      ++h;
    }
    lcp[r] = static_cast<Index>(h);
    if (h > 0) {
      --h;
    }
  }
  return lcp;
}

std::uint64_t distinct_substring_count(const Text& t) {
  const std::uint64_t n = t.size();
  if (n == 0) {
    return 0;
  }
  const SuffixArray s = suffix_array(t);
  std::uint64_t shared = 0;
  for (Index v : lcp_array(t, s)) {
    shared += static_cast<std::uint64_t>(v);
  }
  return n * (n + 1) / 2 - shared;
}

std::vector<std::int32_t> lnf_table(const SuffixArray& s, const std::vector<std::int32_t>& lcp) {
  const std::size_t n = s.sa.size();
  std::vector<Index> lnf(n, 0);
  // For each rank, the nearest rank on each side whose suffix starts later;
  // the stack keeps ranks with decreasing start positions and, per entry, the
  // minimum lcp between it and the entry below.
  struct Entry {
    std::size_t rank;
    Index link;
  };
  std::vector<Entry> stack;
  stack.reserve(64);

  for (std::size_t r = 0; r < n; ++r) {
    Index cur = r > 0 ? lcp[r] : 0;
    while (!stack.empty() && s.sa[stack.back().rank] < s.sa[r]) {
      cur = std::min(cur, stack.back().link);
      stack.pop_back();
    }
    const auto pos = static_cast<std::size_t>(s.sa[r]);
    lnf[pos] = stack.empty() ? 0 : cur;
    stack.push_back({r, cur});
  }
  stack.clear();
  for (std::size_t r = n; r-- > 0;) {
    Index cur = r + 1 < n ? lcp[r + 1] : 0;
    while (!stack.empty() && s.sa[stack.back().rank] < s.sa[r]) {
      cur = std::min(cur, stack.back().link);
      stack.pop_back();
    }
    const auto pos = static_cast<std::size_t>(s.sa[r]);
    if (!stack.empty()) {
      lnf[pos] = std::max(lnf[pos], cur);
    }
    stack.push_back({r, cur});
  }
  return lnf;
}

std::vector<std::int32_t> lnf_table(const Text& t) {
  const SuffixArray s = suffix_array(t);
  return lnf_table(s, lcp_array(t, s));
}

namespace {

// Internal nodes of the suffix tree appear as lcp-intervals.  The traversal
// below visits them bottom-up with a stack; at step r (after handling the
// boundary lcp[r]) the stack holds exactly the intervals containing ranks
// r-1 and r, ordered by increasing depth.
struct Interval {
  Index lb;
  Index rb;
  Index depth;
  Index min_pos;  // smallest suffix start among ranks lb..rb
};

// All lcp-intervals of positive depth, in post-order.
std::vector<Interval> lcp_intervals(const SuffixArray& s, const std::vector<Index>& lcp) {
  const auto n = static_cast<Index>(s.sa.size());
  std::vector<Interval> closed;
  closed.reserve(s.sa.size());
  std::vector<Interval> open{{0, -1, 0, s.sa[0]}};
  for (Index r = 1; r <= n; ++r) {
    const Index cur = r < n ? lcp[r] : -1;
    Index lb = r - 1;
    Index min_pos = s.sa[r - 1];
    while (!open.empty() && cur < open.back().depth) {
      Interval top = open.back();
      open.pop_back();
      top.rb = r - 1;
      if (top.depth > 0) {
        closed.push_back(top);
      }
      lb = top.lb;
      min_pos = top.min_pos;
      if (!open.empty() && cur <= open.back().depth) {
        open.back().min_pos = std::min(open.back().min_pos, min_pos);
      }
    }
    if (r == n) {
      break;
    }
    if (cur > open.back().depth) {
      open.push_back({lb, -1, cur, min_pos});
    }
    open.back().min_pos = std::min(open.back().min_pos, s.sa[r]);
  }
  return closed;
}

// max over the chain of min(depth, pos - min_pos).  Along the chain depth
// increases and pos - min_pos does not, so the maximum sits where they cross.
Index best_on_chain(std::span<const Interval> chain, Index pos) {
  std::size_t lo = 0;
  std::size_t hi = chain.size();  // first index with depth >= gap
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (chain[mid].depth >= pos - chain[mid].min_pos) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  Index best = 0;
  for (std::size_t k = lo > 0 ? lo - 1 : 0; k < std::min(lo + 1, chain.size()); ++k) {
    best = std::max(best, std::min(chain[k].depth, pos - chain[k].min_pos));
  }
  return best;
}

}  // namespace

std::vector<std::int32_t> lpnf_table(const SuffixArray& s, const std::vector<std::int32_t>& lcp) {
  const std::size_t n = s.sa.size();
  std::vector<Index> lpnf(n, 0);
  if (n < 2) {
    return lpnf;
  }
  const std::vector<Interval> intervals = lcp_intervals(s, lcp);

  // Bucket by left bound.  Post-order puts nested intervals sharing a left
  // bound deepest first, so each bucket is read backwards.
  std::vector<std::uint32_t> offset(n + 1, 0);
  for (const Interval& iv : intervals) {
    ++offset[static_cast<std::size_t>(iv.lb) + 1];
  }
  for (std::size_t r = 0; r < n; ++r) {
    offset[r + 1] += offset[r];
  }
  std::vector<std::uint32_t> by_lb(intervals.size());
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (std::uint32_t k = 0; k < intervals.size(); ++k) {
      by_lb[fill[static_cast<std::size_t>(intervals[k].lb)]++] = k;
    }
  }

  // The chain holds every interval containing rank r, shallowest first.
  std::vector<Interval> chain;
  for (std::size_t r = 0; r < n; ++r) {
    while (!chain.empty() && chain.back().rb < static_cast<Index>(r)) {
      chain.pop_back();
    }
    for (std::uint32_t k = offset[r + 1]; k > offset[r]; --k) {
      chain.push_back(intervals[by_lb[k - 1]]);
    }
    const Index pos = s.sa[r];
    lpnf[static_cast<std::size_t>(pos)] = best_on_chain(chain, pos);
  }
  return lpnf;
}

std::vector<std::int32_t> lpnf_table(const Text& t) {
  const SuffixArray s = suffix_array(t);
  return lpnf_table(s, lcp_array(t, s));
}

FactorTables factor_tables(const Text& t) {
  const SuffixArray s = suffix_array(t);
  const auto lcp = lcp_array(t, s);
  return {lpnf_table(s, lcp), lnf_table(s, lcp)};
}

}  // namespace crosscount
