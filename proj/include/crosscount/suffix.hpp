#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "crosscount/text.hpp"

namespace crosscount {

/// Suffix array over an integer-mode text.  Both arrays are 0-based: sa[r] is
/// the 0-based start of the r-th smallest suffix and rank is its inverse.
struct SuffixArray {
  std::vector<std::int32_t> sa;
  std::vector<std::int32_t> rank;
};

/// Longest-previous-non-overlapping-factor and longest-next-factor lengths;
/// entry i-1 belongs to position i.
struct FactorTables {
  std::vector<std::int32_t> lpnf;
  std::vector<std::int32_t> lnf;
};

/// Induced-sorting (SA-IS) construction, O(n).  Requires integer mode.
SuffixArray suffix_array(const Text& t);

/// lcp[r] = longest common prefix of suffixes sa[r-1] and sa[r]; lcp[0] = 0.
std::vector<std::int32_t> lcp_array(const Text& t, const SuffixArray& s);

/// Number of distinct nonempty substrings, n(n+1)/2 - sum(lcp).
std::uint64_t distinct_substring_count(const Text& t);

/// lnf[i] = longest prefix of w[i..n] that also starts somewhere in w[i+1..n].
std::vector<std::int32_t> lnf_table(const SuffixArray& s, const std::vector<std::int32_t>& lcp);
std::vector<std::int32_t> lnf_table(const Text& t);

/// lpnf[i] = longest prefix of w[i..n] occurring entirely inside w[1..i-1].
std::vector<std::int32_t> lpnf_table(const SuffixArray& s, const std::vector<std::int32_t>& lcp);
std::vector<std::int32_t> lpnf_table(const Text& t);

/// Both tables from one suffix array.
FactorTables factor_tables(const Text& t);

}  // namespace crosscount
