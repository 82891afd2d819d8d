#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "crosscount/crossing.hpp"
#include "crosscount/runs.hpp"
#include "crosscount/suffix.hpp"
#include "crosscount/text.hpp"

// Brute-force references.  Everything here works from direct symbol
// comparisons and shares no code with the fast algorithms; complexities are
// cubic or worse, so keep inputs to a few hundred symbols.
namespace crosscount::oracle {

/// Identifies each substring w[start..start+len-1] (0-based start) by the
/// leftmost start of an equal substring.
class SubstringCatalog {
 public:
  explicit SubstringCatalog(const Text& t);

  std::size_t size() const noexcept { return n_; }
  std::size_t canonical(std::size_t start, std::size_t length) const noexcept {
    return canonical_[start * (n_ + 1) + length];
  }
  /// Longest common prefix of the suffixes at a and b.
  std::size_t lcp(std::size_t a, std::size_t b) const noexcept { return lcp_[a * (n_ + 1) + b]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> lcp_;        // (n+1) x (n+1)
  std::vector<std::uint32_t> canonical_;  // n x (n+1)
};

/// Set of distinct nonempty substrings of one text.
class SubstringSet {
 public:
  explicit SubstringSet(const SubstringCatalog& catalog);

  /// Returns true when the substring was not present yet.
  bool insert(std::size_t start, std::size_t length);
  bool contains(std::size_t start, std::size_t length) const;
  std::size_t size() const noexcept { return size_; }
  void clear();

 private:
  const SubstringCatalog* catalog_;
  std::vector<std::uint8_t> present_;
  std::vector<std::size_t> touched_;
  std::size_t size_ = 0;
};

std::vector<Run> brute_runs(const Text& t);

/// k is 1-based.
std::int64_t brute_count_crossing(const Text& t, std::size_t k);
std::int64_t brute_count_noncrossing(const Text& t, std::size_t k);

/// Same as above for every k, sharing one catalog.
CountArray brute_crossing_all(const Text& t);
CountArray brute_noncrossing_all(const Text& t);

FactorTables brute_factor_tables(const Text& t);

/// #x1#x2#...#xn# with the given marker.  Throws std::invalid_argument if the
/// marker occurs in x.  Works on byte and integer texts.
Text interleave_markers(const Text& x, Symbol marker);

/// Picks '#' for byte texts and sigma+1 for integer texts.
Text interleave_markers(const Text& x);

bool is_square_free(const Text& t);

}  // namespace crosscount::oracle
