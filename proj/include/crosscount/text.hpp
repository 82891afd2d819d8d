#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace crosscount {

using Symbol = std::uint32_t;

/// Largest accepted text length; keeps positions in 32 bits and every count
/// (at most n(n+1)/2) comfortably inside 64 bits.
inline constexpr std::size_t max_text_length = std::size_t{1} << 30;

enum class AlphabetMode {
  byte,     ///< raw bytes, ordered, linearly sortable
  integer,  ///< symbols renamed to [1..sigma]
  opaque,   ///< equality tests only
};

/// Number of symbol-equality tests performed during one algorithm call.
struct ComparisonCounter {
  std::uint64_t count = 0;
};

/// Immutable symbol sequence with an alphabet-mode tag.
///
/// In opaque mode the raw symbol values are not observable: the only way to
/// look at symbols is `equal`, which bumps a ComparisonCounter.  Indices on
/// this class are 0-based; the free functions below take 1-based positions.
class Text {
 public:
  Text() = default;
  Text(std::vector<Symbol> symbols, AlphabetMode mode);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  AlphabetMode mode() const noexcept { return mode_; }

  /// Raw symbols.  Throws std::logic_error in opaque mode.
  std::span<const Symbol> symbols() const;

  bool equal(std::size_t a, std::size_t b, ComparisonCounter& counter) const noexcept {
    ++counter.count;
    return symbols_[a] == symbols_[b];
  }

  /// Equality between symbols of two texts sharing an alphabet.
  bool equal(std::size_t a, const Text& other, std::size_t b,
             ComparisonCounter& counter) const noexcept {
    ++counter.count;
    return symbols_[a] == other.symbols_[b];
  }

  /// Structural copies; they move symbols without comparing them.
  Text reversed() const;
  Text slice(std::size_t offset, std::size_t length) const;

  /// Same content and mode.  Test helper; never used by the algorithms.
  friend bool operator==(const Text&, const Text&) = default;

 private:
  std::vector<Symbol> symbols_;
  AlphabetMode mode_ = AlphabetMode::byte;
};

/// Builds a text from raw bytes.  Integer mode renames bytes to [1..sigma] by
/// increasing byte value.
Text load_text(std::string_view raw, AlphabetMode mode);

/// Symbol equality at 1-based positions i and j; adds exactly one to the counter.
bool eq_symbols(const Text& t, std::size_t i, std::size_t j, ComparisonCounter& counter);

Text reverse(const Text& t);

/// Sub-text t[first..first+length-1], 1-based `first`, same mode.
Text subtext(const Text& t, std::size_t first, std::size_t length);

/// Equality-only renaming: keeps one representative per distinct symbol and
/// compares each position against the representatives in first-occurrence
/// order.  Names start at 1.  Returns the integer-mode text and sigma.
std::pair<Text, std::size_t> rename_unordered(const Text& t, ComparisonCounter& counter);

/// Order-preserving renaming of a byte or integer text to [1..sigma] by
/// sorting the symbols.  Opaque texts are rejected (std::invalid_argument).
std::pair<Text, std::size_t> rename_ordered(const Text& t);

/// Integer-mode view of any text: ordered renaming for byte/integer texts,
/// equality-only renaming for opaque ones.
Text to_integer_alphabet(const Text& t, ComparisonCounter& counter);

}  // namespace crosscount
