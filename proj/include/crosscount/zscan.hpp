#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crosscount/text.hpp"

namespace crosscount {

/// Window into a Text, read forwards or backwards.  Index 0 of a reversed
/// view is the last symbol of the window.
class SymbolView {
 public:
  SymbolView() = default;
  SymbolView(const Text& text, std::size_t offset, std::size_t length, bool reversed = false)
      : text_(&text), offset_(offset), length_(length), reversed_(reversed) {}

  static SymbolView whole(const Text& text) { return {text, 0, text.size()}; }

  std::size_t size() const noexcept { return length_; }
  const Text& text() const noexcept { return *text_; }

  /// Text index of view index i.
  std::size_t at(std::size_t i) const noexcept {
    return reversed_ ? offset_ + length_ - 1 - i : offset_ + i;
  }

  SymbolView reversed() const { return {*text_, offset_, length_, !reversed_}; }

 private:
  const Text* text_ = nullptr;
  std::size_t offset_ = 0;
  std::size_t length_ = 0;
  bool reversed_ = false;
};

/// ZArray entry t-1 holds the match length at 1-based position t.
using ZArray = std::vector<std::int32_t>;

/// Out-of-range reads yield 0; `t` is 1-based.
inline std::int32_t z_at(std::span<const std::int32_t> z, std::size_t t) noexcept {
  return (t >= 1 && t <= z.size()) ? z[t - 1] : 0;
}

/// Z[1] = |s|; Z[t] = longest common prefix of s and s[t..].
ZArray z_array(const SymbolView& s, ComparisonCounter& counter);

/// Z[t] = max l with A[1..l] = B[t..t+l-1], computed as the Z-scan of A#B with
/// a virtual separator: matches are clamped at the end of A and of B and
/// nothing is ever compared against the separator.
ZArray prefix_scan(const SymbolView& a, const SymbolView& b, ComparisonCounter& counter);

namespace detail {

// `eq(i, j)` compares s[i] with s[j].  Fills z[0..len).
template <class Eq>
void fill_z(std::size_t len, Eq&& eq, std::span<std::int32_t> z) {
  if (len == 0) {
    return;
  }
  z[0] = static_cast<std::int32_t>(len);
  std::size_t left = 0;
  std::size_t right = 0;  // s[left..right) matches s[0..right-left)
  for (std::size_t t = 1; t < len; ++t) {
    std::size_t k = 0;
    if (t < right) {
      k = std::min<std::size_t>(static_cast<std::size_t>(z[t - left]), right - t);
    }
    if (t + k >= right) {
      while (t + k < len && eq(k, t + k)) {
        ++k;
      }
      left = t;
      right = t + k;
    }
    z[t] = static_cast<std::int32_t>(k);
  }
}

// `eq(i, j)` compares a[i] with b[j]; `za` is the Z-array of a.
template <class Eq>
void fill_prefix_scan(std::size_t len_a, std::span<const std::int32_t> za, std::size_t len_b, Eq&& eq,
                      std::span<std::int32_t> out) {
  std::size_t left = 0;
  std::size_t right = 0;  // b[left..right) matches a[0..right-left)
  for (std::size_t t = 0; t < len_b; ++t) {
    std::size_t k = 0;
    if (t < right) {
      k = std::min<std::size_t>(static_cast<std::size_t>(za[t - left]), right - t);
    }
    if (t + k >= right) {
      while (k < len_a && t + k < len_b && eq(k, t + k)) {
        ++k;
      }
      left = t;
      right = t + k;
    }
    out[t] = static_cast<std::int32_t>(k);
  }
}

}  // namespace detail
}  // namespace crosscount
