#include "crosscount/text.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

namespace crosscount {

Text::Text(std::vector<Symbol> symbols, AlphabetMode mode) : symbols_(std::move(symbols)), mode_(mode) {
  if (symbols_.size() > max_text_length) {
    throw std::length_error("text longer than 2^30 symbols");
  }
  if (mode_ == AlphabetMode::integer) {
    for (Symbol s : symbols_) {
      if (s == 0 || s > symbols_.size()) {
        throw std::invalid_argument("integer-mode symbols must lie in [1..n]");
      }
    }
  }
}

std::span<const Symbol> Text::symbols() const {
  if (mode_ == AlphabetMode::opaque) {
    throw std::logic_error("opaque text symbols are only observable through equality tests");
  }
  return symbols_;
}

Text Text::reversed() const {
  Text out;
  out.symbols_.assign(symbols_.rbegin(), symbols_.rend());
  out.mode_ = mode_;
  return out;
}

Text Text::slice(std::size_t offset, std::size_t length) const {
  if (offset > symbols_.size() || length > symbols_.size() - offset) {
    throw std::out_of_range("slice outside text");
  }
  Text out;
  out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(offset),
                      symbols_.begin() + static_cast<std::ptrdiff_t>(offset + length));
  out.mode_ = mode_;
  if (mode_ == AlphabetMode::integer) {
    // A slice may lose symbols; rename to keep the [1..sigma] invariant.
    return rename_ordered(out).first;
  }
  return out;
}

Text load_text(std::string_view raw, AlphabetMode mode) {
  std::vector<Symbol> symbols(raw.size());
  std::transform(raw.begin(), raw.end(), symbols.begin(),
                 [](char ch) { return static_cast<Symbol>(static_cast<unsigned char>(ch)); });
  if (mode == AlphabetMode::integer) {
    return rename_ordered(Text(std::move(symbols), AlphabetMode::byte)).first;
  }
  return Text(std::move(symbols), mode);
}

bool eq_symbols(const Text& t, std::size_t i, std::size_t j, ComparisonCounter& counter) {
  assert(i >= 1 && i <= t.size() && j >= 1 && j <= t.size());
  return t.equal(i - 1, j - 1, counter);
}

Text reverse(const Text& t) { return t.reversed(); }

Text subtext(const Text& t, std::size_t first, std::size_t length) {
  if (length == 0) {
    return t.slice(0, 0);
  }
  assert(first >= 1);
  return t.slice(first - 1, length);
}

std::pair<Text, std::size_t> rename_unordered(const Text& t, ComparisonCounter& counter) {
  std::vector<std::size_t> representatives;  // position of each name's first occurrence
  std::vector<Symbol> names(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::size_t name = 0;
    for (std::size_t r = 0; r < representatives.size(); ++r) {
      if (t.equal(representatives[r], i, counter)) {
        name = r + 1;
        break;
      }
    }
    if (name == 0) {
      representatives.push_back(i);
      name = representatives.size();
    }
    names[i] = static_cast<Symbol>(name);
  }
  return {Text(std::move(names), AlphabetMode::integer), representatives.size()};
}

std::pair<Text, std::size_t> rename_ordered(const Text& t) {
  auto symbols = t.symbols();
  std::vector<Symbol> sorted(symbols.begin(), symbols.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<Symbol> names(symbols.size());
  if (t.mode() == AlphabetMode::byte) {
    std::array<Symbol, 256> table{};
    for (std::size_t r = 0; r < sorted.size(); ++r) {
      table[sorted[r] & 0xFFu] = static_cast<Symbol>(r + 1);
    }
    std::transform(symbols.begin(), symbols.end(), names.begin(), [&](Symbol s) { return table[s & 0xFFu]; });
  } else {
    std::transform(symbols.begin(), symbols.end(), names.begin(), [&](Symbol s) {
      return static_cast<Symbol>(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin() + 1);
    });
  }
  return {Text(std::move(names), AlphabetMode::integer), sorted.size()};
}

Text to_integer_alphabet(const Text& t, ComparisonCounter& counter) {
  if (t.mode() == AlphabetMode::opaque) {
    return rename_unordered(t, counter).first;
  }
  if (t.mode() == AlphabetMode::integer) {
    return t;
  }
  return rename_ordered(t).first;
}

}  // namespace crosscount
