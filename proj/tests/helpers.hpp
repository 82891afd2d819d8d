#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "crosscount/text.hpp"

namespace crosscount::testing {

inline Text bytes(std::string_view s) { return load_text(s, AlphabetMode::byte); }
inline Text opaque(std::string_view s) { return load_text(s, AlphabetMode::opaque); }
inline Text integers(std::string_view s) { return load_text(s, AlphabetMode::integer); }

/// Every string of length exactly n over `alphabet`.
inline std::vector<std::string> all_strings(std::size_t n, std::string_view alphabet) {
  std::vector<std::string> out{""};
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<std::string> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& s : out) {
      for (char c : alphabet) {
        next.push_back(s + c);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::string random_string(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(sigma) - 1);
  std::string s(n, 'a');
  for (char& c : s) {
    c = static_cast<char>('a' + pick(rng));
  }
  return s;
}

/// Random strings with n in [1, max_n] cycling through the given alphabet sizes.
struct RandomCorpus {
  std::vector<std::string> strings;

  RandomCorpus(std::size_t count, std::size_t max_n, std::vector<std::size_t> sigmas, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len(1, max_n);
    for (std::size_t t = 0; t < count; ++t) {
      strings.push_back(random_string(rng, len(rng), sigmas[t % sigmas.size()]));
    }
  }
};

inline std::int64_t intervals_through(std::int64_t k, std::int64_t n) { return k * (n - k + 1); }

}  // namespace crosscount::testing
