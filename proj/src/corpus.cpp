#include "crosscount/corpus.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "crosscount/oracle.hpp"

namespace crosscount {
namespace {

char letter(std::size_t k, std::size_t sigma) {
  return sigma <= 26 ? static_cast<char>('a' + k) : static_cast<char>(static_cast<unsigned char>(k));
}

std::string random_string(std::size_t n, std::size_t sigma, std::mt19937_64& rng) {
  if (sigma == 0 || sigma > 256) {
    throw std::invalid_argument("sigma must lie in [1, 256]");
  }
  std::uniform_int_distribution<std::size_t> pick(0, sigma - 1);
  std::string out(n, 'a');
  for (char& ch : out) {
    ch = letter(pick(rng), sigma);
  }
  return out;
}

std::string fibonacci_prefix(std::size_t n) {
  std::string prev = "a";
  std::string cur = "ab";
  while (cur.size() < n) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.substr(0, n);
}

// Fixed point of 2 -> 210, 1 -> 20, 0 -> 1, a square-free ternary word.
std::string ternary_square_free(std::size_t n) {
  std::string word = "2";
  while (word.size() < n) {
    std::string next;
    next.reserve(word.size() * 3);
    for (char c : word) {
      next += c == '2' ? "210" : c == '1' ? "20" : "1";
    }
    word = std::move(next);
  }
  return word.substr(0, n);
}

}  // namespace

std::optional<CorpusKind> parse_corpus_kind(std::string_view name) {
  if (name == "random") return CorpusKind::random;
  if (name == "unary") return CorpusKind::unary;
  if (name == "fibonacci") return CorpusKind::fibonacci;
  if (name == "square_free_ternary") return CorpusKind::square_free_ternary;
  if (name == "markers") return CorpusKind::markers;
  return std::nullopt;
}

std::string gen_corpus(CorpusKind kind, std::size_t n, std::size_t sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (kind) {
    case CorpusKind::random:
      return random_string(n, sigma, rng);
    case CorpusKind::unary:
      return std::string(n, 'a');
    case CorpusKind::fibonacci:
      return fibonacci_prefix(n);
    case CorpusKind::square_free_ternary: {
      const std::size_t offset = std::uniform_int_distribution<std::size_t>(0, n)(rng);
      std::array<char, 3> letters{'a', 'b', 'c'};
      std::shuffle(letters.begin(), letters.end(), rng);
      std::string out = ternary_square_free(n + offset).substr(offset);
      for (char& c : out) {
        c = letters[static_cast<std::size_t>(c - '0')];
      }
      if (!oracle::is_square_free(load_text(out, AlphabetMode::byte))) {
        throw std::logic_error("generated ternary word is not square-free");
      }
      return out;
    }
    case CorpusKind::markers: {
      const std::string base = random_string(n, sigma, rng);
      if (base.find('#') != std::string::npos) {
        throw std::invalid_argument("marker '#' collides with the base alphabet");
      }
      std::string out(1, '#');
      for (char c : base) {
        out += c;
        out += '#';
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown corpus kind");
}

}  // namespace crosscount
