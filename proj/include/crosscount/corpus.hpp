#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace crosscount {

enum class CorpusKind { random, unary, fibonacci, square_free_ternary, markers };

std::optional<CorpusKind> parse_corpus_kind(std::string_view name);

/// Deterministic test strings.
///   random              n symbols drawn uniformly from sigma letters
///   unary               a^n
///   fibonacci           length-n prefix of abaababaabaab...
///   square_free_ternary length-n factor of a square-free word over {a,b,c},
///                       letters permuted by the seed, certified square-free
///   markers             #x1#x2#...#xn# for a random x of length n
/// Letters are 'a', 'b', ... for sigma <= 26 and bytes 0..sigma-1 beyond that.
/// Throws std::invalid_argument when sigma is outside [1, 256] for the kinds
/// that use it.
std::string gen_corpus(CorpusKind kind, std::size_t n, std::size_t sigma, std::uint64_t seed);

}  // namespace crosscount
