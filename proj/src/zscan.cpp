#include "crosscount/zscan.hpp"

namespace crosscount {

ZArray z_array(const SymbolView& s, ComparisonCounter& counter) {
  ZArray z(s.size());
  const Text& text = s.text();
  detail::fill_z(
      s.size(), [&](std::size_t i, std::size_t j) { return text.equal(s.at(i), s.at(j), counter); }, z);
  return z;
}

ZArray prefix_scan(const SymbolView& a, const SymbolView& b, ComparisonCounter& counter) {
  ZArray za = z_array(a, counter);
  ZArray out(b.size());
  const Text& ta = a.text();
  const Text& tb = b.text();
  detail::fill_prefix_scan(
      a.size(), za, b.size(),
      [&](std::size_t i, std::size_t j) { return ta.equal(a.at(i), tb, b.at(j), counter); }, out);
  return out;
}

}  // namespace crosscount
