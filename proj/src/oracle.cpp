#include "crosscount/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace crosscount::oracle {
namespace {

bool same(const Text& t, std::size_t a, std::size_t b) {
  ComparisonCounter scratch;
  return t.equal(a, b, scratch);
}

}  // namespace

SubstringCatalog::SubstringCatalog(const Text& t)
    : n_(t.size()), lcp_((n_ + 1) * (n_ + 1), 0), canonical_(n_ * (n_ + 1), 0) {
  const std::size_t stride = n_ + 1;
  for (std::size_t a = n_; a-- > 0;) {
    for (std::size_t b = n_; b-- > 0;) {
      if (same(t, a, b)) {
        lcp_[a * stride + b] = lcp_[(a + 1) * stride + (b + 1)] + 1;
      }
    }
  }
  // The leftmost equal start is nondecreasing in the length.
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t first = 0;
    for (std::size_t len = 1; len + i <= n_; ++len) {
      while (lcp(first, i) < len) {
        ++first;
      }
      canonical_[i * stride + len] = static_cast<std::uint32_t>(first);
    }
  }
}

SubstringSet::SubstringSet(const SubstringCatalog& catalog)
    : catalog_(&catalog), present_(catalog.size() * (catalog.size() + 1), 0) {}

bool SubstringSet::insert(std::size_t start, std::size_t length) {
  const std::size_t key = catalog_->canonical(start, length) * (catalog_->size() + 1) + length;
  if (present_[key]) {
    return false;
  }
  present_[key] = 1;
  touched_.push_back(key);
  ++size_;
  return true;
}

bool SubstringSet::contains(std::size_t start, std::size_t length) const {
  return present_[catalog_->canonical(start, length) * (catalog_->size() + 1) + length] != 0;
}

void SubstringSet::clear() {
  for (std::size_t key : touched_) {
    present_[key] = 0;
  }
  touched_.clear();
  size_ = 0;
}

std::vector<Run> brute_runs(const Text& t) {
  const std::size_t n = t.size();
  std::vector<Run> runs;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t period = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      // Smallest period of w[i..j]; a period of w[i..j] is one of w[i..j-1].
      auto is_period = [&](std::size_t p) {
        for (std::size_t x = i; x + p <= j; ++x) {
          if (!same(t, x, x + p)) {
            return false;
          }
        }
        return true;
      };
      while (!is_period(period)) {
        ++period;
      }
      const std::size_t len = j - i + 1;
      if (len < 2 * period) {
        continue;
      }
      const bool left = i == 0 || !same(t, i - 1, i - 1 + period);
      const bool right = j + 1 == n || !same(t, j + 1, j + 1 - period);
      if (left && right) {
        runs.push_back({static_cast<std::int32_t>(i + 1), static_cast<std::int32_t>(j + 1),
                        static_cast<std::int32_t>(period)});
      }
    }
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

namespace {

std::int64_t crossing_with(const SubstringCatalog& catalog, SubstringSet& set, std::size_t k) {
  const std::size_t n = catalog.size();
  set.clear();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = k - 1; j < n; ++j) {
      set.insert(i, j - i + 1);
    }
  }
  return static_cast<std::int64_t>(set.size());
}

std::int64_t noncrossing_with(const SubstringCatalog& catalog, SubstringSet& set, std::size_t k) {
  const std::size_t n = catalog.size();
  set.clear();
  // Left part w[1..k-1], right part w[k+1..n] (1-based).
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = i; j + 1 < k; ++j) {
      set.insert(i, j - i + 1);
    }
  }
  for (std::size_t i = k; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      set.insert(i, j - i + 1);
    }
  }
  return static_cast<std::int64_t>(set.size());
}

}  // namespace

std::int64_t brute_count_crossing(const Text& t, std::size_t k) {
  SubstringCatalog catalog(t);
  SubstringSet set(catalog);
  return crossing_with(catalog, set, k);
}

std::int64_t brute_count_noncrossing(const Text& t, std::size_t k) {
  SubstringCatalog catalog(t);
  SubstringSet set(catalog);
  return noncrossing_with(catalog, set, k);
}

CountArray brute_crossing_all(const Text& t) {
  SubstringCatalog catalog(t);
  SubstringSet set(catalog);
  CountArray out(t.size());
  for (std::size_t k = 1; k <= t.size(); ++k) {
    out[k - 1] = crossing_with(catalog, set, k);
  }
  return out;
}

CountArray brute_noncrossing_all(const Text& t) {
  SubstringCatalog catalog(t);
  SubstringSet set(catalog);
  CountArray out(t.size());
  for (std::size_t k = 1; k <= t.size(); ++k) {
    out[k - 1] = noncrossing_with(catalog, set, k);
  }
  return out;
}

FactorTables brute_factor_tables(const Text& t) {
  const std::size_t n = t.size();
  auto common = [&](std::size_t a, std::size_t b) {
    std::size_t l = 0;
    while (a + l < n && b + l < n && same(t, a + l, b + l)) {
      ++l;
    }
    return l;
  };
  FactorTables out{std::vector<std::int32_t>(n, 0), std::vector<std::int32_t>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t previous = 0;
    for (std::size_t j = 0; j < i; ++j) {
      // An occurrence at j must end before i.
      previous = std::max(previous, std::min(common(i, j), i - j));
    }
    std::size_t next = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      next = std::max(next, common(i, j));
    }
    out.lpnf[i] = static_cast<std::int32_t>(previous);
    out.lnf[i] = static_cast<std::int32_t>(next);
  }
  return out;
}

Text interleave_markers(const Text& x, Symbol marker) {
  auto symbols = x.symbols();
  if (std::find(symbols.begin(), symbols.end(), marker) != symbols.end()) {
    throw std::invalid_argument("marker symbol occurs in the input");
  }
  std::vector<Symbol> out;
  out.reserve(2 * symbols.size() + 1);
  out.push_back(marker);
  for (Symbol s : symbols) {
    out.push_back(s);
    out.push_back(marker);
  }
  return Text(std::move(out), x.mode());
}

Text interleave_markers(const Text& x) {
  if (x.mode() == AlphabetMode::integer) {
    auto symbols = x.symbols();
    const Symbol top = symbols.empty() ? 0 : *std::max_element(symbols.begin(), symbols.end());
    return interleave_markers(x, top + 1);
  }
  return interleave_markers(x, static_cast<Symbol>('#'));
}

bool is_square_free(const Text& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t half = 1; i + 2 * half <= n; ++half) {
      bool square = true;
      for (std::size_t x = 0; x < half && square; ++x) {
        square = same(t, i + x, i + half + x);
      }
      if (square) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace crosscount::oracle
