#include "crosscount/runs.hpp"

#include <cassert>
#include <span>

#include "crosscount/zscan.hpp"

namespace crosscount {
namespace {

// Scratch space for one node.  Depth-first processing finishes a node's
// candidates before recursing, so one set of buffers serves the whole tree.
struct NodeWorkspace {
  std::vector<std::int32_t> z_v;          // Z of V
  std::vector<std::int32_t> z_ubar;       // Z of reversed U
  std::vector<std::int32_t> z_v_in_u;     // prefix scan of U against V
  std::vector<std::int32_t> z_ubar_in_vbar;  // prefix scan of reversed V against reversed U
  CandidateTable table;

  explicit NodeWorkspace(std::size_t n) {
    const std::size_t half = n / 2 + 2;
    z_v.resize(half);
    z_ubar.resize(half);
    z_v_in_u.resize(half);
    z_ubar_in_vbar.resize(half);
    table.resize(half);
  }
};

std::int32_t entry(std::span<const std::int32_t> z, std::size_t len, std::size_t t) {
  return (t >= 1 && t <= len) ? z[t - 1] : 0;
}

// Fills ws.table[1..P] for node [b, e]; returns P.
std::size_t build_candidates(const Text& text, std::size_t b, std::size_t e, NodeWorkspace& ws,
                             ComparisonCounter& counter) {
  const std::size_t len = e - b + 1;
  const std::size_t m = (b + e) / 2;
  const std::size_t u = m - b + 1;
  const std::size_t v = e - m;
  const std::size_t periods = len / 2;

  // 0-based text indices: U = [b-1, m-1], V = [m, e-1].
  const std::size_t u_first = b - 1;
  const std::size_t u_last = m - 1;
  const std::size_t v_first = m;
  const std::size_t v_last = e - 1;

  std::span<std::int32_t> z_v(ws.z_v.data(), v);
  std::span<std::int32_t> z_ubar(ws.z_ubar.data(), u);
  std::span<std::int32_t> z_vu(ws.z_v_in_u.data(), u);
  std::span<std::int32_t> z_uv(ws.z_ubar_in_vbar.data(), v);

  detail::fill_z(
      v, [&](std::size_t x, std::size_t y) { return text.equal(v_first + x, v_first + y, counter); }, z_v);
  detail::fill_z(
      u, [&](std::size_t x, std::size_t y) { return text.equal(u_last - x, u_last - y, counter); }, z_ubar);
  detail::fill_prefix_scan(
      v, z_v, u, [&](std::size_t x, std::size_t y) { return text.equal(v_first + x, u_first + y, counter); },
      z_vu);
  detail::fill_prefix_scan(
      u, z_ubar, v, [&](std::size_t x, std::size_t y) { return text.equal(u_last - x, v_last - y, counter); },
      z_uv);

  const auto mi = static_cast<std::int64_t>(m);
  for (std::size_t p = 1; p <= periods; ++p) {
    PeriodCandidates& slot = ws.table[p];
    slot.size = 0;
    const auto pi = static_cast<std::int64_t>(p);

    auto keep = [&](std::int64_t first, std::int64_t last) {
      // Good block [first, last] induces the interval [first, last + p].
      if (last - first + 1 < pi || !(first <= mi && mi < last + pi)) {
        return;
      }
      if (slot.size == 1 && slot.slots[0].i == first) {
        return;  // both anchors lie in the same block
      }
      slot.push({static_cast<std::int32_t>(first), static_cast<std::int32_t>(last + pi),
                 static_cast<std::int32_t>(p), true});
    };

    // Anchor m-p+1, the first position of the length-p suffix of U.
    const std::int64_t alpha = z_vu[u - p];
    if (alpha > 0) {
      const std::int64_t beta = entry(z_v, v, p + 1);
      const std::int64_t gamma = entry(z_ubar, u, p + 1);
      const std::int64_t x = mi - pi + 1;
      const std::int64_t right = alpha < pi ? alpha - 1 : pi + beta - 1;
      keep(x - gamma, x + right);
    }

    // Anchor m, compared backwards against the length-p prefix of V.
    const std::int64_t delta = z_uv[v - p];
    if (delta > 0) {
      const std::int64_t eta = entry(z_ubar, u, p + 1);
      const std::int64_t theta = entry(z_v, v, p + 1);
      const std::int64_t left = delta < pi ? delta - 1 : pi + eta - 1;
      keep(mi - left, mi + theta);
    }
  }
  return periods;
}

void filter_non_shortest(std::span<PeriodCandidates> table, std::size_t periods) {
  for (std::size_t q = 1; q <= periods; ++q) {
    for (Candidate& c : table[q]) {
      if (!c.alive) {
        continue;
      }
      for (std::size_t hq = 2 * q; hq <= periods; hq += q) {
        bool deleted = false;
        for (Candidate& other : table[hq]) {
          if (other.alive && c.i <= other.i && other.j <= c.j) {
            other.alive = false;
            deleted = true;
          }
        }
        if (!deleted) {
          break;
        }
      }
    }
  }
}

bool globally_maximal(const Text& text, std::int32_t i, std::int32_t j, std::int32_t p,
                      ComparisonCounter& counter) {
  const auto n = static_cast<std::int32_t>(text.size());
  // 0-based: w[i-1] is index i-2, w[j+1] is index j.
  if (i > 1 && text.equal(static_cast<std::size_t>(i - 2), static_cast<std::size_t>(i - 2 + p), counter)) {
    return false;
  }
  if (j < n && text.equal(static_cast<std::size_t>(j - p), static_cast<std::size_t>(j), counter)) {
    return false;
  }
  return true;
}

class RunFinder {
 public:
  RunFinder(const Text& text, ComparisonCounter& counter)
      : text_(text), counter_(counter), workspace_(text.size()) {}

  std::vector<Run> run() {
    if (text_.size() >= 2) {
      process(1, text_.size());
    }
    return sorted_by_position(std::move(found_));
  }

 private:
  void process(std::size_t b, std::size_t e) {
    if (e - b + 1 < 2) {
      return;
    }
    const std::size_t periods = build_candidates(text_, b, e, workspace_, counter_);
    std::span<PeriodCandidates> table(workspace_.table.data(), periods + 1);
    filter_non_shortest(table, periods);
    for (std::size_t p = 1; p <= periods; ++p) {
      for (const Candidate& c : table[p]) {
        if (c.alive && globally_maximal(text_, c.i, c.j, c.p, counter_)) {
          found_.push_back(c.run());
        }
      }
    }
    const std::size_t m = (b + e) / 2;
    process(b, m);
    process(m + 1, e);
  }

  // Two stable counting passes: by end, then by start.
  std::vector<Run> sorted_by_position(std::vector<Run> runs) const {
    const std::size_t n = text_.size();
    auto bucket_pass = [n](const std::vector<Run>& in, auto key) {
      std::vector<std::size_t> offsets(n + 2, 0);
      for (const Run& r : in) {
        ++offsets[static_cast<std::size_t>(key(r)) + 1];
      }
      for (std::size_t k = 1; k < offsets.size(); ++k) {
        offsets[k] += offsets[k - 1];
      }
      std::vector<Run> out(in.size());
      for (const Run& r : in) {
        out[offsets[static_cast<std::size_t>(key(r))]++] = r;
      }
      return out;
    };
    runs = bucket_pass(runs, [](const Run& r) { return r.j; });
    return bucket_pass(runs, [](const Run& r) { return r.i; });
  }

  const Text& text_;
  ComparisonCounter& counter_;
  NodeWorkspace workspace_;
  std::vector<Run> found_;
};

}  // namespace

CandidateTable candidates_at_node(const Text& t, std::size_t b, std::size_t e, ComparisonCounter& counter) {
  assert(b >= 1 && b <= e && e <= t.size());
  if (e - b + 1 < 2) {
    return CandidateTable(1);
  }
  NodeWorkspace ws(e - b + 1);
  const std::size_t periods = build_candidates(t, b, e, ws, counter);
  ws.table.resize(periods + 1);
  return std::move(ws.table);
}

void remove_non_shortest_periods(CandidateTable& table) {
  if (table.empty()) {
    return;
  }
  filter_non_shortest(table, table.size() - 1);
}

bool is_globally_maximal(const Text& t, const Candidate& cand, ComparisonCounter& counter) {
  return globally_maximal(t, cand.i, cand.j, cand.p, counter);
}

std::vector<Run> find_runs(const Text& t, ComparisonCounter& counter) {
  return RunFinder(t, counter).run();
}

}  // namespace crosscount
