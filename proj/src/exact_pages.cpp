#include "bookemb/exact_pages.hpp"

#include <bit>
#include <limits>
#include <string>

#include "bookemb/errors.hpp"

namespace bookemb::exact {

namespace {

std::uint32_t full_mask(std::size_t m) {
  return m == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1);
}

/// Finds F' ⊆ F realising out[F] = f[F'] + h[F \ F'].
std::uint32_t argmin_split(const CrossingTable& f, const CrossingTable& h, std::uint32_t set,
                           std::uint32_t target) {
  for (std::uint32_t sub = set;; sub = (sub - 1) & set) {
    if (f[sub] + h[set ^ sub] == target) return sub;
    if (sub == 0) break;
  }
  throw std::logic_error("subset convolution table is inconsistent");
}

/// Levels 1..p of the crossing tables; stops early once the full set reaches
/// zero when `stop_at_zero` is set.
std::vector<CrossingTable> build_levels(const OrderedGraph& g, int p, std::size_t max_edges,
                                        bool stop_at_zero) {
  std::vector<CrossingTable> levels;
  levels.push_back(cr1_table(g, max_edges));
  while (static_cast<int>(levels.size()) < p) {
    if (stop_at_zero && levels.back().full() == 0) break;
    levels.push_back(minplus_subset_convolution(levels.front(), levels.back()));
  }
  return levels;
}

PageAssignment backtrack(const std::vector<CrossingTable>& levels, std::size_t m, int pages) {
  PageAssignment witness(m, pages, PageAssignment::kDeleted);
  std::uint32_t rest = full_mask(m);
  for (int q = static_cast<int>(levels.size()); q >= 1 && rest != 0; --q) {
    std::uint32_t page_set = rest;
    if (q > 1) {
      const CrossingTable& upper = levels[static_cast<std::size_t>(q - 1)];
      const CrossingTable& lower = levels[static_cast<std::size_t>(q - 2)];
      // levels[q-1] = cr1 ⊛ levels[q-2]; F' goes to page q.
      page_set = argmin_split(levels.front(), lower, rest, upper[rest]);
    }
    for (std::uint32_t bits = page_set; bits != 0; bits &= bits - 1) {
      witness.set(static_cast<EdgeId>(std::countr_zero(bits)), q);
    }
    rest ^= page_set;
  }
  return witness;
}

}  // namespace

void check_capacity(const OrderedGraph& g, std::size_t max_edges) {
  if (max_edges > kMaxSupportedEdges) {
    throw CapacityError("edge limit " + std::to_string(max_edges) + " exceeds the supported " +
                            std::to_string(kMaxSupportedEdges),
                        static_cast<double>(kMaxSupportedEdges), static_cast<double>(max_edges));
  }
  if (g.m() > max_edges) {
    throw CapacityError("exact page computation limited to m <= " + std::to_string(max_edges) +
                            " edges (instance has " + std::to_string(g.m()) + ")",
                        static_cast<double>(max_edges), static_cast<double>(g.m()));
  }
}

CrossingTable cr1_table(const OrderedGraph& g, std::size_t max_edges) {
  check_capacity(g, max_edges);
  const std::size_t m = g.m();
  std::vector<std::uint32_t> crossing_mask(m, 0);
  for (EdgeId e = 0; e < m; ++e) crossing_mask[e] = static_cast<std::uint32_t>(g.crossing(e).to_mask());

  CrossingTable table{1, m, std::vector<std::uint32_t>(std::size_t{1} << m, 0)};
  for (std::uint32_t set = 1; set < table.values.size(); ++set) {
    const auto low = static_cast<std::size_t>(std::countr_zero(set));
    const std::uint32_t rest = set & (set - 1);
    table.values[set] =
        table.values[rest] + static_cast<std::uint32_t>(std::popcount(crossing_mask[low] & rest));
  }
  return table;
}

CrossingTable minplus_subset_convolution(const CrossingTable& f, const CrossingTable& h) {
  if (f.m != h.m || f.values.size() != h.values.size()) {
    throw InputError("subset convolution operands have different edge counts");
  }
  CrossingTable out{f.level + h.level, f.m, std::vector<std::uint32_t>(f.values.size(), 0)};
  for (std::uint32_t set = 0; set < out.values.size(); ++set) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::uint32_t sub = set;; sub = (sub - 1) & set) {
      const std::uint32_t candidate = f.values[sub] + h.values[set ^ sub];
      if (candidate < best) best = candidate;
      if (sub == 0 || best == 0) break;
    }
    out.values[set] = best;
  }
  return out;
}

CrossingProfile cr_up_to(const OrderedGraph& g, int p, std::size_t max_edges) {
  if (p < 1) throw InputError("page count must be at least 1");
  check_capacity(g, max_edges);
  // Once cr_q(E) = 0 every later level is 0 as well; the witness for level
  // q then also serves level p.
  auto levels = build_levels(g, p, max_edges, true);
  CrossingProfile profile;
  for (const auto& level : levels) profile.values.push_back(level.full());
  profile.values.resize(static_cast<std::size_t>(p), 0);
  profile.witness = backtrack(levels, g.m(), p);
  return profile;
}

int page_number(const OrderedGraph& g, std::size_t max_edges) {
  check_capacity(g, max_edges);
  if (g.m() == 0) return 0;
  auto levels = build_levels(g, static_cast<int>(g.m()), max_edges, true);
  return static_cast<int>(levels.size());
}

PageAssignment page_number_witness(const OrderedGraph& g, std::size_t max_edges) {
  check_capacity(g, max_edges);
  if (g.m() == 0) return PageAssignment(0, 0);
  auto levels = build_levels(g, static_cast<int>(g.m()), max_edges, true);
  return backtrack(levels, g.m(), static_cast<int>(levels.size()));
}

}  // namespace bookemb::exact
