#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bookemb/core.hpp"

namespace bookemb::exact {

/// Default ceiling on m for the 2^m tables; callers may lower it.
constexpr std::size_t kDefaultMaxEdges = 20;
/// Hard ceiling imposed by 32-bit subset masks and table memory.
constexpr std::size_t kMaxSupportedEdges = 24;

/// cr_q((V,F),σ) for every F ⊆ E, indexed by the bitmask of F.
struct CrossingTable {
  int level = 0;
  std::size_t m = 0;
  std::vector<std::uint32_t> values;

  std::uint32_t operator[](std::uint32_t subset) const { return values[subset]; }
  std::uint32_t full() const { return values.back(); }
};

/// Throws CapacityError when m exceeds the limit.
void check_capacity(const OrderedGraph& g, std::size_t max_edges);

CrossingTable cr1_table(const OrderedGraph& g, std::size_t max_edges = kDefaultMaxEdges);

/// out[F] = min over F' ⊆ F of f[F'] + h[F \ F']; the result has level
/// f.level + h.level.
CrossingTable minplus_subset_convolution(const CrossingTable& f, const CrossingTable& h);

struct CrossingProfile {
  /// values[q-1] = cr_q(G, σ) for q = 1..p.
  std::vector<std::uint32_t> values;
  /// Achieves values.back() with at most p pages.
  PageAssignment witness;
};

CrossingProfile cr_up_to(const OrderedGraph& g, int p, std::size_t max_edges = kDefaultMaxEdges);

/// Least p with cr_p = 0; 0 for an edgeless graph.
int page_number(const OrderedGraph& g, std::size_t max_edges = kDefaultMaxEdges);

/// page_number together with a crossing-free witness using that many pages.
PageAssignment page_number_witness(const OrderedGraph& g,
                                   std::size_t max_edges = kDefaultMaxEdges);

}  // namespace bookemb::exact
