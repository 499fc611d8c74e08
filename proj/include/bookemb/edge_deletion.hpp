#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "bookemb/core.hpp"
#include "bookemb/tree_decomposition.hpp"

namespace bookemb::fpt {

/// A node of the branching tree: the original graph restricted to `alive`,
/// with remaining budget k and crossing bound d.
struct Instance {
  std::shared_ptr<const OrderedGraph> graph;
  EdgeSubset alive;
  long k = 0;
  std::size_t d = 0;

  static Instance root(std::shared_ptr<const OrderedGraph> g, long k, std::size_t d);
  EdgeSubset deleted() const { return graph->all_edges() - alive; }
};

struct Separation {
  EdgeSubset separator;
  EdgeSubset first;
  EdgeSubset second;
};

struct BranchOptions {
  /// Largest number of heavy branches allowed at a single node.
  double max_heavy_branches = 1e6;
};

struct SolveOptions {
  BranchOptions branching;
  DegreeDeletionOptions dp;
};

/// Branches on edges with |cross(e)| >= d + max(1, ceil(sqrt k)) until no
/// such edge remains. The result holds every surviving leaf.
std::vector<Instance> branch(const Instance& inst, const BranchOptions& options = {});

/// Balanced separator of the conflict graph of g restricted to `edges`:
/// |X| <= 3(d+1), both sides at most 2|edges|/3, no crossing between sides.
/// Requires every edge of `edges` to have at most d crossings inside it.
Separation balanced_separator(const OrderedGraph& g, const EdgeSubset& edges, std::size_t d);
Separation balanced_separator(const OrderedGraph& g, std::size_t d);

/// Empty if `sep` satisfies all separation bounds for (g, edges, d).
std::optional<std::string> check_separation(const OrderedGraph& g, const EdgeSubset& edges,
                                            std::size_t d, const Separation& sep);

/// Tree decomposition of the conflict graph of g (vertex i = edge i) from
/// recursive balanced separators. Requires g to be d-planar on one page.
TreeDecomposition build_decomposition(const OrderedGraph& g, std::size_t d);

/// Minimum edge set S, |S| <= k, leaving every edge with at most d
/// crossings, or nullopt. Runs the branching and the decomposition DP.
std::optional<EdgeSubset> solve(const OrderedGraph& g, std::size_t d, long k,
                                const SolveOptions& options = {});

}  // namespace bookemb::fpt
