#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bookemb/core.hpp"
#include "bookemb/min_cost_flow.hpp"

namespace bookemb::hitting {

/// Points strictly between spine positions; point i sits at gaps[i] + 0.5.
struct HittingSet {
  std::vector<Vertex> gaps;

  std::size_t size() const { return gaps.size(); }
  double coordinate(std::size_t i) const { return gaps.at(i) + 0.5; }
};

/// Contiguous run points[first..last] of a hitting set. Edges only ever
/// bridge contiguous runs.
struct PointRange {
  std::size_t first = 0;
  std::size_t last = 0;

  bool contains(const PointRange& o) const { return first <= o.first && o.last <= last; }
  bool disjoint(const PointRange& o) const { return last < o.first || o.last < first; }
  std::size_t size() const { return last - first + 1; }
  friend auto operator<=>(const PointRange&, const PointRange&) = default;
};

/// Minimum hitting set by the right-endpoint sweep.
HittingSet greedy_hitting_set(const OrderedGraph& g);
/// True when every edge interval contains one of the points.
bool hits_all(const OrderedGraph& g, const HittingSet& h);
/// h for the edges of `edges` only, 0 when empty.
std::size_t hitting_number(const OrderedGraph& g, const EdgeSubset& edges);

/// The points strictly inside edge e. Throws InputError if e contains none.
PointRange bridge_set(const OrderedGraph& g, const HittingSet& h, EdgeId e);
/// E_X: edges whose interior points are exactly X.
EdgeSubset edges_bridging(const OrderedGraph& g, const HittingSet& h, const PointRange& x);

/// Flow network for chains of nested edges. Every node edge e becomes a
/// gadget in(e) -> out(e) with capacity 1 and cost -1.
struct ChainNetwork {
  flow::Network net;
  std::size_t s = 0;
  std::size_t s_prime = 0;
  std::size_t t = 0;
  std::vector<EdgeId> node_edges;
  /// Indexed by edge id of the graph; npos when the edge is not a node.
  std::vector<std::size_t> in_node;
  std::vector<std::size_t> out_node;
  /// Index of the gadget arc of every node edge (parallel to node_edges).
  std::vector<std::size_t> gadget_arc;
};

/// Containment DAG on `nodes` (arc from contained to containing edge) turned
/// into a network: s -> s' with capacity p, s' -> in(e) for e in sources,
/// out(e) -> t for e in sinks. Requires `nodes` to have a common point.
ChainNetwork build_network(const OrderedGraph& g, const EdgeSubset& nodes,
                           const EdgeSubset& sources, const EdgeSubset& sinks, int p);
/// Unrestricted form over all edges.
ChainNetwork build_network(const OrderedGraph& g, const EdgeSubset& sources,
                           const EdgeSubset& sinks, int p);

/// Arcs of the containment DAG as (contained, containing) pairs.
std::vector<std::pair<EdgeId, EdgeId>> containment_arcs(const OrderedGraph& g,
                                                        const EdgeSubset& nodes);

/// Decomposes the flow into chains, innermost edge first.
std::vector<std::vector<EdgeId>> flow_chains(const ChainNetwork& cn, const flow::FlowResult& flow);

struct DeletionResult {
  EdgeSubset deleted;
  PageAssignment assignment;
};

/// Optimal deletion for p crossing-free pages when one point hits every edge.
DeletionResult solve_h1(const OrderedGraph& g, int p);

struct CompatibleResult {
  EdgeSubset kept;
  /// One chain per page, innermost (a source) to outermost (a sink).
  std::vector<std::vector<EdgeId>> chains;
};

/// Max-cardinality union of |inner| chains, each starting at a distinct
/// edge of `inner` and ending at a distinct edge of `outer`, using only
/// edges of `nodes`; nullopt when no such chain family exists.
std::optional<CompatibleResult> compatible(const OrderedGraph& g, const EdgeSubset& nodes,
                                           const EdgeSubset& inner, const EdgeSubset& outer);
std::optional<CompatibleResult> compatible(const OrderedGraph& g, const EdgeSubset& inner,
                                           const EdgeSubset& outer, int p);

/// (X, e_X, f_X): innermost and outermost edge bridging X on one page.
struct Triple {
  PointRange points;
  EdgeId inner = 0;
  EdgeId outer = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Partial encoding of one page, triples sorted by point range.
using PageEncoding = std::vector<Triple>;

/// Every laminar partial encoding of a single page whose boundary edges are
/// pairwise non-crossing and correctly nested. Throws CapacityError once
/// more than `limit` encodings exist.
std::vector<PageEncoding> enumerate_page_encodings(const OrderedGraph& g, const HittingSet& h,
                                                   double limit);

/// Encoding of a concrete crossing-free page assignment, one entry per page.
std::vector<PageEncoding> extract_encoding(const OrderedGraph& g, const HittingSet& h,
                                           const PageAssignment& assignment);

struct GeneralOptions {
  /// Ceiling on the number of page-encoding combinations examined.
  double max_encodings = 1e8;
};

struct GeneralResult : DeletionResult {
  double encodings_examined = 0;
};

/// Optimal deletion for p crossing-free pages by enumerating encodings.
GeneralResult solve_general(const OrderedGraph& g, int p, const GeneralOptions& options = {});

}  // namespace bookemb::hitting
