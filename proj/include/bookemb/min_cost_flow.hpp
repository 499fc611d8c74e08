#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bookemb::flow {

struct Arc {
  std::size_t from;
  std::size_t to;
  std::int64_t capacity;
  std::int64_t cost;
};

/// Directed network with integer capacities and costs. Arcs with negative
/// cost are allowed as long as the arcs form a DAG (potentials are seeded by
/// a DAG shortest-path pass).
struct Network {
  std::size_t nodes = 0;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::vector<Arc> arcs;

  std::size_t add_node() { return nodes++; }
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity, std::int64_t cost);
};

struct FlowResult {
  std::int64_t value = 0;
  std::int64_t cost = 0;
  /// Flow on every arc, same indexing as Network::arcs.
  std::vector<std::int64_t> arc_flow;
};

/// Integral maximum flow of minimum cost by successive shortest paths with
/// Johnson potentials. Throws InputError when the network has a cycle.
FlowResult min_cost_max_flow(const Network& net);

}  // namespace bookemb::flow
