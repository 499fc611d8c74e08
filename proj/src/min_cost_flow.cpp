#include "bookemb/min_cost_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>

#include "bookemb/errors.hpp"

namespace bookemb::flow {

std::size_t Network::add_arc(std::size_t from, std::size_t to, std::int64_t capacity,
                             std::int64_t cost) {
  if (from >= nodes || to >= nodes) throw InputError("arc endpoint is not a node");
  if (capacity < 0) throw InputError("arc capacity must be non-negative");
  arcs.push_back({from, to, capacity, cost});
  return arcs.size() - 1;
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Residual {
  std::size_t to;
  std::int64_t cap;
  std::int64_t cost;
  std::size_t rev;
  std::size_t arc;  // original arc index
  bool forward;
};

/// Shortest distances from the source over the original arcs, in
/// topological order.
std::vector<std::int64_t> dag_potentials(const Network& net) {
  std::vector<std::size_t> indeg(net.nodes, 0);
  std::vector<std::vector<std::size_t>> out(net.nodes);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (net.arcs[i].capacity == 0) continue;
    out[net.arcs[i].from].push_back(i);
    ++indeg[net.arcs[i].to];
  }
  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < net.nodes; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (std::size_t i : out[v]) {
      if (--indeg[net.arcs[i].to] == 0) ready.push_back(net.arcs[i].to);
    }
  }
  if (order.size() != net.nodes) throw InputError("flow network contains a directed cycle");

  std::vector<std::int64_t> dist(net.nodes, kInf);
  dist[net.source] = 0;
  for (std::size_t v : order) {
    if (dist[v] == kInf) continue;
    for (std::size_t i : out[v]) {
      const Arc& a = net.arcs[i];
      dist[a.to] = std::min(dist[a.to], dist[v] + a.cost);
    }
  }
  for (auto& d : dist) {
    if (d == kInf) d = 0;
  }
  return dist;
}

}  // namespace

FlowResult min_cost_max_flow(const Network& net) {
  FlowResult result;
  result.arc_flow.assign(net.arcs.size(), 0);
  if (net.source == net.sink || net.nodes == 0) return result;

  std::vector<std::vector<Residual>> g(net.nodes);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    g[a.from].push_back({a.to, a.capacity, a.cost, g[a.to].size(), i, true});
    g[a.to].push_back({a.from, 0, -a.cost, g[a.from].size() - 1, i, false});
  }

  std::vector<std::int64_t> potential = dag_potentials(net);
  std::vector<std::int64_t> dist(net.nodes);
  std::vector<std::pair<std::size_t, std::size_t>> via(net.nodes);

  while (true) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[net.source] = 0;
    using Item = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0, net.source);
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (std::size_t j = 0; j < g[v].size(); ++j) {
        const Residual& r = g[v][j];
        if (r.cap == 0) continue;
        const std::int64_t nd = d + r.cost + potential[v] - potential[r.to];
        if (nd < dist[r.to]) {
          dist[r.to] = nd;
          via[r.to] = {v, j};
          heap.emplace(nd, r.to);
        }
      }
    }
    if (dist[net.sink] == kInf) break;
    for (std::size_t v = 0; v < net.nodes; ++v) {
      if (dist[v] < kInf) potential[v] += dist[v];
    }

    std::int64_t push = kInf;
    for (std::size_t v = net.sink; v != net.source; v = via[v].first) {
      push = std::min(push, g[via[v].first][via[v].second].cap);
    }
    for (std::size_t v = net.sink; v != net.source; v = via[v].first) {
      Residual& r = g[via[v].first][via[v].second];
      r.cap -= push;
      g[r.to][r.rev].cap += push;
      result.cost += push * r.cost;
      result.arc_flow[r.arc] += r.forward ? push : -push;
    }
    result.value += push;
  }
  return result;
}

}  // namespace bookemb::flow
