#include "bookemb/core.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bookemb/errors.hpp"

namespace bookemb {

namespace {

bool interleave(const Edge& a, const Edge& b) {
  return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
}

}  // namespace

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw InputError("vertex count must be non-negative");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) {
      throw InputError("edge " + std::to_string(i) + " is a self-loop at vertex " +
                       std::to_string(e.u));
    }
    if (e.u < 1 || e.v > n_) {
      throw InputError("edge " + std::to_string(i) + " (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") has an endpoint outside 1.." + std::to_string(n_));
    }
    if (!seen.emplace(e.u, e.v).second) {
      throw InputError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
  const std::size_t m = edges_.size();
  cross_.assign(m, EdgeSubset(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (interleave(edges_[i], edges_[j])) {
        cross_[i].insert(j);
        cross_[j].insert(i);
      }
    }
  }
}

OrderedGraph OrderedGraph::from_order(
    const std::vector<std::string>& order,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, Vertex> position;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!position.emplace(order[i], static_cast<Vertex>(i + 1)).second) {
      throw InputError("vertex label '" + order[i] + "' appears twice in the order");
    }
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = position.find(a);
    auto ib = position.find(b);
    if (ia == position.end() || ib == position.end()) {
      throw InputError("edge (" + a + "," + b + ") uses a label missing from the order");
    }
    mapped.push_back({ia->second, ib->second});
  }
  OrderedGraph g(static_cast<int>(order.size()), std::move(mapped));
  g.labels_ = order;
  return g;
}

const Edge& OrderedGraph::edge(EdgeId e) const { return edges_[check(e)]; }

std::string OrderedGraph::label(Vertex pos) const {
  if (pos >= 1 && static_cast<std::size_t>(pos) <= labels_.size()) {
    return labels_[static_cast<std::size_t>(pos - 1)];
  }
  return std::to_string(pos);
}

std::pair<OrderedGraph, std::vector<EdgeId>> OrderedGraph::induced(const EdgeSubset& keep) const {
  std::vector<Edge> kept;
  std::vector<EdgeId> back;
  keep.for_each([&](EdgeId e) {
    kept.push_back(edges_[check(e)]);
    back.push_back(e);
  });
  OrderedGraph sub(n_, std::move(kept));
  sub.labels_ = labels_;
  return {std::move(sub), std::move(back)};
}

EdgeId OrderedGraph::check(EdgeId e) const {
  if (e >= edges_.size()) {
    throw InputError("edge index " + std::to_string(e) + " out of range (m = " +
                     std::to_string(edges_.size()) + ")");
  }
  return e;
}

PageAssignment::PageAssignment(std::size_t m, int page_count, int initial)
    : page_count_(page_count), pages_(m, initial) {
  if (page_count < 0) throw InputError("page count must be non-negative");
  if (initial < kDeleted || initial > page_count) throw InputError("initial page out of range");
}

void PageAssignment::set(EdgeId e, int page) {
  if (page < kDeleted || page > page_count_) {
    throw InputError("page " + std::to_string(page) + " outside 1.." +
                     std::to_string(page_count_));
  }
  pages_.at(e) = page;
}

EdgeSubset PageAssignment::edges_on(int page) const {
  EdgeSubset s(pages_.size());
  for (std::size_t e = 0; e < pages_.size(); ++e) {
    if (pages_[e] == page) s.insert(e);
  }
  return s;
}

EdgeSubset PageAssignment::deleted_edges() const { return edges_on(kDeleted); }

int PageAssignment::used_pages() const {
  std::set<int> used;
  for (int p : pages_) {
    if (p != kDeleted) used.insert(p);
  }
  return static_cast<int>(used.size());
}

void PageAssignment::validate(const OrderedGraph& g) const {
  if (pages_.size() != g.m()) {
    throw InputError("assignment covers " + std::to_string(pages_.size()) +
                     " edges but the graph has " + std::to_string(g.m()));
  }
  for (std::size_t e = 0; e < pages_.size(); ++e) {
    if (pages_[e] < kDeleted || pages_[e] > page_count_) {
      throw InputError("edge " + std::to_string(e) + " assigned to invalid page " +
                       std::to_string(pages_[e]));
    }
  }
}

bool crosses(const OrderedGraph& g, EdgeId e, EdgeId f) {
  if (e == f) throw InputError("crosses() needs two distinct edges");
  return interleave(g.edge(e), g.edge(f));
}

bool contains(const OrderedGraph& g, EdgeId e, EdgeId f) {
  if (e == f) throw InputError("contains() needs two distinct edges");
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  return a.u <= b.u && b.v <= a.v;
}

EdgeSubset cross_set(const OrderedGraph& g, EdgeId e) { return g.crossing(e); }

EdgeSubset cross_set(const OrderedGraph& g, EdgeId e, const EdgeSubset& within) {
  return g.crossing(e) & within;
}

EdgeSubset span_set(const OrderedGraph& g, EdgeId e) { return span_set(g, e, g.all_edges()); }

EdgeSubset span_set(const OrderedGraph& g, EdgeId e, const EdgeSubset& within) {
  const Edge& outer = g.edge(e);
  EdgeSubset out(g.m());
  within.for_each([&](EdgeId f) {
    if (f == e) return;
    const Edge& inner = g.edge(f);
    if (outer.u <= inner.u && inner.v <= outer.v) out.insert(f);
  });
  return out;
}

EdgeSubset left_set(const OrderedGraph& g, Vertex w) { return left_set(g, w, g.all_edges()); }

EdgeSubset left_set(const OrderedGraph& g, Vertex w, const EdgeSubset& within) {
  EdgeSubset out(g.m());
  within.for_each([&](EdgeId f) {
    if (g.edge(f).v <= w) out.insert(f);
  });
  return out;
}

EdgeSubset maximal_edges(const OrderedGraph& g) { return maximal_edges(g, g.all_edges()); }

EdgeSubset maximal_edges(const OrderedGraph& g, const EdgeSubset& within) {
  EdgeSubset out(g.m());
  within.for_each([&](EdgeId e) {
    const Edge& a = g.edge(e);
    bool covered = false;
    within.for_each([&](EdgeId f) {
      if (covered || f == e) return;
      const Edge& b = g.edge(f);
      if (b.u <= a.u && a.v <= b.v) covered = true;
    });
    if (!covered) out.insert(e);
  });
  return out;
}

std::size_t crossing_pairs(const OrderedGraph& g, const EdgeSubset& edges) {
  std::size_t twice = 0;
  edges.for_each([&](EdgeId e) { twice += (g.crossing(e) & edges).count(); });
  return twice / 2;
}

std::size_t max_crossings(const OrderedGraph& g, const EdgeSubset& edges) {
  std::size_t best = 0;
  edges.for_each([&](EdgeId e) { best = std::max(best, (g.crossing(e) & edges).count()); });
  return best;
}

bool is_d_planar(const OrderedGraph& g, const PageAssignment& assignment, std::size_t d) {
  assignment.validate(g);
  for (int q = 1; q <= assignment.page_count(); ++q) {
    if (max_crossings(g, assignment.edges_on(q)) > d) return false;
  }
  return true;
}

std::size_t crossing_count(const OrderedGraph& g, const PageAssignment& assignment) {
  assignment.validate(g);
  std::size_t total = 0;
  for (int q = 1; q <= assignment.page_count(); ++q) {
    total += crossing_pairs(g, assignment.edges_on(q));
  }
  return total;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adj) twice += nb.size();
  return twice / 2;
}

bool SimpleGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& nb = adj.at(a);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

SimpleGraph conflict_graph(const OrderedGraph& g) {
  SimpleGraph h;
  h.adj.resize(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) h.adj[e] = g.crossing(e).ids();
  return h;
}

}  // namespace bookemb
