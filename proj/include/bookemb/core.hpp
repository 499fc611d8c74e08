#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bookemb/edge_subset.hpp"

namespace bookemb {

/// Spine position, 1-based.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A graph whose vertices sit on the spine at positions 1..n.
///
/// Edge indices follow insertion order and never change, so every
/// EdgeSubset built against a graph stays meaningful for its lifetime.
/// The object is immutable after construction; the pairwise crossing sets
/// are precomputed.
class OrderedGraph {
 public:
  OrderedGraph() = default;
  /// Edges are given as spine positions; (v, u) with u < v is accepted and
  /// stored as (u, v). Throws InputError on self-loops, duplicates or
  /// out-of-range endpoints.
  OrderedGraph(int n, std::vector<Edge> edges);

  /// Builds a graph from an arbitrary vertex order. `order[i]` is the label
  /// placed at spine position i + 1; edges refer to labels. Labels are kept
  /// for output.
  static OrderedGraph from_order(const std::vector<std::string>& order,
                                 const std::vector<std::pair<std::string, std::string>>& edges);

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const;
  const std::vector<Edge>& edges() const { return edges_; }
  /// Original label of the vertex at spine position `pos`.
  std::string label(Vertex pos) const;

  EdgeSubset all_edges() const { return EdgeSubset::full(m()); }
  EdgeSubset no_edges() const { return EdgeSubset(m()); }

  /// Precomputed cross(e) over the full edge set.
  const EdgeSubset& crossing(EdgeId e) const { return cross_[check(e)]; }

  /// Sub-graph on the same spine keeping only `keep`; the second member maps
  /// new edge indices back to indices of this graph.
  std::pair<OrderedGraph, std::vector<EdgeId>> induced(const EdgeSubset& keep) const;

 private:
  EdgeId check(EdgeId e) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<EdgeSubset> cross_;
};

/// Edge -> page in 1..page_count, or kDeleted.
class PageAssignment {
 public:
  static constexpr int kDeleted = 0;

  PageAssignment() = default;
  PageAssignment(std::size_t m, int page_count, int initial = kDeleted);

  std::size_t m() const { return pages_.size(); }
  int page_count() const { return page_count_; }
  int page(EdgeId e) const { return pages_.at(e); }
  void set(EdgeId e, int page);
  bool deleted(EdgeId e) const { return pages_.at(e) == kDeleted; }

  EdgeSubset edges_on(int page) const;
  EdgeSubset deleted_edges() const;
  /// Number of pages that carry at least one edge.
  int used_pages() const;

  const std::vector<int>& raw() const { return pages_; }

  /// Throws InputError unless the domain matches g and every value is valid.
  void validate(const OrderedGraph& g) const;

  friend bool operator==(const PageAssignment&, const PageAssignment&) = default;

 private:
  int page_count_ = 0;
  std::vector<int> pages_;
};

bool crosses(const OrderedGraph& g, EdgeId e, EdgeId f);
/// Interval containment of (u,v) over (u',v'); shared endpoints allowed.
bool contains(const OrderedGraph& g, EdgeId e, EdgeId f);

EdgeSubset cross_set(const OrderedGraph& g, EdgeId e);
/// cross(e) restricted to `within`.
EdgeSubset cross_set(const OrderedGraph& g, EdgeId e, const EdgeSubset& within);
EdgeSubset span_set(const OrderedGraph& g, EdgeId e);
EdgeSubset span_set(const OrderedGraph& g, EdgeId e, const EdgeSubset& within);
/// Edges whose right endpoint is at or left of w.
EdgeSubset left_set(const OrderedGraph& g, Vertex w);
EdgeSubset left_set(const OrderedGraph& g, Vertex w, const EdgeSubset& within);
EdgeSubset maximal_edges(const OrderedGraph& g);
EdgeSubset maximal_edges(const OrderedGraph& g, const EdgeSubset& within);

/// Number of crossing pairs inside `edges` when drawn on one page.
std::size_t crossing_pairs(const OrderedGraph& g, const EdgeSubset& edges);
/// Largest |cross(e) ∩ edges| over e in edges; 0 when empty.
std::size_t max_crossings(const OrderedGraph& g, const EdgeSubset& edges);

bool is_d_planar(const OrderedGraph& g, const PageAssignment& assignment, std::size_t d);
std::size_t crossing_count(const OrderedGraph& g, const PageAssignment& assignment);

/// Undirected simple graph on vertices 0..size-1.
struct SimpleGraph {
  std::vector<std::vector<std::size_t>> adj;

  std::size_t size() const { return adj.size(); }
  std::size_t edge_count() const;
  bool adjacent(std::size_t a, std::size_t b) const;
};

/// Vertex per edge of g, adjacency per crossing pair.
SimpleGraph conflict_graph(const OrderedGraph& g);

}  // namespace bookemb
