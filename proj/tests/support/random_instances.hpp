#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "bookemb/core.hpp"
#include "bookemb/hitting_flow.hpp"
#include "bookemb/tracks.hpp"

namespace bookemb::testing {

using Rng = std::mt19937_64;

/// n vertices, m distinct edges drawn uniformly (m is clipped to C(n,2)).
inline OrderedGraph random_graph(Rng& rng, int n, std::size_t m) {
  std::vector<Edge> all;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(all.size(), m));
  return OrderedGraph(n, all);
}

/// Random edges kept only while every edge has at most d crossings.
inline OrderedGraph random_d_planar(Rng& rng, int n, std::size_t m, std::size_t d) {
  std::vector<Edge> all;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<Edge> kept;
  for (const Edge& e : all) {
    if (kept.size() == m) break;
    kept.push_back(e);
    const OrderedGraph g(n, kept);
    if (max_crossings(g, g.all_edges()) > d) kept.pop_back();
  }
  return OrderedGraph(n, kept);
}

/// Bipartite graph with every edge from {1..left} to {left+1..left+right},
/// so a single point between the sides hits every edge.
inline OrderedGraph random_separated(Rng& rng, int left, int right, std::size_t m) {
  std::vector<Edge> all;
  for (int u = 1; u <= left; ++u) {
    for (int v = left + 1; v <= left + right; ++v) all.push_back({u, v});
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(all.size(), m));
  return OrderedGraph(left + right, all);
}

/// Random graph with hitting number at most h: h random gaps are chosen
/// and only edges over one of them are drawn.
inline OrderedGraph random_bounded_hitting(Rng& rng, int n, std::size_t m, std::size_t h) {
  std::vector<Vertex> gaps;
  for (std::size_t i = 0; i < h; ++i) gaps.push_back(1 + static_cast<Vertex>(rng() % (n - 1)));
  std::vector<Edge> all;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (std::any_of(gaps.begin(), gaps.end(), [&](Vertex k) { return u <= k && k < v; })) {
        all.push_back({u, v});
      }
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(all.size(), m));
  return OrderedGraph(n, all);
}

inline tracks::TrackInstance random_track_instance(Rng& rng, int a, std::size_t b, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, tracks::TrackVertex>> edges;
  for (tracks::TrackVertex x = 0; x < b; ++x) {
    for (int s = 1; s <= a; ++s) {
      if (coin(rng)) edges.emplace_back(s, x);
    }
  }
  return tracks::TrackInstance(a, b, edges);
}

inline OrderedGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return OrderedGraph(n, edges);
}

inline OrderedGraph separated_k22() { return OrderedGraph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}); }

inline tracks::TrackInstance complete_track_instance(int a, std::size_t b) {
  std::vector<std::pair<int, tracks::TrackVertex>> edges;
  for (tracks::TrackVertex x = 0; x < b; ++x) {
    for (int s = 1; s <= a; ++s) edges.emplace_back(s, x);
  }
  return tracks::TrackInstance(a, b, edges);
}

/// Edge id of (u, v) in g.
inline EdgeId edge_id(const OrderedGraph& g, Vertex u, Vertex v) {
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (g.edge(e).u == u && g.edge(e).v == v) return e;
  }
  return g.m();
}

}  // namespace bookemb::testing
