#include <doctest.h>

#include <cmath>
#include <memory>

#include "bookemb/edge_deletion.hpp"
#include "bookemb/errors.hpp"
#include "bookemb/oracles.hpp"
#include "bookemb/tree_decomposition.hpp"
#include "random_instances.hpp"

using namespace bookemb;
using bookemb::testing::complete_graph;
using bookemb::testing::edge_id;

namespace {

fpt::Instance root_of(const OrderedGraph& g, long k, std::size_t d) {
  return fpt::Instance::root(std::make_shared<const OrderedGraph>(g), k, d);
}

SimpleGraph graph_from(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  SimpleGraph h;
  h.adj.assign(n, {});
  for (auto [a, b] : edges) {
    h.adj[a].push_back(b);
    h.adj[b].push_back(a);
  }
  return h;
}

/// A single bag holding every vertex.
fpt::TreeDecomposition trivial_decomposition(std::size_t n) {
  fpt::TreeDecomposition td;
  std::vector<std::size_t> bag(n);
  for (std::size_t i = 0; i < n; ++i) bag[i] = i;
  td.add(bag, fpt::TreeDecomposition::kNoParent);
  return td;
}

}  // namespace

TEST_CASE("branching leaves are sparse") {
  const OrderedGraph k5 = complete_graph(5);
  const auto leaves = fpt::branch(root_of(k5, 1, 0));
  // (1,3) has two crossers: light branch only, the heavy one needs k >= 2.
  for (const auto& leaf : leaves) {
    CHECK(leaf.k >= 0);
    CHECK(leaf.deleted().count() + static_cast<std::size_t>(leaf.k) == 1);
    const auto threshold = leaf.d + std::max<long>(1, std::lround(std::ceil(std::sqrt(leaf.k))));
    leaf.alive.for_each([&](EdgeId e) {
      CHECK((k5.crossing(e) & leaf.alive).count() < static_cast<std::size_t>(threshold));
    });
  }
  const OrderedGraph path(3, {{1, 2}, {2, 3}});
  const auto single = fpt::branch(root_of(path, 2, 0));
  REQUIRE(single.size() == 1);
  CHECK(single[0].alive == path.all_edges());
}

TEST_CASE("an edge crossed more than d+k times is always deleted") {
  // Five pairwise crossing edges: every edge has four crossers.
  const OrderedGraph g(10, {{1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
  CHECK(fpt::branch(root_of(g, 1, 0)).empty());
  const auto leaves = fpt::branch(root_of(g, 4, 0));
  REQUIRE_FALSE(leaves.empty());
  for (const auto& leaf : leaves) CHECK(leaf.deleted().count() <= 4);
}

TEST_CASE("separator on three nested edges") {
  const OrderedGraph g(6, {{1, 6}, {2, 5}, {3, 4}});
  const fpt::Separation s = fpt::balanced_separator(g, 0);
  CHECK(s.separator == EdgeSubset(3, {1}));
  CHECK(s.first == EdgeSubset(3, {2}));
  CHECK(s.second == EdgeSubset(3, {0}));
}

TEST_CASE("separator invariants on random d-planar graphs") {
  bookemb::testing::Rng rng(21);
  for (int round = 0; round < 120; ++round) {
    const std::size_t d = static_cast<std::size_t>(round % 3);
    const OrderedGraph g = bookemb::testing::random_d_planar(rng, 6 + round % 14, 4 + round % 30, d);
    const fpt::Separation s = fpt::balanced_separator(g, d);
    CHECK_FALSE(fpt::check_separation(g, g.all_edges(), d, s).has_value());
    CHECK(s.separator.count() <= 3 * (d + 1));
    CHECK(3 * s.first.count() <= 2 * g.m());
    CHECK(3 * s.second.count() <= 2 * g.m());
    s.first.for_each([&](EdgeId e) { CHECK_FALSE(g.crossing(e).intersects(s.second)); });
    CHECK(((s.separator | s.first | s.second) == g.all_edges()));
  }
  CHECK_THROWS_AS(fpt::balanced_separator(complete_graph(5), 1), InputError);
}

TEST_CASE("decompositions from separators are valid") {
  const OrderedGraph path(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(fpt::build_decomposition(path, 0).width() == 0);
  const OrderedGraph k4 = complete_graph(4);
  const auto td4 = fpt::build_decomposition(k4, 1);
  CHECK(td4.width() == 1);
  CHECK_FALSE(fpt::validate(td4, conflict_graph(k4)).has_value());
  bookemb::testing::Rng rng(4);
  for (int round = 0; round < 30; ++round) {
    const OrderedGraph g = bookemb::testing::random_d_planar(rng, 16, 30, 1);
    const auto td = fpt::build_decomposition(g, 1);
    CHECK_FALSE(fpt::validate(td, conflict_graph(g)).has_value());
  }
}

TEST_CASE("decomposition validator catches broken trees") {
  const SimpleGraph h = graph_from(3, {{0, 1}, {1, 2}});
  fpt::TreeDecomposition td;
  const auto root = td.add({0, 1}, fpt::TreeDecomposition::kNoParent);
  td.add({2}, root);
  CHECK(fpt::validate(td, h).has_value());
  fpt::TreeDecomposition disconnected;
  const auto r = disconnected.add({0, 1}, fpt::TreeDecomposition::kNoParent);
  const auto mid = disconnected.add({1, 2}, r);
  disconnected.add({0}, mid);
  CHECK(fpt::validate(disconnected, h).has_value());
  CHECK_THROWS_AS(fpt::degree_d_deletion(h, td, 0, 3), InputError);
}

TEST_CASE("degree-d deletion examples") {
  const SimpleGraph empty = graph_from(3, {});
  const auto none = fpt::degree_d_deletion(empty, trivial_decomposition(3), 0, 0);
  REQUIRE(none);
  CHECK(none->empty());
  const SimpleGraph edge = graph_from(2, {{0, 1}});
  const auto one = fpt::degree_d_deletion(edge, trivial_decomposition(2), 0, 1);
  REQUIRE(one);
  CHECK(one->size() == 1);
  const SimpleGraph c5 = graph_from(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK_FALSE(fpt::degree_d_deletion(c5, trivial_decomposition(5), 0, 2));
  const auto three = fpt::degree_d_deletion(c5, trivial_decomposition(5), 0, 3);
  REQUIRE(three);
  CHECK(three->size() == 3);
}

TEST_CASE("degree-d deletion matches brute force") {
  bookemb::testing::Rng rng(13);
  for (int round = 0; round < 40; ++round) {
    const std::size_t d = static_cast<std::size_t>(round % 3);
    const OrderedGraph g = bookemb::testing::random_d_planar(rng, 8, 11, 3);
    const SimpleGraph h = conflict_graph(g);
    const auto td = fpt::build_decomposition(g, max_crossings(g, g.all_edges()));
    const auto got = fpt::degree_d_deletion(h, td, d, h.size());
    REQUIRE(got);
    CHECK(got->size() == oracle::oracle_degree_deletion(h, d));
  }
}

TEST_CASE("solve examples") {
  const OrderedGraph k4 = complete_graph(4);
  const auto s4 = fpt::solve(k4, 0, 1);
  REQUIRE(s4);
  CHECK(s4->count() == 1);
  CHECK((s4->contains(edge_id(k4, 1, 3)) || s4->contains(edge_id(k4, 2, 4))));
  const OrderedGraph k5 = complete_graph(5);
  CHECK_FALSE(fpt::solve(k5, 0, 2));
  const auto s5 = fpt::solve(k5, 2, 0);
  REQUIRE(s5);
  CHECK(s5->empty());
}

TEST_CASE("solve agrees with the deletion oracle") {
  bookemb::testing::Rng rng(17);
  for (int round = 0; round < 40; ++round) {
    const std::size_t d = static_cast<std::size_t>(round % 3);
    const long k = round % 4;
    const OrderedGraph g = bookemb::testing::random_graph(rng, 7, 6 + round % 7);
    const std::size_t opt = oracle::oracle_min_deletion(g, 1, d);
    const auto got = fpt::solve(g, d, k);
    CHECK(got.has_value() == (static_cast<long>(opt) <= k));
    if (got) {
      CHECK(got->count() == opt);
      CHECK(max_crossings(g, g.all_edges() - *got) <= d);
    }
    if (got) CHECK(fpt::solve(g, d + 1, k).has_value());
    if (got) CHECK(fpt::solve(g, d, k + 1).has_value());
  }
}
