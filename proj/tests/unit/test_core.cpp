#include <doctest.h>

#include <sstream>

#include "bookemb/core.hpp"
#include "bookemb/errors.hpp"
#include "bookemb/io.hpp"
#include "random_instances.hpp"

using namespace bookemb;
using bookemb::testing::complete_graph;
using bookemb::testing::edge_id;

TEST_CASE("edge subsets behave like sets") {
  EdgeSubset a(70, {0, 3, 65});
  EdgeSubset b(70, {3, 4});
  CHECK(a.count() == 3);
  CHECK((a | b).count() == 4);
  CHECK((a & b).ids() == std::vector<EdgeId>{3});
  CHECK((a - b).ids() == std::vector<EdgeId>{0, 65});
  CHECK(a.first() == 0);
  CHECK(a.next(3) == 65);
  CHECK(a.next(65) == 70);
  CHECK(EdgeSubset::full(5).to_mask() == 31);
  CHECK(EdgeSubset::from_mask(5, 6).ids() == std::vector<EdgeId>{1, 2});
  CHECK_THROWS_AS(a | EdgeSubset(3), InputError);
}

TEST_CASE("crossing and containment on K4 and K5") {
  const OrderedGraph k4 = complete_graph(4);
  const EdgeId e13 = edge_id(k4, 1, 3);
  const EdgeId e24 = edge_id(k4, 2, 4);
  const EdgeId e23 = edge_id(k4, 2, 3);
  CHECK(crosses(k4, e13, e24));
  CHECK_FALSE(crosses(k4, e13, e23));
  CHECK_FALSE(crosses(k4, edge_id(k4, 1, 2), edge_id(k4, 3, 4)));
  CHECK(contains(k4, edge_id(k4, 1, 4), e23));
  CHECK(contains(k4, edge_id(k4, 1, 4), e13));
  CHECK_FALSE(contains(k4, e13, e24));
  CHECK(cross_set(k4, e13).ids() == std::vector<EdgeId>{e24});
  CHECK_THROWS_AS(crosses(k4, e13, e13), InputError);
  CHECK_THROWS_AS(crosses(k4, e13, 99), InputError);

  const OrderedGraph k5 = complete_graph(5);
  CHECK(cross_set(k5, edge_id(k5, 1, 3)) ==
        EdgeSubset(k5.m(), {edge_id(k5, 2, 4), edge_id(k5, 2, 5)}));
}

TEST_CASE("span, left and maximal edges") {
  const OrderedGraph g(4, {{1, 4}, {2, 3}});
  CHECK(span_set(g, 0).ids() == std::vector<EdgeId>{1});
  CHECK(maximal_edges(g).ids() == std::vector<EdgeId>{0});
  const OrderedGraph k4 = complete_graph(4);
  CHECK(left_set(k4, 3) ==
        EdgeSubset(k4.m(), {edge_id(k4, 1, 2), edge_id(k4, 1, 3), edge_id(k4, 2, 3)}));
}

TEST_CASE("d-planarity and crossing counts") {
  const OrderedGraph k4 = complete_graph(4);
  const PageAssignment one(k4.m(), 1, 1);
  CHECK(is_d_planar(k4, one, 1));
  CHECK_FALSE(is_d_planar(k4, one, 0));
  CHECK(is_d_planar(k4, PageAssignment(k4.m(), 1), 0));
  PageAssignment split(k4.m(), 2, 1);
  split.set(edge_id(k4, 2, 4), 2);
  CHECK(crossing_count(k4, split) == 0);
  const OrderedGraph k5 = complete_graph(5);
  CHECK(crossing_count(k5, PageAssignment(k5.m(), 1, 1)) == 5);
  CHECK(crossing_count(OrderedGraph(2, {{1, 2}}), PageAssignment(1, 1, 1)) == 0);
}

TEST_CASE("crossing predicate invariants on random graphs") {
  bookemb::testing::Rng rng(7);
  for (int round = 0; round < 40; ++round) {
    const OrderedGraph g = bookemb::testing::random_graph(rng, 7, 12);
    std::size_t sum = 0;
    for (EdgeId e = 0; e < g.m(); ++e) {
      sum += cross_set(g, e).count();
      for (EdgeId f = 0; f < g.m(); ++f) {
        if (e == f) continue;
        CHECK(crosses(g, e, f) == crosses(g, f, e));
        CHECK(cross_set(g, e).contains(f) == crosses(g, e, f));
        if (crosses(g, e, f)) {
          CHECK_FALSE(contains(g, e, f));
          CHECK_FALSE(contains(g, f, e));
        }
      }
    }
    CHECK(crossing_pairs(g, g.all_edges()) * 2 == sum);
  }
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(OrderedGraph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(OrderedGraph(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(OrderedGraph(3, {{1, 2}, {2, 1}}), InputError);
  const OrderedGraph g(3, {{3, 1}});
  CHECK(g.edge(0).u == 1);
  CHECK(g.edge(0).v == 3);
}

TEST_CASE("labels survive normalization") {
  const OrderedGraph g = OrderedGraph::from_order({"c", "a", "b"}, {{"a", "c"}, {"b", "c"}});
  CHECK(g.edge(0).u == 1);
  CHECK(g.edge(0).v == 2);
  CHECK(g.label(1) == "c");
}

TEST_CASE("page assignments validate against the graph") {
  const OrderedGraph k4 = complete_graph(4);
  PageAssignment a(k4.m(), 2, 1);
  CHECK_THROWS_AS(a.set(0, 3), InputError);
  CHECK_THROWS_AS(PageAssignment(3, 1).validate(k4), InputError);
  a.set(0, PageAssignment::kDeleted);
  CHECK(a.deleted_edges().ids() == std::vector<EdgeId>{0});
  CHECK(a.edges_on(1).count() == 5);
}

TEST_CASE("reading ordered graphs") {
  std::istringstream ok("# comment\n4 2\n1 3\n\n2 4\n");
  const OrderedGraph g = io::read_ordered_graph(ok);
  CHECK(g.n() == 4);
  CHECK(g.m() == 2);

  auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      io::read_ordered_graph(in);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("3 1\n1 x\n").find("line 2") != std::string::npos);
  CHECK(message("3 1\n1 5\n").find("line 2") != std::string::npos);
  CHECK(message("3 2\n1 2\n").find("end of input") != std::string::npos);
  CHECK(message("3 1\n1 2 3\n").find("line 2") != std::string::npos);
  CHECK(message("3 1\n2 2\n").find("line 2") != std::string::npos);

  std::ostringstream out;
  io::write_ordered_graph(out, g);
  std::istringstream back(out.str());
  CHECK(io::read_ordered_graph(back).edges() == g.edges());
}

TEST_CASE("reading track instances") {
  std::istringstream in("2 2 3\n1 1\n2 1\n1 2\n");
  const auto inst = io::read_track_instance(in);
  CHECK(inst.a() == 2);
  CHECK(inst.b() == 2);
  CHECK(inst.neighbors(0) == std::vector<int>{1, 2});
  std::istringstream bad("2 2 1\n1 3\n");
  CHECK_THROWS_AS(io::read_track_instance(bad), InputError);
}

TEST_CASE("conflict graph of K5 is a five-cycle") {
  const SimpleGraph h = conflict_graph(complete_graph(5));
  CHECK(h.size() == 10);
  CHECK(h.edge_count() == 5);
}
