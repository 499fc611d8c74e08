#include <doctest.h>

#include <cmath>

#include "bookemb/approx_pages.hpp"
#include "bookemb/circle_mis.hpp"
#include "bookemb/errors.hpp"
#include "bookemb/exact_pages.hpp"
#include "bookemb/oracles.hpp"
#include "random_instances.hpp"

using namespace bookemb;
using bookemb::testing::complete_graph;
using bookemb::testing::edge_id;

TEST_CASE("maximum non-crossing subsets") {
  const OrderedGraph k5 = complete_graph(5);
  const OrderedGraph k4 = complete_graph(4);
  CHECK(circle::max_noncrossing_size(k5, k5.all_edges()) == 7);
  CHECK(circle::max_noncrossing_size(k4, k4.all_edges()) == 5);
  CHECK(circle::max_noncrossing_subset(k4, k4.no_edges()).empty());
  // Lexicographically smallest: keep (1,3), drop (2,4).
  const EdgeSubset s = circle::max_noncrossing_subset(k4, k4.all_edges());
  CHECK(s.contains(edge_id(k4, 1, 3)));
  CHECK_FALSE(s.contains(edge_id(k4, 2, 4)));
}

TEST_CASE("circle MIS agrees with subset enumeration") {
  bookemb::testing::Rng rng(11);
  for (int round = 0; round < 150; ++round) {
    const OrderedGraph g = bookemb::testing::random_graph(rng, 3 + round % 6, 1 + round % 12);
    EdgeSubset cand = g.no_edges();
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (rng() % 4 != 0) cand.insert(e);
    }
    const EdgeSubset s = circle::max_noncrossing_subset(g, cand);
    CHECK(s.is_subset_of(cand));
    CHECK(crossing_pairs(g, s) == 0);
    CHECK(s.count() == oracle::oracle_mis(g, cand));
    CHECK(circle::max_noncrossing_size(g, cand) == s.count());
    CHECK((s == cand) == (crossing_pairs(g, cand) == 0));
  }
}

TEST_CASE("chord model preserves crossings") {
  bookemb::testing::Rng rng(5);
  for (int round = 0; round < 50; ++round) {
    const OrderedGraph g = bookemb::testing::random_graph(rng, 6, 10);
    const circle::ChordModel cm = circle::chord_model(g, g.all_edges());
    REQUIRE(cm.chords.size() == g.m());
    for (std::size_t i = 0; i < cm.chords.size(); ++i) {
      for (std::size_t j = i + 1; j < cm.chords.size(); ++j) {
        const auto [a, b] = cm.chords[i];
        const auto [c, d] = cm.chords[j];
        const bool interleave = (a < c && c < b && b < d) || (c < a && a < d && d < b);
        CHECK(interleave == crosses(g, cm.backrefs[i], cm.backrefs[j]));
      }
    }
  }
}

TEST_CASE("level-one crossing table") {
  const OrderedGraph k4 = complete_graph(4);
  const auto t = exact::cr1_table(k4);
  CHECK(t.full() == 1);
  CHECK(t[0] == 0);
  for (EdgeId e = 0; e < k4.m(); ++e) CHECK(t[1U << e] == 0);
  const OrderedGraph k5 = complete_graph(5);
  const auto t5 = exact::cr1_table(k5);
  std::uint32_t chords = 0;
  for (auto [u, v] : {std::pair{1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 5}}) {
    chords |= 1U << edge_id(k5, u, v);
  }
  CHECK(t5[chords] == 5);
}

TEST_CASE("min-plus subset convolution") {
  const OrderedGraph k4 = complete_graph(4);
  const auto t = exact::cr1_table(k4);
  const auto c = exact::minplus_subset_convolution(t, t);
  CHECK(c.level == 2);
  CHECK(c.full() == 0);
  CHECK(c[0] == 0);
  exact::CrossingTable zero = t;
  std::fill(zero.values.begin(), zero.values.end(), 0);
  const auto z = exact::minplus_subset_convolution(t, zero);
  CHECK(std::all_of(z.values.begin(), z.values.end(), [](std::uint32_t v) { return v == 0; }));
}

TEST_CASE("crossing profiles and page numbers") {
  const OrderedGraph k5 = complete_graph(5);
  const auto prof = exact::cr_up_to(k5, 3);
  CHECK(prof.values == std::vector<std::uint32_t>{5, 1, 0});
  CHECK(crossing_count(k5, prof.witness) == 0);
  const OrderedGraph k4 = complete_graph(4);
  CHECK(exact::cr_up_to(k4, 2).values == std::vector<std::uint32_t>{1, 0});
  CHECK(exact::cr_up_to(OrderedGraph(2, {{1, 2}}), 3).values == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(exact::page_number(k5) == 3);
  CHECK(exact::page_number(k4) == 2);
  CHECK(exact::page_number(OrderedGraph(3, {})) == 0);
  const PageAssignment w = exact::page_number_witness(k5);
  CHECK(w.page_count() == 3);
  CHECK(is_d_planar(k5, w, 0));
}

TEST_CASE("exact tables refuse oversized graphs") {
  const OrderedGraph k7 = complete_graph(7);
  CHECK_THROWS_AS(exact::cr1_table(k7, 20), CapacityError);
  try {
    exact::cr_up_to(k7, 2, 10);
  } catch (const CapacityError& e) {
    CHECK(e.limit() == 10);
    CHECK(e.requested() == 21);
  }
}

TEST_CASE("crossing profile properties on random graphs") {
  bookemb::testing::Rng rng(3);
  for (int round = 0; round < 30; ++round) {
    const OrderedGraph g = bookemb::testing::random_graph(rng, 6, 9);
    const auto prof = exact::cr_up_to(g, 3);
    CHECK(prof.values[0] >= prof.values[1]);
    CHECK(prof.values[1] >= prof.values[2]);
    CHECK(crossing_count(g, prof.witness) == prof.values.back());
    CHECK(prof.values.back() == oracle::oracle_cr_p(g, 3));
    const auto t = exact::cr1_table(g);
    for (std::uint32_t f = 0; f < t.values.size(); ++f) {
      for (EdgeId e = 0; e < g.m(); ++e) CHECK(t[f & ~(1U << e)] <= t[f]);
    }
    CHECK(exact::page_number(g) == oracle::oracle_page_number(g));
  }
}

TEST_CASE("greedy page cover") {
  CHECK(approx::greedy_pages(complete_graph(4)).size() == 2);
  CHECK(approx::greedy_pages(complete_graph(5)).size() == 3);
  CHECK(approx::greedy_pages(OrderedGraph(4, {{1, 2}, {2, 3}, {3, 4}})).size() == 1);
  CHECK(approx::greedy_bound_factor(1) == 1.0);
  CHECK(approx::greedy_bound_factor(10) == doctest::Approx(std::log(10.0) + 1));
}

TEST_CASE("peeling a d-planar page") {
  const OrderedGraph k4 = complete_graph(4);
  const auto parts = approx::split_d_planar_page(k4, k4.all_edges(), 1);
  CHECK(parts.size() == 2);
  const OrderedGraph k5 = complete_graph(5);
  const auto p5 = approx::split_d_planar_page(k5, k5.all_edges(), 2);
  CHECK(p5.size() <= 3);
  EdgeSubset all = k5.no_edges();
  for (const auto& p : p5) {
    CHECK(crossing_pairs(k5, p) == 0);
    CHECK_FALSE(all.intersects(p));
    all |= p;
  }
  CHECK(all == k5.all_edges());
  const OrderedGraph path(3, {{1, 2}, {2, 3}});
  CHECK(approx::split_d_planar_page(path, path.all_edges(), 0).size() == 1);
  try {
    approx::split_d_planar_page(k5, k5.all_edges(), 1);
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
}

TEST_CASE("d-planar approximation") {
  CHECK(approx::d_planar_pages_approx(complete_graph(4), 1).page_count() <= 2);
  CHECK(approx::d_planar_pages_approx(complete_graph(5), 2).page_count() <= 3);
  const OrderedGraph path(3, {{1, 2}, {2, 3}});
  CHECK(approx::d_planar_pages_approx(path, 2).page_count() == 1);
  bookemb::testing::Rng rng(9);
  for (int round = 0; round < 40; ++round) {
    const OrderedGraph g = bookemb::testing::random_d_planar(rng, 8, 14, round % 3);
    for (const auto& page : approx::split_d_planar_page(g, g.all_edges(), round % 3)) {
      CHECK(crossing_pairs(g, page) == 0);
    }
    CHECK(approx::split_d_planar_page(g, g.all_edges(), round % 3).size() <=
          static_cast<std::size_t>(round % 3 + 1));
    const PageAssignment a = approx::d_planar_pages_approx(g, round % 3);
    CHECK(is_d_planar(g, a, 0));
  }
}
