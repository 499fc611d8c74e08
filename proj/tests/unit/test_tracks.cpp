#include <doctest.h>

#include "bookemb/errors.hpp"
#include "bookemb/oracles.hpp"
#include "bookemb/tracks.hpp"
#include "random_instances.hpp"

using namespace bookemb;
using namespace bookemb::tracks;
using bookemb::testing::complete_track_instance;

TEST_CASE("pair costs") {
  const TrackInstance k22 = complete_track_instance(2, 2);
  CHECK(pair_cost(k22, 0, 1) == 1);
  CHECK(pair_cost(k22, 1, 0) == 1);
  const TrackInstance star(1, 2, {{1, 0}, {1, 1}});
  CHECK(pair_cost(star, 0, 1) == 0);
  const TrackInstance inv(2, 2, {{2, 0}, {1, 1}});
  CHECK(pair_cost(inv, 0, 1) == 1);
  CHECK(pair_cost(inv, 1, 0) == 0);
}

TEST_CASE("cost table identities") {
  bookemb::testing::Rng rng(41);
  for (int round = 0; round < 30; ++round) {
    const TrackInstance inst = bookemb::testing::random_track_instance(rng, 5, 6, 0.5);
    const CostTable c(inst);
    for (TrackVertex x = 0; x < inst.b(); ++x) {
      CHECK(c(x, x) == 0);
      for (TrackVertex y = 0; y < inst.b(); ++y) {
        if (x == y) continue;
        std::int64_t distinct = 0;
        for (int a : inst.neighbors(x)) {
          for (int b : inst.neighbors(y)) distinct += a != b ? 1 : 0;
        }
        CHECK(c(x, y) + c(y, x) == distinct);
      }
    }
  }
}

TEST_CASE("one track") {
  CHECK(cr1_track(complete_track_instance(2, 2)).value == 1);
  CHECK(cr1_track(complete_track_instance(1, 3)).value == 0);
  CHECK(cr1_track(complete_track_instance(3, 1)).value == 0);
  CHECK(cr1_track(TrackInstance(2, 0, {})).value == 0);
  CHECK_THROWS_AS(cr1_track(complete_track_instance(1, 21)), CapacityError);
  CHECK_THROWS_AS(cr1_track(complete_track_instance(1, 9), 8), CapacityError);
}

TEST_CASE("several tracks") {
  const TrackInstance k22 = complete_track_instance(2, 2);
  CHECK(cr_t_track(k22, 2).value == 0);
  CHECK(cr_t_track(k22, 1).value == 1);
  CHECK(cr_t_track(complete_track_instance(3, 3), 3).value == 0);
  CHECK(cr_t_track(complete_track_instance(3, 3), 5).value == 0);
  CHECK(min_tracks(k22) == 2);
  CHECK(min_tracks(complete_track_instance(1, 3)) == 1);
  CHECK(min_tracks(complete_track_instance(3, 3)) == 3);
  CHECK(min_tracks(TrackInstance(3, 0, {})) == 0);
  CHECK_THROWS_AS(cr_t_track(k22, 0), InputError);
}

TEST_CASE("track solvers match brute force") {
  bookemb::testing::Rng rng(43);
  for (int round = 0; round < 40; ++round) {
    const TrackInstance inst =
        bookemb::testing::random_track_instance(rng, 2 + round % 4, 1 + round % 7, 0.5);
    const OneTrackResult one = cr1_track(inst);
    CHECK(one.value == oracle::oracle_tracks(inst, 1));
    CHECK(order_crossings(inst, one.order) == one.value);
    std::int64_t previous = one.value;
    for (int t = 1; t <= 3; ++t) {
      const MultiTrackResult r = cr_t_track(inst, t);
      CHECK(r.value == oracle::oracle_tracks(inst, t));
      CHECK(layout_crossings(inst, r.layout) == r.value);
      CHECK(r.value <= previous);
      previous = r.value;
    }
    CHECK(cr_t_track(inst, static_cast<int>(std::max<std::size_t>(inst.b(), 1))).value == 0);
  }
}

TEST_CASE("layouts are validated") {
  const TrackInstance k22 = complete_track_instance(2, 2);
  TrackLayout bad{{1, 1}, {{0}}};
  CHECK_THROWS_AS(validate_layout(k22, bad), InputError);
  TrackLayout twice{{1, 1}, {{0, 0, 1}}};
  CHECK_THROWS_AS(validate_layout(k22, twice), InputError);
  TrackLayout mismatch{{1, 2}, {{0, 1}, {}}};
  CHECK_THROWS_AS(validate_layout(k22, mismatch), InputError);
  CHECK_THROWS_AS(TrackInstance(2, 2, {{1, 0}, {1, 0}}), InputError);
  CHECK_THROWS_AS(TrackInstance(2, 2, {{3, 0}}), InputError);
}
