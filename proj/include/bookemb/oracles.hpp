#pragma once

#include <cstddef>
#include <cstdint>

#include "bookemb/core.hpp"
#include "bookemb/tracks.hpp"

/// Exhaustive reference solvers for small instances. They reuse nothing from
/// the solvers except the crossing and containment predicates of core.
namespace bookemb::oracle {

constexpr std::size_t kMaxOracleEdges = 12;
constexpr std::size_t kMaxOracleTrackVertices = 8;

/// Fewest same-page crossings over all p^m page assignments.
std::uint64_t oracle_cr_p(const OrderedGraph& g, int p);

/// Least p with oracle_cr_p(g, p) == 0; 0 for an edgeless graph.
int oracle_page_number(const OrderedGraph& g);

struct DeletionWitness {
  std::size_t deleted = 0;
  PageAssignment assignment;
};

/// Fewest deletions so that the rest has a p-page assignment where every
/// edge crosses at most d edges of its own page.
DeletionWitness oracle_min_deletion_witness(const OrderedGraph& g, int p, std::size_t d);
std::size_t oracle_min_deletion(const OrderedGraph& g, int p, std::size_t d);

/// Largest pairwise non-crossing subset of candidates.
std::size_t oracle_mis(const OrderedGraph& g, const EdgeSubset& candidates);

/// Fewest crossings over all partitions into t tracks and all track orders.
std::int64_t oracle_tracks(const tracks::TrackInstance& inst, int t);

/// Fewest vertices whose removal leaves maximum degree at most d.
std::size_t oracle_degree_deletion(const SimpleGraph& h, std::size_t d);

/// Smallest set of gaps k + 0.5 such that every edge interval contains one.
std::size_t oracle_hitting_number(const OrderedGraph& g);

}  // namespace bookemb::oracle
