#pragma once

#include <utility>
#include <vector>

#include "bookemb/core.hpp"

namespace bookemb::circle {

/// Chords with pairwise distinct endpoints on 0..2k-1 for a subset of the
/// edges of an ordered graph. Two chords interleave exactly when the
/// originating edges cross.
struct ChordModel {
  std::vector<std::pair<std::size_t, std::size_t>> chords;
  std::vector<EdgeId> backrefs;
};

/// Splits every spine position into one slot per incident endpoint: right
/// endpoints before left endpoints, shorter edges innermost.
ChordModel chord_model(const OrderedGraph& g, const EdgeSubset& edges);

/// Size of a maximum non-crossing subset of `candidates`.
std::size_t max_noncrossing_size(const OrderedGraph& g, const EdgeSubset& candidates);

/// A maximum non-crossing subset of `candidates`; among all maximum ones the
/// lexicographically smallest list of edge indices.
EdgeSubset max_noncrossing_subset(const OrderedGraph& g, const EdgeSubset& candidates);

}  // namespace bookemb::circle
