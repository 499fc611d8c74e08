#pragma once

#include <cstddef>
#include <vector>

#include "bookemb/core.hpp"

namespace bookemb::approx {

/// Greedy set cover with crossing-free pages: each page is a maximum
/// non-crossing subset of the edges not yet placed.
std::vector<EdgeSubset> greedy_pages(const OrderedGraph& g);

/// Splits a page on which every edge has at most d crossings into at most
/// d+1 crossing-free pages by repeatedly peeling a maximal non-crossing set
/// of the edges with exactly d crossings. Empty parts are omitted.
std::vector<EdgeSubset> split_d_planar_page(const OrderedGraph& g, const EdgeSubset& page,
                                            std::size_t d);

/// Crossing-free layout from greedy_pages; it is in particular d-planar and
/// uses at most (d+1)·OPT_d·(ln m + 1) pages.
PageAssignment d_planar_pages_approx(const OrderedGraph& g, std::size_t d);

/// Layout helper: page i of `pages` becomes page i+1.
PageAssignment to_assignment(const OrderedGraph& g, const std::vector<EdgeSubset>& pages);

/// The (ln m + 1) guarantee factor of the greedy cover, 1 for m <= 1.
double greedy_bound_factor(std::size_t m);

}  // namespace bookemb::approx
