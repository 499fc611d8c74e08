#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bookemb/core.hpp"

namespace bookemb::fpt {

/// Rooted tree of bags over the vertices of a SimpleGraph. Node 0 is the
/// root; parent[0] is npos.
struct TreeDecomposition {
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  std::vector<std::vector<std::size_t>> bags;
  std::vector<std::size_t> parent;

  std::size_t size() const { return bags.size(); }
  /// Largest bag size minus one; -1 for an empty decomposition.
  long width() const;
  std::vector<std::vector<std::size_t>> children() const;
  /// Appends a node and returns its index.
  std::size_t add(std::vector<std::size_t> bag, std::size_t parent_node);
};

/// Empty when valid, otherwise a description of the first violated axiom.
std::optional<std::string> validate(const TreeDecomposition& td, const SimpleGraph& h);

struct DegreeDeletionOptions {
  /// Bags larger than width + 1 switch to direct enumeration of deletion
  /// sets when that is cheaper, otherwise raise CapacityError.
  std::size_t max_width = 18;
};

/// Smallest vertex set S with |S| <= k such that h - S has maximum degree at
/// most d, or nullopt. Dynamic program over td with per-vertex states
/// Deleted / Kept(j), j = kept neighbours already forgotten.
std::optional<std::vector<std::size_t>> degree_d_deletion(const SimpleGraph& h,
                                                          const TreeDecomposition& td,
                                                          std::size_t d, std::size_t k,
                                                          const DegreeDeletionOptions& options = {});

}  // namespace bookemb::fpt
