#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace bookemb::tracks {

/// Index of a track vertex, 0..b-1.
using TrackVertex = std::size_t;

constexpr std::size_t kDefaultMaxTrackVertices = 20;

/// Bipartite instance: spine vertices 1..a in fixed order, free vertices
/// 0..b-1 to be placed on tracks. Edges are (spine vertex, track vertex).
class TrackInstance {
 public:
  TrackInstance() = default;
  TrackInstance(int a, std::size_t b, std::vector<std::pair<int, TrackVertex>> edges);

  int a() const { return a_; }
  std::size_t b() const { return b_; }
  const std::vector<std::pair<int, TrackVertex>>& edges() const { return edges_; }
  /// Sorted spine neighbours of track vertex x.
  const std::vector<int>& neighbors(TrackVertex x) const { return neighbors_.at(x); }

 private:
  int a_ = 0;
  std::size_t b_ = 0;
  std::vector<std::pair<int, TrackVertex>> edges_;
  std::vector<std::vector<int>> neighbors_;
};

/// c[x][y]: crossings between edges of x and y when x precedes y on a track.
class CostTable {
 public:
  explicit CostTable(const TrackInstance& inst);

  std::size_t size() const { return n_; }
  std::int64_t operator()(TrackVertex x, TrackVertex y) const { return c_[x * n_ + y]; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> c_;
};

struct TrackLayout {
  /// Track index (1-based) of every track vertex.
  std::vector<int> assignment;
  /// Left-to-right order of vertices on each track; orders[q-1] is track q.
  std::vector<std::vector<TrackVertex>> orders;
};

struct OneTrackResult {
  std::int64_t value = 0;
  std::vector<TrackVertex> order;
};

struct MultiTrackResult {
  std::int64_t value = 0;
  TrackLayout layout;
};

std::int64_t pair_cost(const TrackInstance& inst, TrackVertex x, TrackVertex y);

OneTrackResult cr1_track(const TrackInstance& inst,
                         std::size_t max_vertices = kDefaultMaxTrackVertices);
MultiTrackResult cr_t_track(const TrackInstance& inst, int t,
                            std::size_t max_vertices = kDefaultMaxTrackVertices);
int min_tracks(const TrackInstance& inst, std::size_t max_vertices = kDefaultMaxTrackVertices);

/// Crossings of a concrete drawing: sum of c[x][y] over same-track pairs
/// with x before y.
std::int64_t layout_crossings(const TrackInstance& inst, const TrackLayout& layout);
std::int64_t order_crossings(const TrackInstance& inst, const std::vector<TrackVertex>& order);

/// Throws InputError unless layout.orders partition 0..b-1 consistently with
/// layout.assignment.
void validate_layout(const TrackInstance& inst, const TrackLayout& layout);

}  // namespace bookemb::tracks
