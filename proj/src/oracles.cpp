#include "bookemb/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bookemb/errors.hpp"

namespace bookemb::oracle {

namespace {

void require_small(const OrderedGraph& g) {
  if (g.m() > kMaxOracleEdges) {
    throw CapacityError("oracle limited to " + std::to_string(kMaxOracleEdges) + " edges",
                        static_cast<double>(kMaxOracleEdges), static_cast<double>(g.m()));
  }
}

std::vector<std::pair<EdgeId, EdgeId>> all_crossing_pairs(const OrderedGraph& g) {
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (EdgeId e = 0; e < g.m(); ++e) {
    for (EdgeId f = e + 1; f < g.m(); ++f) {
      if (crosses(g, e, f)) pairs.emplace_back(e, f);
    }
  }
  return pairs;
}

/// Advances an odometer over {1..p}^size; false once it wraps.
bool next_assignment(std::vector<int>& pages, int p) {
  for (std::size_t i = 0; i < pages.size(); ++i) {
    if (pages[i] < p) {
      ++pages[i];
      return true;
    }
    pages[i] = 1;
  }
  return false;
}

}  // namespace

std::uint64_t oracle_cr_p(const OrderedGraph& g, int p) {
  require_small(g);
  if (p < 1) throw InputError("page count must be at least 1");
  const auto pairs = all_crossing_pairs(g);
  std::vector<int> pages(g.m(), 1);
  std::uint64_t best = pairs.size();
  do {
    std::uint64_t c = 0;
    for (const auto& [e, f] : pairs) c += pages[e] == pages[f] ? 1 : 0;
    best = std::min(best, c);
  } while (best > 0 && next_assignment(pages, p));
  return best;
}

int oracle_page_number(const OrderedGraph& g) {
  if (g.m() == 0) return 0;
  int p = 1;
  while (oracle_cr_p(g, p) != 0) ++p;
  return p;
}

DeletionWitness oracle_min_deletion_witness(const OrderedGraph& g, int p, std::size_t d) {
  require_small(g);
  if (p < 1) throw InputError("page count must be at least 1");
  const std::size_t m = g.m();
  const auto pairs = all_crossing_pairs(g);
  for (std::size_t size = 0; size <= m; ++size) {
    for (std::uint32_t del = 0; del < (std::uint32_t{1} << m); ++del) {
      if (static_cast<std::size_t>(std::popcount(del)) != size) continue;
      std::vector<EdgeId> kept;
      for (EdgeId e = 0; e < m; ++e) {
        if (((del >> e) & 1U) == 0) kept.push_back(e);
      }
      std::vector<int> pages(kept.size(), 1);
      do {
        std::vector<int> full(m, PageAssignment::kDeleted);
        for (std::size_t i = 0; i < kept.size(); ++i) full[kept[i]] = pages[i];
        std::vector<std::size_t> count(m, 0);
        for (const auto& [e, f] : pairs) {
          if (full[e] != PageAssignment::kDeleted && full[e] == full[f]) {
            ++count[e];
            ++count[f];
          }
        }
        if (std::all_of(count.begin(), count.end(), [&](std::size_t c) { return c <= d; })) {
          DeletionWitness w{size, PageAssignment(m, p)};
          for (EdgeId e = 0; e < m; ++e) w.assignment.set(e, full[e]);
          return w;
        }
      } while (next_assignment(pages, p));
    }
  }
  throw InputError("deleting every edge must be feasible");
}

std::size_t oracle_min_deletion(const OrderedGraph& g, int p, std::size_t d) {
  return oracle_min_deletion_witness(g, p, d).deleted;
}

std::size_t oracle_mis(const OrderedGraph& g, const EdgeSubset& candidates) {
  require_small(g);
  const std::vector<EdgeId> ids = candidates.ids();
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << ids.size()); ++s) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < ids.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < ids.size(); ++j) {
        if (((s >> i) & 1U) && ((s >> j) & 1U) && crosses(g, ids[i], ids[j])) ok = false;
      }
    }
    if (ok) best = std::max(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

std::int64_t oracle_tracks(const tracks::TrackInstance& inst, int t) {
  if (inst.b() > kMaxOracleTrackVertices) {
    throw CapacityError("track oracle limited to " + std::to_string(kMaxOracleTrackVertices) +
                            " track vertices",
                        static_cast<double>(kMaxOracleTrackVertices),
                        static_cast<double>(inst.b()));
  }
  if (t < 1) throw InputError("track count must be at least 1");
  const std::size_t b = inst.b();
  // Straight edges (s, x) and (s', y) with x left of y cross iff s' < s.
  auto crossings_between = [&](tracks::TrackVertex x, tracks::TrackVertex y) {
    std::int64_t c = 0;
    for (const auto& [s, vx] : inst.edges()) {
      if (vx != x) continue;
      for (const auto& [s2, vy] : inst.edges()) {
        if (vy == y && s2 < s) ++c;
      }
    }
    return c;
  };
  std::int64_t best = -1;
  std::vector<int> track(b, 1);
  do {
    std::int64_t total = 0;
    for (int q = 1; q <= t; ++q) {
      std::vector<tracks::TrackVertex> members;
      for (std::size_t v = 0; v < b; ++v) {
        if (track[v] == q) members.push_back(v);
      }
      std::int64_t track_best = -1;
      do {
        std::int64_t c = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (std::size_t j = i + 1; j < members.size(); ++j) {
            c += crossings_between(members[i], members[j]);
          }
        }
        if (track_best < 0 || c < track_best) track_best = c;
      } while (std::next_permutation(members.begin(), members.end()));
      total += track_best;
    }
    if (best < 0 || total < best) best = total;
  } while (next_assignment(track, t));
  return best;
}

std::size_t oracle_degree_deletion(const SimpleGraph& h, std::size_t d) {
  const std::size_t n = h.size();
  if (n > 20) {
    throw CapacityError("degree oracle limited to 20 vertices", 20, static_cast<double>(n));
  }
  std::size_t best = n;
  for (std::uint32_t del = 0; del < (std::uint32_t{1} << n); ++del) {
    const auto size = static_cast<std::size_t>(std::popcount(del));
    if (size >= best) continue;
    bool ok = true;
    for (std::size_t v = 0; ok && v < n; ++v) {
      if ((del >> v) & 1U) continue;
      std::size_t deg = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (w != v && !((del >> w) & 1U) && h.adjacent(v, w)) ++deg;
      }
      ok = deg <= d;
    }
    if (ok) best = size;
  }
  return best;
}

std::size_t oracle_hitting_number(const OrderedGraph& g) {
  require_small(g);
  const int gaps = std::max(0, g.n() - 1);
  std::size_t best = static_cast<std::size_t>(gaps);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << gaps); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= best && !(g.m() == 0 && s == 0)) continue;
    bool ok = true;
    for (const Edge& e : g.edges()) {
      bool hit = false;
      for (Vertex k = e.u; k < e.v; ++k) hit = hit || ((s >> (k - 1)) & 1U) != 0;
      ok = ok && hit;
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace bookemb::oracle
