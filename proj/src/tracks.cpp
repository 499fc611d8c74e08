#include "bookemb/tracks.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <string>

#include "bookemb/errors.hpp"

namespace bookemb::tracks {

namespace {

constexpr std::size_t kHardMaxTrackVertices = 24;
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

using Mask = std::uint32_t;

void check_capacity(const TrackInstance& inst, std::size_t max_vertices) {
  const std::size_t limit = std::min(max_vertices, kHardMaxTrackVertices);
  if (inst.b() > limit) {
    throw CapacityError("track instance has " + std::to_string(inst.b()) +
                            " track vertices, limit is " + std::to_string(limit),
                        static_cast<double>(limit), static_cast<double>(inst.b()));
  }
}

/// Binomial coefficients up to 32.
struct Binomial {
  std::uint64_t c[33][33] = {};
  Binomial() {
    for (int n = 0; n <= 32; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
  }
};

const Binomial& binomial() {
  static const Binomial b;
  return b;
}

/// Rank of a k-subset among all k-subsets in colexicographic order, which is
/// also the order Gosper's hack produces.
std::size_t colex_rank(Mask x) {
  std::size_t r = 0;
  int i = 1;
  while (x != 0) {
    const int pos = std::countr_zero(x);
    r += binomial().c[pos][i];
    ++i;
    x &= x - 1;
  }
  return r;
}

int position_in(Mask x, int y) { return std::popcount(x & ((Mask{1} << y) - 1)); }

struct OneTrackTable {
  std::vector<std::int64_t> value;
  std::vector<std::uint8_t> last;
};

/// C[X] for every X: optimal one-track cost of X, with the last vertex of an
/// optimal order of X.
OneTrackTable one_track_table(const CostTable& c) {
  const int n = static_cast<int>(c.size());
  const std::size_t full = std::size_t{1} << n;
  OneTrackTable t{std::vector<std::int64_t>(full, 0), std::vector<std::uint8_t>(full, 0)};
  for (int y = 0; y < n; ++y) t.last[Mask{1} << y] = static_cast<std::uint8_t>(y);
  // eta[X,y] = sum of c[x][y] over x in X minus y, one level at a time,
  // indexed by colex rank of X and the position of y inside X.
  std::vector<std::int64_t> prev(static_cast<std::size_t>(n), 0);
  for (int k = 2; k <= n; ++k) {
    const std::size_t count = binomial().c[n][k];
    std::vector<std::int64_t> eta(count * static_cast<std::size_t>(k), 0);
    Mask x = (Mask{1} << k) - 1;
    for (std::size_t rank = 0; rank < count; ++rank) {
      const int z1 = std::countr_zero(x);
      const int z2 = std::countr_zero(x & (x - 1));
      const Mask without1 = x & ~(Mask{1} << z1);
      const Mask without2 = x & ~(Mask{1} << z2);
      const std::size_t r1 = colex_rank(without1) * static_cast<std::size_t>(k - 1);
      const std::size_t r2 = colex_rank(without2) * static_cast<std::size_t>(k - 1);
      std::int64_t best = kInf;
      int best_y = -1;
      for (Mask rest = x; rest != 0; rest &= rest - 1) {
        const int y = std::countr_zero(rest);
        std::int64_t e;
        if (y == z1) {
          e = (k == 2 ? 0 : prev[r2 + static_cast<std::size_t>(position_in(without2, y))]) +
              c(static_cast<TrackVertex>(z2), static_cast<TrackVertex>(y));
        } else {
          e = (k == 2 ? 0 : prev[r1 + static_cast<std::size_t>(position_in(without1, y))]) +
              c(static_cast<TrackVertex>(z1), static_cast<TrackVertex>(y));
        }
        eta[rank * static_cast<std::size_t>(k) + static_cast<std::size_t>(position_in(x, y))] = e;
        const std::int64_t v = t.value[x & ~(Mask{1} << y)] + e;
        if (v < best) {
          best = v;
          best_y = y;
        }
      }
      t.value[x] = best;
      t.last[x] = static_cast<std::uint8_t>(best_y);
      // Gosper's hack: next larger mask with the same popcount.
      const Mask low = x & (~x + 1);
      const Mask ripple = x + low;
      x = (((ripple ^ x) >> 2) / low) | ripple;
    }
    prev = std::move(eta);
  }
  return t;
}

std::vector<TrackVertex> order_of(const OneTrackTable& t, Mask x) {
  std::vector<TrackVertex> order;
  while (x != 0) {
    const int y = t.last[x];
    order.push_back(static_cast<TrackVertex>(y));
    x &= ~(Mask{1} << y);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

/// T[X,q] for q = 1.. until q == t or T[B,q] == 0, with argmin splits.
struct MultiTable {
  std::vector<std::vector<std::int64_t>> value;
  std::vector<std::vector<Mask>> split;
};

MultiTable multi_track_table(const OneTrackTable& one, int n, int t) {
  const std::size_t full = std::size_t{1} << n;
  MultiTable m;
  m.value.push_back(one.value);
  m.split.emplace_back();
  while (static_cast<int>(m.value.size()) < t && m.value.back()[full - 1] != 0) {
    const auto& prev = m.value.back();
    std::vector<std::int64_t> cur(full, kInf);
    std::vector<Mask> arg(full, 0);
    for (std::size_t xs = 0; xs < full; ++xs) {
      const Mask x = static_cast<Mask>(xs);
      std::int64_t best = prev[x];
      Mask best_y = x;
      for (Mask y = x; best != 0;) {
        const std::int64_t v = prev[y] + one.value[x & ~y];
        if (v < best) {
          best = v;
          best_y = y;
        }
        if (y == 0) break;
        y = (y - 1) & x;
      }
      cur[x] = best;
      arg[x] = best_y;
    }
    m.value.push_back(std::move(cur));
    m.split.push_back(std::move(arg));
  }
  return m;
}

}  // namespace

TrackInstance::TrackInstance(int a, std::size_t b, std::vector<std::pair<int, TrackVertex>> edges)
    : a_(a), b_(b), edges_(std::move(edges)), neighbors_(b) {
  if (a < 0) throw InputError("spine size must be non-negative");
  std::set<std::pair<int, TrackVertex>> seen;
  for (const auto& [s, x] : edges_) {
    if (s < 1 || s > a) {
      throw InputError("spine vertex " + std::to_string(s) + " out of range 1.." +
                       std::to_string(a));
    }
    if (x >= b) {
      throw InputError("track vertex " + std::to_string(x) + " out of range 0.." +
                       std::to_string(b == 0 ? 0 : b - 1));
    }
    if (!seen.insert({s, x}).second) {
      throw InputError("duplicate edge (" + std::to_string(s) + ", " + std::to_string(x) + ")");
    }
    neighbors_[x].push_back(s);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

std::int64_t pair_cost(const TrackInstance& inst, TrackVertex x, TrackVertex y) {
  if (x == y) return 0;
  const auto& nx = inst.neighbors(x);
  const auto& ny = inst.neighbors(y);
  std::int64_t total = 0;
  // For every a in N(x), count a' in N(y) with a' < a.
  std::size_t j = 0;
  for (int a : nx) {
    while (j < ny.size() && ny[j] < a) ++j;
    total += static_cast<std::int64_t>(j);
  }
  return total;
}

CostTable::CostTable(const TrackInstance& inst) : n_(inst.b()), c_(n_ * n_, 0) {
  for (TrackVertex x = 0; x < n_; ++x) {
    for (TrackVertex y = 0; y < n_; ++y) c_[x * n_ + y] = pair_cost(inst, x, y);
  }
}

OneTrackResult cr1_track(const TrackInstance& inst, std::size_t max_vertices) {
  check_capacity(inst, max_vertices);
  const int n = static_cast<int>(inst.b());
  const OneTrackTable t = one_track_table(CostTable(inst));
  const Mask full = static_cast<Mask>((std::size_t{1} << n) - 1);
  return {t.value[full], order_of(t, full)};
}

MultiTrackResult cr_t_track(const TrackInstance& inst, int t, std::size_t max_vertices) {
  if (t < 1) throw InputError("track count must be at least 1");
  check_capacity(inst, max_vertices);
  const int n = static_cast<int>(inst.b());
  const OneTrackTable one = one_track_table(CostTable(inst));
  const MultiTable m = multi_track_table(one, n, t);
  MultiTrackResult r;
  r.layout.assignment.assign(inst.b(), 1);
  r.layout.orders.assign(static_cast<std::size_t>(t), {});
  Mask x = static_cast<Mask>((std::size_t{1} << n) - 1);
  r.value = m.value.back()[x];
  for (std::size_t q = m.value.size(); q-- > 0;) {
    const Mask y = q == 0 ? 0 : m.split[q][x];
    r.layout.orders[q] = order_of(one, x & ~y);
    x = y;
  }
  for (std::size_t q = 0; q < r.layout.orders.size(); ++q) {
    for (TrackVertex v : r.layout.orders[q]) r.layout.assignment[v] = static_cast<int>(q) + 1;
  }
  return r;
}

int min_tracks(const TrackInstance& inst, std::size_t max_vertices) {
  check_capacity(inst, max_vertices);
  const int n = static_cast<int>(inst.b());
  if (n == 0) return 0;
  const MultiTable m = multi_track_table(one_track_table(CostTable(inst)), n, n);
  return static_cast<int>(m.value.size());
}

std::int64_t order_crossings(const TrackInstance& inst, const std::vector<TrackVertex>& order) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) total += pair_cost(inst, order[i], order[j]);
  }
  return total;
}

std::int64_t layout_crossings(const TrackInstance& inst, const TrackLayout& layout) {
  validate_layout(inst, layout);
  std::int64_t total = 0;
  for (const auto& order : layout.orders) total += order_crossings(inst, order);
  return total;
}

void validate_layout(const TrackInstance& inst, const TrackLayout& layout) {
  if (layout.assignment.size() != inst.b()) {
    throw InputError("layout assigns " + std::to_string(layout.assignment.size()) +
                     " vertices, instance has " + std::to_string(inst.b()));
  }
  std::vector<int> seen(inst.b(), 0);
  for (std::size_t q = 0; q < layout.orders.size(); ++q) {
    for (TrackVertex v : layout.orders[q]) {
      if (v >= inst.b()) throw InputError("layout names unknown track vertex");
      if (seen[v]++ != 0) throw InputError("track vertex placed twice");
      if (layout.assignment[v] != static_cast<int>(q) + 1) {
        throw InputError("track vertex " + std::to_string(v) + " order and assignment disagree");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InputError("layout leaves a track vertex unplaced");
  }
}

}  // namespace bookemb::tracks
