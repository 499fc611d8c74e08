#include "bookemb/circle_mis.hpp"

#include <algorithm>
#include <tuple>

namespace bookemb::circle {

ChordModel chord_model(const OrderedGraph& g, const EdgeSubset& edges) {
  // (position, kind, tiebreak, edge): kind 0 = right endpoint, 1 = left.
  // Right endpoints: shorter edges first. Left endpoints: longer first.
  std::vector<std::tuple<Vertex, int, int, EdgeId>> slots;
  edges.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    const int len = ed.v - ed.u;
    slots.emplace_back(ed.u, 1, -len, e);
    slots.emplace_back(ed.v, 0, len, e);
  });
  std::sort(slots.begin(), slots.end());

  ChordModel model;
  std::vector<std::size_t> chord_of(g.m(), 0);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const EdgeId e = std::get<3>(slots[i]);
    const int kind = std::get<1>(slots[i]);
    if (kind == 1) {
      chord_of[e] = model.chords.size();
      model.chords.emplace_back(i, 0);
      model.backrefs.push_back(e);
    } else {
      model.chords[chord_of[e]].second = i;
    }
  }
  return model;
}

namespace {

std::size_t interval_mis(const ChordModel& model) {
  const std::size_t n = model.chords.size() * 2;
  if (n == 0) return 0;
  // partner[i] = other endpoint when i is a left endpoint, else npos.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> partner(n, kNone);
  for (const auto& [l, r] : model.chords) partner[l] = r;

  // best[i][j] for the closed slot range [i, j]; stored with an extra row so
  // that best[i][i-1] (empty range) reads as 0.
  std::vector<std::vector<std::size_t>> best(n + 1, std::vector<std::size_t>(n + 1, 0));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i > j || i >= n) return 0;
    return best[i][j];
  };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i; j < n; ++j) {
      std::size_t value = at(i + 1, j);
      const std::size_t r = partner[i];
      if (r != kNone && r <= j) {
        const std::size_t inside = (r > i + 1) ? at(i + 1, r - 1) : 0;
        value = std::max(value, 1 + inside + at(r + 1, j));
      }
      best[i][j] = value;
    }
  }
  return best[0][n - 1];
}

}  // namespace

std::size_t max_noncrossing_size(const OrderedGraph& g, const EdgeSubset& candidates) {
  return interval_mis(chord_model(g, candidates));
}

EdgeSubset max_noncrossing_subset(const OrderedGraph& g, const EdgeSubset& candidates) {
  const std::size_t target = max_noncrossing_size(g, candidates);
  EdgeSubset allowed = candidates;
  EdgeSubset chosen(g.m());
  candidates.for_each([&](EdgeId e) {
    if (!allowed.contains(e)) return;
    EdgeSubset with_e = allowed - g.crossing(e);
    // e crosses nothing left in with_e, so it can join any maximum set of it.
    if (max_noncrossing_size(g, with_e) == target) {
      allowed = std::move(with_e);
      chosen.insert(e);
    } else {
      allowed.erase(e);
    }
  });
  return chosen;
}

}  // namespace bookemb::circle
