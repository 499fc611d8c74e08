#include "bookemb/edge_deletion.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "bookemb/errors.hpp"

namespace bookemb::fpt {

namespace {

long ceil_sqrt(long k) {
  long r = 0;
  while (r * r < k) ++r;
  return r;
}

double binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  double out = 1;
  for (std::size_t i = 0; i < r; ++i) {
    out = out * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return out;
}

void branch_into(const Instance& inst, const BranchOptions& options, std::vector<Instance>& out) {
  const OrderedGraph& g = *inst.graph;
  const std::size_t threshold = inst.d + static_cast<std::size_t>(std::max(1L, ceil_sqrt(inst.k)));

  EdgeId pick = g.m();
  std::size_t pick_cross = 0;
  inst.alive.for_each([&](EdgeId e) {
    const std::size_t c = (g.crossing(e) & inst.alive).count();
    if (c >= threshold && (pick == g.m() || c > pick_cross)) {
      pick = e;
      pick_cross = c;
    }
  });
  if (pick == g.m()) {
    out.push_back(inst);
    return;
  }

  // Light branch: delete the edge itself.
  if (inst.k >= 1) {
    Instance light = inst;
    light.alive.erase(pick);
    light.k -= 1;
    branch_into(light, options, out);
  }

  // Heavy branches: keep the edge, delete all but d of its crossers.
  if (pick_cross > inst.d + static_cast<std::size_t>(inst.k)) return;
  const double branches = binomial(pick_cross, inst.d);
  if (branches > options.max_heavy_branches) {
    throw CapacityError("heavy branching on edge " + std::to_string(pick) + " needs " +
                            std::to_string(static_cast<long long>(branches)) +
                            " branches, limit is " +
                            std::to_string(static_cast<long long>(options.max_heavy_branches)),
                        options.max_heavy_branches, branches);
  }
  const std::vector<EdgeId> crossers = (g.crossing(pick) & inst.alive).ids();
  // Enumerate the d crossers that survive; the others form X.
  std::vector<std::size_t> kept;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (kept.size() == inst.d) {
      Instance heavy = inst;
      std::size_t next_kept = 0;
      for (std::size_t i = 0; i < crossers.size(); ++i) {
        if (next_kept < kept.size() && kept[next_kept] == i) {
          ++next_kept;
          continue;
        }
        heavy.alive.erase(crossers[i]);
      }
      heavy.k -= static_cast<long>(crossers.size() - inst.d);
      branch_into(heavy, options, out);
      return;
    }
    for (std::size_t i = from; i < crossers.size(); ++i) {
      kept.push_back(i);
      choose(i + 1);
      kept.pop_back();
    }
  };
  choose(0);
}

EdgeSubset with(EdgeSubset s, EdgeId e) {
  s.insert(e);
  return s;
}

/// Edges of `within` sorted by left endpoint, restricted to maximal ones.
std::vector<EdgeId> sorted_maximal(const OrderedGraph& g, const EdgeSubset& within) {
  std::vector<EdgeId> maximal = maximal_edges(g, within).ids();
  std::sort(maximal.begin(), maximal.end(),
            [&](EdgeId a, EdgeId b) { return g.edge(a).u < g.edge(b).u; });
  return maximal;
}

struct HalfSeparation {
  EdgeSubset separator;
  EdgeSubset first;
};

/// The left-sweep construction over the maximal edges of `within`, with
/// balance thresholds taken from the total edge count `m`.
HalfSeparation sweep(const OrderedGraph& g, const EdgeSubset& within, std::size_t m) {
  const std::vector<EdgeId> maximal = sorted_maximal(g, within);
  std::size_t a = 0;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    if (3 * left_set(g, g.edge(maximal[i]).u, within).count() <= m) a = i;
  }
  if (a + 1 == maximal.size()) {
    const EdgeId last = maximal[a];
    return {with(g.crossing(last) & within, last), left_set(g, g.edge(last).u, within)};
  }
  const EdgeId cut = maximal[a + 1];
  EdgeSubset separator = with(g.crossing(cut) & within, cut);
  EdgeSubset first = left_set(g, g.edge(cut).u, within);

  const std::size_t size = first.count();
  if (3 * size > 2 * m) {
    const std::size_t excess = (3 * size - 2 * m + 2) / 3;
    std::vector<EdgeId> order = first.ids();
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId x, EdgeId y) { return g.edge(x).v > g.edge(y).v; });
    for (std::size_t i = 0; i < excess; ++i) {
      first.erase(order[i]);
      separator.insert(order[i]);
    }
  }
  return {std::move(separator), std::move(first)};
}

EdgeSubset conflict_neighbourhood(const OrderedGraph& g, const EdgeSubset& part) {
  EdgeSubset out(g.m());
  part.for_each([&](EdgeId e) { out |= g.crossing(e); });
  return out;
}

/// Connected components of the conflict graph restricted to `edges`.
std::vector<EdgeSubset> components(const OrderedGraph& g, const EdgeSubset& edges) {
  std::vector<EdgeSubset> out;
  EdgeSubset unseen = edges;
  while (!unseen.empty()) {
    EdgeSubset comp(g.m());
    std::vector<EdgeId> stack{unseen.first()};
    unseen.erase(stack.back());
    while (!stack.empty()) {
      const EdgeId e = stack.back();
      stack.pop_back();
      comp.insert(e);
      (g.crossing(e) & unseen).for_each([&](EdgeId f) {
        unseen.erase(f);
        stack.push_back(f);
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

void decompose(const OrderedGraph& g, std::size_t d, const EdgeSubset& cover,
               const EdgeSubset& boundary, std::size_t parent, TreeDecomposition& td) {
  auto parts = components(g, cover);
  if (parts.size() > 1) {
    const std::size_t node = td.add(boundary.ids(), parent);
    for (const auto& part : parts) {
      decompose(g, d, part, conflict_neighbourhood(g, part) & boundary, node, td);
    }
    return;
  }
  const Separation sep = balanced_separator(g, cover, d);
  const EdgeSubset bag = boundary | sep.separator;
  const std::size_t node = td.add(bag.ids(), parent);
  for (const EdgeSubset* part : {&sep.first, &sep.second}) {
    if (part->empty()) continue;
    decompose(g, d, *part, conflict_neighbourhood(g, *part) & bag, node, td);
  }
}

}  // namespace

Instance Instance::root(std::shared_ptr<const OrderedGraph> g, long k, std::size_t d) {
  Instance inst;
  inst.alive = g->all_edges();
  inst.graph = std::move(g);
  inst.k = k;
  inst.d = d;
  return inst;
}

std::vector<Instance> branch(const Instance& inst, const BranchOptions& options) {
  std::vector<Instance> out;
  if (inst.k < 0) return out;
  branch_into(inst, options, out);
  return out;
}

Separation balanced_separator(const OrderedGraph& g, std::size_t d) {
  return balanced_separator(g, g.all_edges(), d);
}

Separation balanced_separator(const OrderedGraph& g, const EdgeSubset& edges, std::size_t d) {
  edges.for_each([&](EdgeId e) {
    const std::size_t c = (g.crossing(e) & edges).count();
    if (c > d) {
      throw InputError("edge " + std::to_string(e) + " has " + std::to_string(c) +
                       " crossings, the graph is not " + std::to_string(d) + "-planar");
    }
  });
  const std::size_t m = edges.count();
  Separation sep{EdgeSubset(g.m()), EdgeSubset(g.m()), EdgeSubset(g.m())};
  if (m == 0) return sep;

  std::vector<std::size_t> span(g.m(), 0);
  edges.for_each([&](EdgeId e) { span[e] = span_set(g, e, edges).count(); });

  auto finish = [&](EdgeSubset separator, EdgeSubset first) {
    sep.second = edges - separator - first;
    sep.separator = std::move(separator);
    sep.first = std::move(first);
    if (auto problem = check_separation(g, edges, d, sep)) {
      throw std::logic_error("balanced separator construction failed: " + *problem);
    }
    return sep;
  };

  // Some edge spans between a third and two thirds of the edges; take the
  // most balanced one, ties by index.
  EdgeId middle = g.m();
  std::size_t middle_side = m + 1;
  for (EdgeId e = edges.first(); e < g.m(); e = edges.next(e)) {
    if (3 * span[e] < m || 3 * span[e] > 2 * m) continue;
    const std::size_t cut = (g.crossing(e) & edges).count() + 1;
    const std::size_t side = std::max(span[e], m - span[e] - cut);
    if (side < middle_side) {
      middle = e;
      middle_side = side;
    }
  }
  if (middle != g.m()) {
    return finish(with(g.crossing(middle) & edges, middle), span_set(g, middle, edges));
  }
  if (m <= 3 * (d + 1)) return finish(edges, EdgeSubset(g.m()));

  // Some edge spans more than two thirds: descend to an innermost one.
  EdgeId heavy = g.m();
  for (EdgeId e = edges.first(); e < g.m() && heavy == g.m(); e = edges.next(e)) {
    if (3 * span[e] <= 2 * m) continue;
    bool innermost = true;
    span_set(g, e, edges).for_each([&](EdgeId f) {
      if (3 * span[f] > 2 * m) innermost = false;
    });
    if (innermost) heavy = e;
  }
  if (heavy == g.m()) {
    HalfSeparation half = sweep(g, edges, m);
    return finish(std::move(half.separator), std::move(half.first));
  }
  HalfSeparation inner = sweep(g, span_set(g, heavy, edges), m);
  EdgeSubset separator = inner.separator | with(g.crossing(heavy) & edges, heavy);
  return finish(std::move(separator), std::move(inner.first));
}

std::optional<std::string> check_separation(const OrderedGraph& g, const EdgeSubset& edges,
                                            std::size_t d, const Separation& sep) {
  const std::size_t m = edges.count();
  if (sep.separator.intersects(sep.first) || sep.separator.intersects(sep.second) ||
      sep.first.intersects(sep.second)) {
    return "parts are not disjoint";
  }
  if ((sep.separator | sep.first | sep.second) != edges) return "parts do not cover the edge set";
  if (sep.separator.count() > 3 * (d + 1)) {
    return "separator has " + std::to_string(sep.separator.count()) + " edges, more than 3(d+1)";
  }
  if (3 * sep.first.count() > 2 * m) return "first side exceeds 2m/3";
  if (3 * sep.second.count() > 2 * m) return "second side exceeds 2m/3";
  std::optional<std::string> problem;
  sep.first.for_each([&](EdgeId e) {
    if (!problem && g.crossing(e).intersects(sep.second)) {
      problem = "edge " + std::to_string(e) + " crosses the other side";
    }
  });
  return problem;
}

TreeDecomposition build_decomposition(const OrderedGraph& g, std::size_t d) {
  TreeDecomposition td;
  if (g.m() == 0) return td;
  decompose(g, d, g.all_edges(), g.no_edges(), TreeDecomposition::kNoParent, td);
  return td;
}

std::optional<EdgeSubset> solve(const OrderedGraph& g, std::size_t d, long k,
                                const SolveOptions& options) {
  if (k < 0) return std::nullopt;
  auto shared = std::make_shared<const OrderedGraph>(g);
  const auto leaves = branch(Instance::root(shared, k, d), options.branching);

  std::optional<EdgeSubset> best;
  for (const Instance& leaf : leaves) {
    const EdgeSubset path = leaf.deleted();
    const long used = static_cast<long>(path.count());
    long budget = leaf.k;
    if (best) budget = std::min(budget, static_cast<long>(best->count()) - used - 1);
    if (budget < 0) continue;

    auto [sub, back] = g.induced(leaf.alive);
    const std::size_t local_bound = max_crossings(sub, sub.all_edges());
    EdgeSubset found = path;
    if (local_bound > d) {
      const TreeDecomposition td = build_decomposition(sub, local_bound);
      const auto local = degree_d_deletion(conflict_graph(sub), td, d,
                                           static_cast<std::size_t>(budget), options.dp);
      if (!local) continue;
      for (std::size_t v : *local) found.insert(back[v]);
    }
    if (!best || found.count() < best->count()) best = std::move(found);
  }
  return best;
}

}  // namespace bookemb::fpt
