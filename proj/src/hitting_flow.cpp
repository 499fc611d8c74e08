#include "bookemb/hitting_flow.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "bookemb/errors.hpp"

namespace bookemb::hitting {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

bool is_hit(const Edge& e, Vertex gap) { return e.u <= gap && gap < e.v; }

HittingSet greedy_over(const OrderedGraph& g, const EdgeSubset& edges) {
  std::vector<EdgeId> order = edges.ids();
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return g.edge(a).v < g.edge(b).v; });
  HittingSet h;
  for (EdgeId e : order) {
    if (!h.gaps.empty() && is_hit(g.edge(e), h.gaps.back())) continue;
    h.gaps.push_back(g.edge(e).v - 1);
  }
  return h;
}

bool edges_cross(const OrderedGraph& g, EdgeId a, EdgeId b) {
  return a != b && g.crossing(a).contains(b);
}

/// a contains b, or they are the same edge.
bool contains_or_equal(const OrderedGraph& g, EdgeId a, EdgeId b) {
  return a == b || contains(g, a, b);
}

}  // namespace

HittingSet greedy_hitting_set(const OrderedGraph& g) { return greedy_over(g, g.all_edges()); }

bool hits_all(const OrderedGraph& g, const HittingSet& h) {
  for (const Edge& e : g.edges()) {
    if (std::none_of(h.gaps.begin(), h.gaps.end(), [&](Vertex k) { return is_hit(e, k); })) {
      return false;
    }
  }
  return true;
}

std::size_t hitting_number(const OrderedGraph& g, const EdgeSubset& edges) {
  return greedy_over(g, edges).size();
}

PointRange bridge_set(const OrderedGraph& g, const HittingSet& h, EdgeId e) {
  const Edge& ed = g.edge(e);
  const auto lo = std::lower_bound(h.gaps.begin(), h.gaps.end(), ed.u);
  const auto hi = std::lower_bound(h.gaps.begin(), h.gaps.end(), ed.v);
  if (lo == hi) {
    throw InputError("edge " + std::to_string(e) + " contains no hitting point");
  }
  return {static_cast<std::size_t>(lo - h.gaps.begin()),
          static_cast<std::size_t>(hi - h.gaps.begin()) - 1};
}

EdgeSubset edges_bridging(const OrderedGraph& g, const HittingSet& h, const PointRange& x) {
  EdgeSubset out = g.no_edges();
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (bridge_set(g, h, e) == x) out.insert(e);
  }
  return out;
}

std::vector<std::pair<EdgeId, EdgeId>> containment_arcs(const OrderedGraph& g,
                                                        const EdgeSubset& nodes) {
  std::vector<std::pair<EdgeId, EdgeId>> arcs;
  const std::vector<EdgeId> ids = nodes.ids();
  for (EdgeId a : ids) {
    for (EdgeId b : ids) {
      if (a != b && contains(g, b, a)) arcs.emplace_back(a, b);
    }
  }
  return arcs;
}

ChainNetwork build_network(const OrderedGraph& g, const EdgeSubset& nodes,
                           const EdgeSubset& sources, const EdgeSubset& sinks, int p) {
  if (p < 0) throw InputError("page count must be non-negative");
  if (!sources.is_subset_of(nodes) || !sinks.is_subset_of(nodes)) {
    throw InputError("sources and sinks must be node edges");
  }
  const std::size_t h = hitting_number(g, nodes);
  if (h > 1) {
    throw InputError("chain network needs hitting number 1, got " + std::to_string(h));
  }
  ChainNetwork cn;
  cn.s = cn.net.add_node();
  cn.s_prime = cn.net.add_node();
  cn.t = cn.net.add_node();
  cn.net.source = cn.s;
  cn.net.sink = cn.t;
  cn.net.add_arc(cn.s, cn.s_prime, p, 0);
  cn.in_node.assign(g.m(), npos);
  cn.out_node.assign(g.m(), npos);
  nodes.for_each([&](EdgeId e) {
    cn.node_edges.push_back(e);
    cn.in_node[e] = cn.net.add_node();
    cn.out_node[e] = cn.net.add_node();
    cn.gadget_arc.push_back(cn.net.add_arc(cn.in_node[e], cn.out_node[e], 1, -1));
  });
  for (const auto& [inner, outer] : containment_arcs(g, nodes)) {
    cn.net.add_arc(cn.out_node[inner], cn.in_node[outer], 1, 0);
  }
  sources.for_each([&](EdgeId e) { cn.net.add_arc(cn.s_prime, cn.in_node[e], 1, 0); });
  sinks.for_each([&](EdgeId e) { cn.net.add_arc(cn.out_node[e], cn.t, 1, 0); });
  return cn;
}

ChainNetwork build_network(const OrderedGraph& g, const EdgeSubset& sources,
                           const EdgeSubset& sinks, int p) {
  return build_network(g, g.all_edges(), sources, sinks, p);
}

std::vector<std::vector<EdgeId>> flow_chains(const ChainNetwork& cn,
                                             const flow::FlowResult& flow) {
  const auto& arcs = cn.net.arcs;
  std::vector<std::vector<std::size_t>> out_arcs(cn.net.nodes);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (flow.arc_flow.at(a) > 0) out_arcs[arcs[a].from].push_back(a);
  }
  std::vector<EdgeId> edge_of(cn.net.nodes, npos);
  for (EdgeId e : cn.node_edges) {
    edge_of[cn.in_node[e]] = e;
    edge_of[cn.out_node[e]] = e;
  }
  std::vector<std::vector<EdgeId>> chains;
  for (std::size_t a : out_arcs[cn.s_prime]) {
    std::vector<EdgeId> chain;
    std::size_t node = arcs[a].to;
    while (node != cn.t) {
      const EdgeId e = edge_of.at(node);
      chain.push_back(e);
      const std::size_t out = cn.out_node[e];
      if (out_arcs[out].size() != 1) throw InputError("flow is not a union of chains");
      node = arcs[out_arcs[out].front()].to;
    }
    chains.push_back(std::move(chain));
  }
  std::sort(chains.begin(), chains.end());
  return chains;
}

DeletionResult solve_h1(const OrderedGraph& g, int p) {
  if (p < 1) throw InputError("page count must be at least 1");
  DeletionResult r{g.all_edges(), PageAssignment(g.m(), p)};
  if (g.m() == 0) return r;
  const ChainNetwork cn = build_network(g, g.all_edges(), g.all_edges(), p);
  const flow::FlowResult fr = flow::min_cost_max_flow(cn.net);
  const auto chains = flow_chains(cn, fr);
  for (std::size_t c = 0; c < chains.size(); ++c) {
    for (EdgeId e : chains[c]) {
      r.assignment.set(e, static_cast<int>(c) + 1);
      r.deleted.erase(e);
    }
  }
  return r;
}

std::optional<CompatibleResult> compatible(const OrderedGraph& g, const EdgeSubset& nodes,
                                           const EdgeSubset& inner, const EdgeSubset& outer) {
  const std::size_t p = inner.count();
  if (outer.count() != p) throw InputError("boundary sets differ in size");
  CompatibleResult r{g.no_edges(), {}};
  if (p == 0) return r;
  const ChainNetwork cn = build_network(g, nodes, inner, outer, static_cast<int>(p));
  const flow::FlowResult fr = flow::min_cost_max_flow(cn.net);
  if (fr.value < static_cast<std::int64_t>(p)) return std::nullopt;
  r.chains = flow_chains(cn, fr);
  for (const auto& chain : r.chains) {
    for (EdgeId e : chain) r.kept.insert(e);
  }
  return r;
}

std::optional<CompatibleResult> compatible(const OrderedGraph& g, const EdgeSubset& inner,
                                           const EdgeSubset& outer, int p) {
  if (p < 0 || inner.count() != static_cast<std::size_t>(p) ||
      outer.count() != static_cast<std::size_t>(p)) {
    throw InputError("boundary sets must have exactly p edges");
  }
  return compatible(g, g.all_edges(), inner, outer);
}

std::vector<PageEncoding> enumerate_page_encodings(const OrderedGraph& g, const HittingSet& h,
                                                   double limit) {
  std::map<PointRange, std::vector<EdgeId>> groups;
  for (EdgeId e = 0; e < g.m(); ++e) groups[bridge_set(g, h, e)].push_back(e);

  struct Option {
    PointRange range;
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
  };
  std::vector<Option> options;
  for (const auto& [range, members] : groups) {
    Option opt{range, {}};
    for (EdgeId e : members) {
      for (EdgeId f : members) {
        if (contains_or_equal(g, f, e)) opt.pairs.emplace_back(e, f);
      }
    }
    options.push_back(std::move(opt));
  }

  std::vector<PageEncoding> out;
  PageEncoding current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == options.size()) {
      if (static_cast<double>(out.size()) + 1 > limit) {
        throw CapacityError("too many page encodings", limit, static_cast<double>(out.size()) + 1);
      }
      out.push_back(current);
      return;
    }
    rec(i + 1);
    const Option& opt = options[i];
    for (const auto& [e, f] : opt.pairs) {
      const Triple t{opt.range, e, f};
      bool ok = true;
      for (const Triple& o : current) {
        if (!t.points.disjoint(o.points) && !t.points.contains(o.points) &&
            !o.points.contains(t.points)) {
          ok = false;
        } else if (t.points.contains(o.points)) {
          ok = contains(g, t.inner, o.outer);
        } else if (o.points.contains(t.points)) {
          ok = contains(g, o.inner, t.outer);
        }
        if (ok) {
          for (EdgeId a : {t.inner, t.outer}) {
            for (EdgeId b : {o.inner, o.outer}) ok = ok && !edges_cross(g, a, b);
          }
        }
        if (!ok) break;
      }
      if (!ok) continue;
      current.push_back(t);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  for (auto& enc : out) std::sort(enc.begin(), enc.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PageEncoding> extract_encoding(const OrderedGraph& g, const HittingSet& h,
                                           const PageAssignment& assignment) {
  assignment.validate(g);
  std::vector<PageEncoding> pages;
  for (int q = 1; q <= assignment.page_count(); ++q) {
    std::map<PointRange, std::vector<EdgeId>> groups;
    assignment.edges_on(q).for_each([&](EdgeId e) { groups[bridge_set(g, h, e)].push_back(e); });
    PageEncoding enc;
    for (auto& [range, members] : groups) {
      auto length = [&](EdgeId e) { return g.edge(e).v - g.edge(e).u; };
      std::sort(members.begin(), members.end(),
                [&](EdgeId a, EdgeId b) { return length(a) < length(b); });
      for (std::size_t i = 1; i < members.size(); ++i) {
        if (!contains(g, members[i], members[i - 1])) {
          throw InputError("page " + std::to_string(q) + " is not crossing-free");
        }
      }
      enc.push_back({range, members.front(), members.back()});
    }
    pages.push_back(std::move(enc));
  }
  return pages;
}

GeneralResult solve_general(const OrderedGraph& g, int p, const GeneralOptions& options) {
  if (p < 1) throw InputError("page count must be at least 1");
  GeneralResult best;
  best.deleted = g.all_edges();
  best.assignment = PageAssignment(g.m(), p);
  if (g.m() == 0) return best;

  const HittingSet h = greedy_hitting_set(g);
  const std::vector<PageEncoding> pages = enumerate_page_encodings(g, h, options.max_encodings);
  const double count = std::exp(std::lgamma(static_cast<double>(pages.size() + p)) -
                                std::lgamma(static_cast<double>(p + 1)) -
                                std::lgamma(static_cast<double>(pages.size())));
  if (std::round(count) > options.max_encodings) {
    throw CapacityError("too many encodings", options.max_encodings, std::round(count));
  }

  std::vector<EdgeSubset> boundary;
  for (const auto& enc : pages) {
    EdgeSubset b = g.no_edges();
    for (const Triple& t : enc) {
      b.insert(t.inner);
      b.insert(t.outer);
    }
    boundary.push_back(std::move(b));
  }
  std::map<PointRange, EdgeSubset> bridging;
  for (const auto& enc : pages) {
    for (const Triple& t : enc) {
      if (!bridging.count(t.points)) bridging.emplace(t.points, edges_bridging(g, h, t.points));
    }
  }

  using Key = std::tuple<PointRange, std::vector<EdgeId>, std::vector<EdgeId>>;
  std::map<Key, std::optional<CompatibleResult>> memo;
  std::size_t best_kept = 0;
  bool have_best = false;

  std::vector<std::size_t> pick(static_cast<std::size_t>(p));
  EdgeSubset used = g.no_edges();

  auto evaluate = [&]() {
    best.encodings_examined += 1;
    // Boundary edges per bridged set, in page order.
    std::map<PointRange, std::vector<std::pair<int, const Triple*>>> by_set;
    for (std::size_t b = 0; b < pick.size(); ++b) {
      for (const Triple& t : pages[pick[b]]) by_set[t.points].emplace_back(static_cast<int>(b), &t);
    }
    std::map<PointRange, const CompatibleResult*> results;
    std::size_t kept = 0;
    for (const auto& [range, members] : by_set) {
      std::vector<EdgeId> inner;
      std::vector<EdgeId> outer;
      for (const auto& [b, t] : members) {
        inner.push_back(t->inner);
        outer.push_back(t->outer);
      }
      std::sort(inner.begin(), inner.end());
      std::sort(outer.begin(), outer.end());
      Key key{range, inner, outer};
      auto it = memo.find(key);
      if (it == memo.end()) {
        it = memo.emplace(key, compatible(g, bridging.at(range),
                                          EdgeSubset::from_ids(g.m(), inner),
                                          EdgeSubset::from_ids(g.m(), outer)))
                 .first;
      }
      if (!it->second) return;
      results[range] = &*it->second;
      kept += it->second->kept.count();
    }
    if (have_best && kept <= best_kept) return;

    // Chains are attached by nesting: a chain ending at f_X on page b sits
    // on the page of the chain starting at e_Y, Y the parent of X on page b.
    std::map<EdgeId, const std::vector<EdgeId>*> chain_starting;
    std::map<EdgeId, const std::vector<EdgeId>*> chain_ending;
    for (const auto& [range, res] : results) {
      for (const auto& chain : res->chains) {
        chain_starting[chain.front()] = &chain;
        chain_ending[chain.back()] = &chain;
      }
    }
    std::map<EdgeId, std::pair<int, const Triple*>> outer_at;
    for (std::size_t b = 0; b < pick.size(); ++b) {
      for (const Triple& t : pages[pick[b]]) outer_at[t.outer] = {static_cast<int>(b), &t};
    }
    auto parent_on_page = [&](int b, const Triple& t) -> const Triple* {
      const Triple* parent = nullptr;
      for (const Triple& o : pages[pick[static_cast<std::size_t>(b)]]) {
        if (o.points != t.points && o.points.contains(t.points) &&
            (parent == nullptr || parent->points.contains(o.points))) {
          parent = &o;
        }
      }
      return parent;
    };
    std::map<const std::vector<EdgeId>*, int> page_of;
    std::function<int(const std::vector<EdgeId>*)> resolve = [&](const std::vector<EdgeId>* c) {
      if (auto it = page_of.find(c); it != page_of.end()) return it->second;
      const auto& [b, t] = outer_at.at(c->back());
      const Triple* parent = parent_on_page(b, *t);
      const int page = parent == nullptr ? b + 1 : resolve(chain_starting.at(parent->inner));
      page_of[c] = page;
      return page;
    };
    PageAssignment asg(g.m(), p);
    for (const auto& [range, res] : results) {
      for (const auto& chain : res->chains) {
        const int page = resolve(&chain);
        for (EdgeId e : chain) asg.set(e, page);
      }
    }
    if (!is_d_planar(g, asg, 0)) return;
    have_best = true;
    best_kept = kept;
    best.assignment = asg;
    best.deleted = asg.deleted_edges();
  };

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t from) {
    if (have_best && best_kept == g.m()) return;
    if (slot == pick.size()) {
      evaluate();
      return;
    }
    for (std::size_t i = from; i < pages.size(); ++i) {
      if (boundary[i].intersects(used)) continue;
      pick[slot] = i;
      used |= boundary[i];
      rec(slot + 1, i);
      used -= boundary[i];
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace bookemb::hitting
