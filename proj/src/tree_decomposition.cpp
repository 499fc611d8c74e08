#include "bookemb/tree_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <unordered_map>

#include "bookemb/errors.hpp"

namespace bookemb::fpt {

long TreeDecomposition::width() const {
  long w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<long>(bag.size()) - 1);
  return w;
}

std::vector<std::vector<std::size_t>> TreeDecomposition::children() const {
  std::vector<std::vector<std::size_t>> out(bags.size());
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (parent[i] != kNoParent) out[parent[i]].push_back(i);
  }
  return out;
}

std::size_t TreeDecomposition::add(std::vector<std::size_t> bag, std::size_t parent_node) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  bags.push_back(std::move(bag));
  parent.push_back(parent_node);
  return bags.size() - 1;
}

std::optional<std::string> validate(const TreeDecomposition& td, const SimpleGraph& h) {
  const std::size_t nodes = td.size();
  if (td.parent.size() != nodes) return "parent array does not match the number of bags";
  if (nodes == 0) {
    if (h.size() == 0) return std::nullopt;
    return "empty decomposition for a non-empty graph";
  }
  if (td.parent[0] != TreeDecomposition::kNoParent) return "node 0 must be the root";
  for (std::size_t i = 1; i < nodes; ++i) {
    if (td.parent[i] >= nodes) return "node " + std::to_string(i) + " has no valid parent";
  }
  // Reject cycles in the parent pointers.
  for (std::size_t i = 0; i < nodes; ++i) {
    std::size_t steps = 0;
    for (std::size_t v = i; v != TreeDecomposition::kNoParent; v = td.parent[v]) {
      if (++steps > nodes) return "parent pointers contain a cycle";
    }
  }

  std::vector<std::vector<std::size_t>> occurrences(h.size());
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t v : td.bags[i]) {
      if (v >= h.size()) return "bag " + std::to_string(i) + " holds unknown vertex " + std::to_string(v);
      occurrences[v].push_back(i);
    }
  }
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (occurrences[v].empty()) return "vertex " + std::to_string(v) + " is in no bag";
    // Connected iff exactly one occurrence has its parent outside the set.
    std::size_t tops = 0;
    for (std::size_t node : occurrences[v]) {
      const std::size_t par = td.parent[node];
      if (par == TreeDecomposition::kNoParent ||
          !std::binary_search(td.bags[par].begin(), td.bags[par].end(), v)) {
        ++tops;
      }
    }
    if (tops != 1) return "bags containing vertex " + std::to_string(v) + " are not connected";
  }
  for (std::size_t a = 0; a < h.size(); ++a) {
    for (std::size_t b : h.adj[a]) {
      if (b < a) continue;
      bool covered = false;
      for (std::size_t node : occurrences[a]) {
        if (std::binary_search(td.bags[node].begin(), td.bags[node].end(), b)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        return "edge {" + std::to_string(a) + "," + std::to_string(b) + "} is in no bag";
      }
    }
  }
  return std::nullopt;
}

namespace {

struct Trace {
  std::size_t vertex;
  std::shared_ptr<const Trace> left;
  std::shared_ptr<const Trace> right;
};
using TracePtr = std::shared_ptr<const Trace>;

struct Entry {
  std::size_t cost;
  TracePtr trace;
};

/// DP table over a sorted bag; key byte i is the state of bag[i].
struct Table {
  std::vector<std::size_t> bag;
  std::unordered_map<std::string, Entry> states;
};

class DegreeDp {
 public:
  DegreeDp(const SimpleGraph& h, std::size_t d, std::size_t k) : h_(h), d_(d), k_(k) {
    sorted_adj_ = h.adj;
    for (auto& nb : sorted_adj_) std::sort(nb.begin(), nb.end());
  }

  std::optional<std::vector<std::size_t>> run(const TreeDecomposition& td) {
    const auto kids = td.children();
    Table root = solve(td, kids, 0);
    while (!root.bag.empty()) root = forget(std::move(root), root.bag.back());
    auto it = root.states.find(std::string());
    if (it == root.states.end()) return std::nullopt;
    std::vector<std::size_t> out;
    collect(it->second.trace, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  unsigned char deleted() const { return static_cast<unsigned char>(d_ + 1); }

  bool adjacent(std::size_t a, std::size_t b) const {
    const auto& nb = sorted_adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  static void relax(std::unordered_map<std::string, Entry>& states, std::string key, Entry entry) {
    auto [it, inserted] = states.try_emplace(std::move(key), entry);
    if (!inserted && entry.cost < it->second.cost) it->second = std::move(entry);
  }

  Table solve(const TreeDecomposition& td, const std::vector<std::vector<std::size_t>>& kids,
              std::size_t node) {
    const auto& bag = td.bags[node];
    std::optional<Table> acc;
    for (std::size_t child : kids[node]) {
      Table t = solve(td, kids, child);
      const std::vector<std::size_t> child_bag = t.bag;
      for (std::size_t v : child_bag) {
        if (!std::binary_search(bag.begin(), bag.end(), v)) t = forget(std::move(t), v);
      }
      for (std::size_t v : bag) {
        if (!std::binary_search(t.bag.begin(), t.bag.end(), v)) t = introduce(std::move(t), v);
      }
      acc = acc ? join(*acc, t) : std::move(t);
    }
    if (!acc) {
      Table t;
      t.states.emplace(std::string(), Entry{0, nullptr});
      for (std::size_t v : bag) t = introduce(std::move(t), v);
      acc = std::move(t);
    }
    return std::move(*acc);
  }

  Table introduce(Table t, std::size_t v) const {
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(t.bag.begin(), t.bag.end(), v) - t.bag.begin());
    Table out;
    out.bag = t.bag;
    out.bag.insert(out.bag.begin() + static_cast<std::ptrdiff_t>(pos), v);
    for (const auto& [key, entry] : t.states) {
      for (unsigned char s : {static_cast<unsigned char>(0), deleted()}) {
        std::string next = key;
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<char>(s));
        relax(out.states, std::move(next), entry);
      }
    }
    return out;
  }

  Table forget(Table t, std::size_t v) const {
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(t.bag.begin(), t.bag.end(), v) - t.bag.begin());
    Table out;
    out.bag = t.bag;
    out.bag.erase(out.bag.begin() + static_cast<std::ptrdiff_t>(pos));
    std::vector<std::size_t> neighbours;
    for (std::size_t i = 0; i < t.bag.size(); ++i) {
      if (i != pos && adjacent(v, t.bag[i])) neighbours.push_back(i);
    }
    for (const auto& [key, entry] : t.states) {
      const auto s = static_cast<unsigned char>(key[pos]);
      std::string next = key;
      Entry e = entry;
      if (s == deleted()) {
        if (e.cost + 1 > k_) continue;
        e.cost += 1;
        e.trace = std::make_shared<const Trace>(Trace{v, e.trace, nullptr});
      } else {
        std::size_t degree = s;
        for (std::size_t i : neighbours) {
          if (static_cast<unsigned char>(key[i]) != deleted()) ++degree;
        }
        if (degree > d_) continue;
        bool ok = true;
        for (std::size_t i : neighbours) {
          auto w = static_cast<unsigned char>(next[i]);
          if (w == deleted()) continue;
          if (++w > d_) {
            ok = false;
            break;
          }
          next[i] = static_cast<char>(w);
        }
        if (!ok) continue;
      }
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(pos));
      relax(out.states, std::move(next), std::move(e));
    }
    return out;
  }

  Table join(const Table& a, const Table& b) const {
    Table out;
    out.bag = a.bag;
    // Group b by its deletion pattern.
    std::unordered_map<std::string, std::vector<const std::pair<const std::string, Entry>*>> by_pattern;
    for (const auto& item : b.states) by_pattern[pattern(item.first)].push_back(&item);
    for (const auto& [key, entry] : a.states) {
      auto it = by_pattern.find(pattern(key));
      if (it == by_pattern.end()) continue;
      for (const auto* other : it->second) {
        if (entry.cost + other->second.cost > k_) continue;
        std::string next = key;
        bool ok = true;
        for (std::size_t i = 0; i < next.size() && ok; ++i) {
          const auto x = static_cast<unsigned char>(key[i]);
          if (x == deleted()) continue;
          const std::size_t sum = x + static_cast<unsigned char>(other->first[i]);
          if (sum > d_) ok = false;
          next[i] = static_cast<char>(sum);
        }
        if (!ok) continue;
        TracePtr trace = entry.trace;
        if (other->second.trace) {
          trace = trace ? std::make_shared<const Trace>(
                              Trace{static_cast<std::size_t>(-1), trace, other->second.trace})
                        : other->second.trace;
        }
        relax(out.states, std::move(next), Entry{entry.cost + other->second.cost, trace});
      }
    }
    return out;
  }

  std::string pattern(const std::string& key) const {
    std::string p(key.size(), '0');
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (static_cast<unsigned char>(key[i]) == deleted()) p[i] = '1';
    }
    return p;
  }

  static void collect(const TracePtr& trace, std::vector<std::size_t>& out) {
    std::vector<const Trace*> stack;
    if (trace) stack.push_back(trace.get());
    while (!stack.empty()) {
      const Trace* t = stack.back();
      stack.pop_back();
      if (t->vertex != static_cast<std::size_t>(-1)) out.push_back(t->vertex);
      if (t->left) stack.push_back(t->left.get());
      if (t->right) stack.push_back(t->right.get());
    }
  }

  const SimpleGraph& h_;
  std::size_t d_;
  std::size_t k_;
  std::vector<std::vector<std::size_t>> sorted_adj_;
};

bool degree_ok(const SimpleGraph& h, const std::vector<char>& removed, std::size_t d) {
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (removed[v]) continue;
    std::size_t deg = 0;
    for (std::size_t w : h.adj[v]) deg += removed[w] ? 0 : 1;
    if (deg > d) return false;
  }
  return true;
}

/// Deletion sets by increasing size; first feasible one wins.
std::optional<std::vector<std::size_t>> enumerate_deletions(const SimpleGraph& h, std::size_t d,
                                                            std::size_t k) {
  const std::size_t n = h.size();
  std::vector<char> removed(n, 0);
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t from,
                                                           std::size_t left) -> bool {
    if (left == 0) return degree_ok(h, removed, d);
    for (std::size_t v = from; v + left <= n; ++v) {
      removed[v] = 1;
      chosen.push_back(v);
      if (pick(v + 1, left - 1)) return true;
      chosen.pop_back();
      removed[v] = 0;
    }
    return false;
  };
  for (std::size_t size = 0; size <= std::min(k, n); ++size) {
    if (pick(0, size)) return chosen;
  }
  return std::nullopt;
}

double deletion_set_count(std::size_t n, std::size_t k) {
  double total = 0;
  double term = 1;
  for (std::size_t i = 0; i <= std::min(k, n); ++i) {
    total += term;
    term = term * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return total;
}

}  // namespace

std::optional<std::vector<std::size_t>> degree_d_deletion(const SimpleGraph& h,
                                                          const TreeDecomposition& td,
                                                          std::size_t d, std::size_t k,
                                                          const DegreeDeletionOptions& options) {
  if (auto problem = validate(td, h)) throw InputError("invalid tree decomposition: " + *problem);
  if (h.size() == 0) return std::vector<std::size_t>{};
  if (d + 1 >= 255) throw CapacityError("degree bound too large for the state encoding", 253, static_cast<double>(d));

  const long width = td.width();
  if (width > static_cast<long>(options.max_width)) {
    const double dp_states = std::pow(static_cast<double>(d + 2), static_cast<double>(width + 1));
    const double direct = deletion_set_count(h.size(), k);
    if (direct <= dp_states && direct <= 1e9) return enumerate_deletions(h, d, k);
    throw CapacityError("tree decomposition width " + std::to_string(width) +
                            " exceeds the limit " + std::to_string(options.max_width) +
                            " and direct enumeration needs " + std::to_string(direct) +
                            " candidate sets",
                        static_cast<double>(options.max_width), static_cast<double>(width));
  }
  return DegreeDp(h, d, k).run(td);
}

}  // namespace bookemb::fpt
