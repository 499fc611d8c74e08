#include "bookemb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bookemb/approx_pages.hpp"
#include "bookemb/core.hpp"
#include "bookemb/edge_deletion.hpp"
#include "bookemb/errors.hpp"
#include "bookemb/exact_pages.hpp"
#include "bookemb/hitting_flow.hpp"
#include "bookemb/io.hpp"
#include "bookemb/oracles.hpp"
#include "bookemb/render.hpp"
#include "bookemb/tracks.hpp"

namespace bookemb::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::string input;
  std::optional<int> p;
  std::optional<std::size_t> d;
  std::optional<long> k;
  std::optional<int> t;
  bool min_tracks = false;
  bool oracle = false;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::size_t limit_m = exact::kDefaultMaxEdges;
  double limit_encodings = 1e8;
  std::optional<int> pages;
  int gen_n = 8;
  int gen_m = 12;
  std::string gen_kind = "graph";
};

/// Problem-independent report; printed as text or JSON.
struct Report {
  std::string problem;
  Json params = Json::object();
  Json objective;
  std::string witness_kind;
  Json witness;
  std::vector<std::string> witness_lines;
  std::vector<std::pair<std::string, std::string>> extra;
  bool verified = false;
  int code = kOk;
};

std::string edge_name(const OrderedGraph& g, EdgeId e) {
  return "(" + g.label(g.edge(e).u) + "," + g.label(g.edge(e).v) + ")";
}

void page_witness(Report& r, const OrderedGraph& g, const PageAssignment& a) {
  r.witness_kind = "pages";
  r.witness = Json::array();
  for (EdgeId e = 0; e < g.m(); ++e) {
    r.witness.push_back({{"edge", {g.label(g.edge(e).u), g.label(g.edge(e).v)}},
                         {"page", a.deleted(e) ? Json(nullptr) : Json(a.page(e))}});
    r.witness_lines.push_back(edge_name(g, e) + " " +
                              (a.deleted(e) ? std::string("deleted")
                                            : "page " + std::to_string(a.page(e))));
  }
}

void deleted_witness(Report& r, const OrderedGraph& g, const PageAssignment& a) {
  r.witness_kind = "deleted";
  Json del = Json::array();
  a.deleted_edges().for_each([&](EdgeId e) {
    del.push_back({g.label(g.edge(e).u), g.label(g.edge(e).v)});
  });
  Report pages;
  page_witness(pages, g, a);
  r.witness = {{"deleted", del}, {"pages", pages.witness}};
  r.witness_lines = pages.witness_lines;
}

void layout_witness(Report& r, const tracks::TrackLayout& layout) {
  r.witness_kind = "layout";
  r.witness = Json::array();
  for (std::size_t q = 0; q < layout.orders.size(); ++q) {
    Json order = Json::array();
    std::string line = "track " + std::to_string(q + 1) + ":";
    for (auto v : layout.orders[q]) {
      order.push_back(v + 1);
      line += " " + std::to_string(v + 1);
    }
    r.witness.push_back(order);
    r.witness_lines.push_back(line);
  }
}

void emit(const Report& r, const Flags& f, std::ostream& out) {
  if (f.json) {
    Json j;
    j["problem"] = r.problem;
    j["params"] = r.params;
    j["objective"] = r.objective;
    j["witness"] = Json{{r.witness_kind, r.witness}};
    for (const auto& [key, value] : r.extra) j[key] = value;
    j["verified"] = r.verified;
    out << j.dump(2) << '\n';
    return;
  }
  out << "problem: " << r.problem << '\n';
  std::string params;
  for (const auto& [key, value] : r.params.items()) {
    if (!params.empty()) params += ' ';
    params += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  out << "params: " << params << '\n';
  out << "objective: " << (r.objective.is_string() ? r.objective.get<std::string>()
                                                   : r.objective.dump())
      << '\n';
  for (const auto& [key, value] : r.extra) out << key << ": " << value << '\n';
  out << "witness (" << r.witness_kind << "):\n";
  for (const auto& line : r.witness_lines) out << "  " << line << '\n';
  out << "verified: " << (r.verified ? "true" : "false") << '\n';
}

OrderedGraph load_graph(const Flags& f) { return io::read_ordered_graph_file(f.input); }

int require_p(const Flags& f) {
  if (!f.p) throw InputError("--p is required");
  if (*f.p < 1) throw InputError("--p must be at least 1");
  return *f.p;
}

void oracle_check(Report& r, const Flags& f, long long value, const std::function<long long()>& fn) {
  if (!f.oracle) return;
  const long long o = fn();
  r.extra.emplace_back("oracle", std::to_string(o));
  r.verified = r.verified && o == value;
}

Report pages_exact(const Flags& f) {
  const OrderedGraph g = load_graph(f);
  Report r;
  r.problem = "pages-exact";
  r.params["input"] = f.input;
  r.params["limit-m"] = f.limit_m;
  if (f.p) {
    const int p = require_p(f);
    r.params["p"] = p;
    const auto profile = exact::cr_up_to(g, p, f.limit_m);
    const long long value = profile.values.back();
    r.objective = value;
    Json prof = Json::array();
    std::string line;
    for (auto v : profile.values) {
      prof.push_back(v);
      line += (line.empty() ? "" : " ") + std::to_string(v);
    }
    r.extra.emplace_back("profile", line);
    page_witness(r, g, profile.witness);
    r.verified = profile.witness.page_count() == p && profile.witness.deleted_edges().empty() &&
                 static_cast<long long>(crossing_count(g, profile.witness)) == value;
    oracle_check(r, f, value, [&] { return static_cast<long long>(oracle::oracle_cr_p(g, p)); });
  } else {
    const PageAssignment w = exact::page_number_witness(g, f.limit_m);
    const int value = exact::page_number(g, f.limit_m);
    r.objective = value;
    page_witness(r, g, w);
    r.verified = w.deleted_edges().empty() && w.page_count() == value && is_d_planar(g, w, 0);
    oracle_check(r, f, value, [&] { return oracle::oracle_page_number(g); });
  }
  return r;
}

Report pages_greedy(const Flags& f) {
  const OrderedGraph g = load_graph(f);
  const std::size_t d = f.d.value_or(0);
  Report r;
  r.problem = "pages-greedy";
  r.params["input"] = f.input;
  r.params["d"] = d;
  const PageAssignment a = approx::d_planar_pages_approx(g, d);
  r.objective = a.page_count();
  char factor[32];
  std::snprintf(factor, sizeof factor, "%.4f", approx::greedy_bound_factor(g.m()));
  r.extra.emplace_back("bound-factor", factor);
  page_witness(r, g, a);
  r.verified = a.deleted_edges().empty() && is_d_planar(g, a, d);
  return r;
}

Report delete1page(const Flags& f) {
  const OrderedGraph g = load_graph(f);
  const std::size_t d = f.d.value_or(0);
  const long k = f.k.value_or(static_cast<long>(g.m()));
  if (k < 0) throw InputError("--k must be non-negative");
  Report r;
  r.problem = "delete1page";
  r.params["input"] = f.input;
  r.params["d"] = d;
  r.params["k"] = k;
  const auto result = fpt::solve(g, d, k);
  if (!result) {
    r.objective = "infeasible";
    r.witness_kind = "deleted";
    r.witness = nullptr;
    r.code = kInfeasible;
    // Infeasibility is re-checked only by the oracle when requested.
    r.verified = true;
    if (f.oracle) {
      const auto o = oracle::oracle_min_deletion(g, 1, d);
      r.extra.emplace_back("oracle", std::to_string(o));
      r.verified = static_cast<long>(o) > k;
    }
    return r;
  }
  PageAssignment a(g.m(), 1, 1);
  result->for_each([&](EdgeId e) { a.set(e, PageAssignment::kDeleted); });
  const long long value = static_cast<long long>(result->count());
  r.objective = value;
  deleted_witness(r, g, a);
  r.verified = value <= k && is_d_planar(g, a, d);
  oracle_check(r, f, value, [&] { return static_cast<long long>(oracle::oracle_min_deletion(g, 1, d)); });
  return r;
}

Report deletion_report(const Flags& f, const OrderedGraph& g, int p, const char* problem,
                       const char* method, const hitting::DeletionResult& res) {
  Report r;
  r.problem = problem;
  r.params["input"] = f.input;
  r.params["p"] = p;
  r.params["method"] = method;
  const long long value = static_cast<long long>(res.deleted.count());
  r.objective = value;
  deleted_witness(r, g, res.assignment);
  r.verified = res.assignment.deleted_edges() == res.deleted && is_d_planar(g, res.assignment, 0);
  oracle_check(r, f, value, [&] { return static_cast<long long>(oracle::oracle_min_deletion(g, p, 0)); });
  return r;
}

Report deletepages(const Flags& f) {
  const OrderedGraph g = load_graph(f);
  const int p = require_p(f);
  const std::size_t h = hitting::greedy_hitting_set(g).size();
  if (h <= 1) return deletion_report(f, g, p, "deletepages", "flow", hitting::solve_h1(g, p));
  hitting::GeneralOptions opts;
  opts.max_encodings = f.limit_encodings;
  return deletion_report(f, g, p, "deletepages", "encodings", hitting::solve_general(g, p, opts));
}

Report hitting_cmd(const Flags& f) {
  const OrderedGraph g = load_graph(f);
  const hitting::HittingSet h = hitting::greedy_hitting_set(g);
  std::string points;
  for (std::size_t i = 0; i < h.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", h.coordinate(i));
    points += (points.empty() ? "" : " ") + std::string(buf);
  }
  if (f.p) {
    const int p = require_p(f);
    hitting::GeneralOptions opts;
    opts.max_encodings = f.limit_encodings;
    Report r = deletion_report(f, g, p, "hitting", "encodings", hitting::solve_general(g, p, opts));
    r.extra.emplace(r.extra.begin(), "hitting-points", points);
    r.extra.emplace(r.extra.begin(), "h", std::to_string(h.size()));
    return r;
  }
  Report r;
  r.problem = "hitting";
  r.params["input"] = f.input;
  r.objective = h.size();
  r.witness_kind = "points";
  r.witness = Json::array();
  for (std::size_t i = 0; i < h.size(); ++i) r.witness.push_back(h.coordinate(i));
  r.witness_lines.push_back(points);
  r.verified = hitting::hits_all(g, h);
  oracle_check(r, f, static_cast<long long>(h.size()),
               [&] { return static_cast<long long>(oracle::oracle_hitting_number(g)); });
  return r;
}

Report tracks_cmd(const Flags& f) {
  const tracks::TrackInstance inst = io::read_track_instance_file(f.input);
  Report r;
  r.problem = "tracks";
  r.params["input"] = f.input;
  r.params["limit-m"] = f.limit_m;
  if (f.min_tracks) {
    r.params["min-tracks"] = true;
    const int t = tracks::min_tracks(inst, f.limit_m);
    r.objective = t;
    const auto res = tracks::cr_t_track(inst, std::max(t, 1), f.limit_m);
    layout_witness(r, res.layout);
    r.verified = tracks::layout_crossings(inst, res.layout) == 0 &&
                 (t <= 1 || tracks::cr_t_track(inst, t - 1, f.limit_m).value > 0);
    if (f.oracle) {
      int o = inst.b() == 0 ? 0 : 1;
      while (inst.b() > 0 && oracle::oracle_tracks(inst, o) != 0) ++o;
      r.extra.emplace_back("oracle", std::to_string(o));
      r.verified = r.verified && o == t;
    }
    return r;
  }
  const int t = f.t.value_or(1);
  if (t < 1) throw InputError("--t must be at least 1");
  r.params["t"] = t;
  const auto res = tracks::cr_t_track(inst, t, f.limit_m);
  r.objective = res.value;
  layout_witness(r, res.layout);
  r.verified = tracks::layout_crossings(inst, res.layout) == res.value;
  oracle_check(r, f, res.value, [&] { return oracle::oracle_tracks(inst, t); });
  return r;
}

void write_output(const Flags& f, const std::string& text, std::ostream& out) {
  if (f.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(f.out, std::ios::binary);
  if (!file) throw InputError("cannot write '" + f.out + "'");
  file << text;
}

int render_cmd(const Flags& f, std::ostream& out, std::ostream& err) {
  if (io::sniff_kind(f.input) == io::InstanceKind::kTrackInstance) {
    const tracks::TrackInstance inst = io::read_track_instance_file(f.input);
    const int t = f.t ? *f.t : f.pages ? *f.pages : std::max(tracks::min_tracks(inst, f.limit_m), 1);
    if (t < 1) throw InputError("track count must be at least 1");
    const auto res = tracks::cr_t_track(inst, t, f.limit_m);
    write_output(f, render::render_tracks(inst, res.layout), out);
    if (!f.out.empty()) err << "wrote " << f.out << '\n';
    return kOk;
  }
  const OrderedGraph g = load_graph(f);
  PageAssignment a;
  if (f.pages) {
    if (*f.pages < 1) throw InputError("--pages must be at least 1");
    a = g.m() <= f.limit_m ? exact::cr_up_to(g, *f.pages, f.limit_m).witness
                           : PageAssignment(g.m(), *f.pages, 1);
  } else {
    a = g.m() <= f.limit_m ? exact::page_number_witness(g, f.limit_m)
                           : approx::d_planar_pages_approx(g, 0);
  }
  write_output(f, render::render_book(g, a), out);
  if (!f.out.empty()) err << "wrote " << f.out << '\n';
  return kOk;
}

int generate_cmd(const Flags& f, std::ostream& out) {
  if (!f.seed) throw InputError("generate needs an explicit --seed");
  std::mt19937_64 rng(*f.seed);
  std::ostringstream text;
  if (f.gen_kind == "tracks") {
    const int a = std::max(1, f.gen_n);
    const int b = std::max(1, f.gen_m);
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(0.5);
    for (int x = 1; x <= b; ++x) {
      for (int s = 1; s <= a; ++s) {
        if (coin(rng)) edges.emplace_back(s, x);
      }
    }
    text << a << ' ' << b << ' ' << edges.size() << '\n';
    for (const auto& [s, x] : edges) text << s << ' ' << x << '\n';
  } else if (f.gen_kind == "graph") {
    const int n = std::max(2, f.gen_n);
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(std::max(0, f.gen_m))));
    std::sort(all.begin(), all.end(), [](const Edge& x, const Edge& y) {
      return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    io::write_ordered_graph(text, OrderedGraph(n, all));
  } else {
    throw InputError("--kind must be 'graph' or 'tracks'");
  }
  write_output(f, text.str(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-order book embedding solvers", "bookemb"};
  app.require_subcommand(1);
  Flags f;

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", f.input, "instance file")->required(); };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", f.json, "machine-readable output");
    sub->add_flag("--oracle", f.oracle, "cross-check against the brute-force oracle");
  };

  auto* exact_cmd = app.add_subcommand("pages-exact", "exact page number or crossing profile");
  add_input(exact_cmd);
  add_common(exact_cmd);
  exact_cmd->add_option("--p", f.p, "pages; report cr_1..cr_p");
  exact_cmd->add_option("--limit-m", f.limit_m, "largest edge count for the exact tables");

  auto* greedy_cmd = app.add_subcommand("pages-greedy", "greedy crossing-free page cover");
  add_input(greedy_cmd);
  add_common(greedy_cmd);
  greedy_cmd->add_option("--d", f.d, "crossings allowed per edge");

  auto* del1_cmd = app.add_subcommand("delete1page", "fewest deletions for one d-planar page");
  add_input(del1_cmd);
  add_common(del1_cmd);
  del1_cmd->add_option("--d", f.d, "crossings allowed per edge");
  del1_cmd->add_option("--k", f.k, "deletion budget");

  auto* delp_cmd = app.add_subcommand("deletepages", "fewest deletions for p crossing-free pages");
  add_input(delp_cmd);
  add_common(delp_cmd);
  delp_cmd->add_option("--p", f.p, "pages")->required();
  delp_cmd->add_option("--limit-encodings", f.limit_encodings, "largest encoding count");

  auto* hit_cmd = app.add_subcommand("hitting", "hitting set, optionally with the encoding solver");
  add_input(hit_cmd);
  add_common(hit_cmd);
  hit_cmd->add_option("--p", f.p, "pages for the encoding solver");
  hit_cmd->add_option("--limit-encodings", f.limit_encodings, "largest encoding count");

  auto* tr_cmd = app.add_subcommand("tracks", "spine and track crossing minimization");
  add_input(tr_cmd);
  add_common(tr_cmd);
  auto* t_opt = tr_cmd->add_option("--t", f.t, "number of tracks");
  tr_cmd->add_flag("--min-tracks", f.min_tracks, "least track count without crossings")
      ->excludes(t_opt);
  tr_cmd->add_option("--limit-m", f.limit_m, "largest track vertex count");

  auto* render_sub = app.add_subcommand("render", "SVG drawing of an instance");
  add_input(render_sub);
  render_sub->add_option("--pages", f.pages, "pages (or tracks) to draw");
  render_sub->add_option("--t", f.t, "tracks for a track instance");
  render_sub->add_option("--out", f.out, "output file");
  render_sub->add_option("--limit-m", f.limit_m, "largest edge count for exact layouts");

  auto* gen_cmd = app.add_subcommand("generate", "random instance");
  gen_cmd->add_option("--seed", f.seed, "random seed")->required();
  gen_cmd->add_option("--kind", f.gen_kind, "graph or tracks");
  gen_cmd->add_option("--n", f.gen_n, "vertices (spine vertices for tracks)");
  gen_cmd->add_option("--m", f.gen_m, "edges (track vertices for tracks)");
  gen_cmd->add_option("--out", f.out, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (render_sub->parsed()) return render_cmd(f, out, err);
    if (gen_cmd->parsed()) return generate_cmd(f, out);
    Report r;
    if (exact_cmd->parsed()) r = pages_exact(f);
    if (greedy_cmd->parsed()) r = pages_greedy(f);
    if (del1_cmd->parsed()) r = delete1page(f);
    if (delp_cmd->parsed()) r = deletepages(f);
    if (hit_cmd->parsed()) r = hitting_cmd(f);
    if (tr_cmd->parsed()) r = tracks_cmd(f);
    emit(r, f, out);
    if (!r.verified) {
      err << "error: witness failed verification\n";
      return kInputError;
    }
    return r.code;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << " (limit " << e.limit() << ", requested "
        << e.requested() << ")\n";
    return kCapacityError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace bookemb::cli
