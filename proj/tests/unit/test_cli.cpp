#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bookemb/cli.hpp"
#include "bookemb/core.hpp"
#include "bookemb/render.hpp"
#include "random_instances.hpp"

using namespace bookemb;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BOOKEMB_TEST_DATA) + "/" + name; }
std::string scratch(const std::string& name) { return std::string(BOOKEMB_TEST_SCRATCH) + "/" + name; }

std::size_t occurrences(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1)) ++n;
  return n;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("page number report") {
  const Run r = run({"pages-exact", data("k5.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.find("objective: 3") != std::string::npos);
  CHECK(r.out.find("verified: true") != std::string::npos);
}

TEST_CASE("json report shape") {
  const Run r = run({"pages-exact", data("k4.txt"), "--p", "2", "--json", "--oracle"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["problem"] == "pages-exact");
  CHECK(j["params"]["p"] == 2);
  CHECK(j["objective"] == 0);
  CHECK(j["witness"]["pages"].size() == 6);
  CHECK(j["verified"] == true);
}

TEST_CASE("deletion reports") {
  const Run one = run({"deletepages", data("k22sep.txt"), "--p", "1"});
  CHECK(one.code == 0);
  CHECK(one.out.find("objective: 1") != std::string::npos);
  CHECK(one.out.find("method=flow") != std::string::npos);
  const Run two = run({"deletepages", data("k22sep.txt"), "--p", "2", "--oracle"});
  CHECK(two.out.find("objective: 0") != std::string::npos);
  const Run k4 = run({"deletepages", data("k4.txt"), "--p", "1", "--oracle"});
  CHECK(k4.code == 0);
  CHECK(k4.out.find("method=encodings") != std::string::npos);
  CHECK(k4.out.find("objective: 1") != std::string::npos);
  const Run hit = run({"hitting", data("k4.txt")});
  CHECK(hit.out.find("objective: 3") != std::string::npos);
  CHECK(hit.out.find("1.5 2.5 3.5") != std::string::npos);
}

TEST_CASE("one-page deletion and infeasibility") {
  const Run ok = run({"delete1page", data("k5.txt"), "--d", "0", "--k", "3", "--oracle"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("objective: 3") != std::string::npos);
  const Run no = run({"delete1page", data("k5.txt"), "--d", "0", "--k", "2"});
  CHECK(no.code == 1);
  CHECK(no.out.find("infeasible") != std::string::npos);
}

TEST_CASE("greedy and tracks reports") {
  const Run g = run({"pages-greedy", data("k5.txt")});
  CHECK(g.code == 0);
  CHECK(g.out.find("objective: 3") != std::string::npos);
  const Run t = run({"tracks", data("k22_tracks.txt"), "--min-tracks", "--oracle"});
  CHECK(t.code == 0);
  CHECK(t.out.find("objective: 2") != std::string::npos);
  const Run t1 = run({"tracks", data("k22_tracks.txt"), "--t", "1"});
  CHECK(t1.out.find("objective: 1") != std::string::npos);
}

TEST_CASE("error exit codes") {
  CHECK(run({"pages-exact", data("missing.txt")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"deletepages", data("k4.txt")}).code == 2);
  const Run cap = run({"pages-exact", data("k5.txt"), "--limit-m", "5"});
  CHECK(cap.code == 3);
  CHECK(cap.err.find("limit 5") != std::string::npos);
  const Run enc = run({"deletepages", data("k4.txt"), "--p", "2", "--limit-encodings", "3"});
  CHECK(enc.code == 3);
  {
    std::ofstream bad(scratch("bad.txt"));
    bad << "3 1\n1 z\n";
  }
  const Run parse = run({"pages-exact", scratch("bad.txt")});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("line 2") != std::string::npos);
}

TEST_CASE("rendering") {
  const Run r = run({"render", data("k5.txt"), "--pages", "3", "--out", scratch("k5.svg")});
  REQUIRE(r.code == 0);
  const std::string svg = slurp(scratch("k5.svg"));
  CHECK(occurrences(svg, "<path class=\"edge\"") == 10);
  CHECK(occurrences(svg, "<g class=\"page\"") == 3);
  CHECK(occurrences(svg, "class=\"crossing\"") == 0);
  CHECK(svg.rfind("</svg>") != std::string::npos);

  const Run e = run({"render", data("empty.txt")});
  CHECK(e.code == 0);
  CHECK(occurrences(e.out, "<path") == 0);
  CHECK(occurrences(e.out, "class=\"spine\"") == 1);

  const OrderedGraph k4 = bookemb::testing::complete_graph(4);
  PageAssignment a(k4.m(), 1, 1);
  a.set(0, PageAssignment::kDeleted);
  const std::string one = render::render_book(k4, a);
  CHECK(occurrences(one, "class=\"crossing\"") == 1);
  CHECK(occurrences(one, "stroke-dasharray") == 1);
  CHECK_THROWS(render::render_book(k4, PageAssignment(3, 1)));

  const Run t = run({"render", data("k33_tracks.txt")});
  CHECK(t.code == 0);
  CHECK(occurrences(t.out, "<g class=\"track\"") == 3);
  CHECK(occurrences(t.out, "class=\"edge\"") == 9);
  CHECK(occurrences(t.out, "class=\"trackvertex\"") == 3);
}

TEST_CASE("generator is seeded") {
  const Run a = run({"generate", "--seed", "5", "--n", "6", "--m", "7"});
  const Run b = run({"generate", "--seed", "5", "--n", "6", "--m", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"generate"}).code == 2);
}
