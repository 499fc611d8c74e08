#include "bookemb/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "bookemb/errors.hpp"

namespace bookemb::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<long long> fields;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<Line> next() {
    std::string text;
    while (std::getline(in_, text)) {
      ++number_;
      const auto start = text.find_first_not_of(" \t\r");
      if (start == std::string::npos || text[start] == '#') continue;
      std::istringstream fields(text);
      Line line{number_, {}};
      std::string token;
      while (fields >> token) {
        if (token[0] == '#') break;
        try {
          std::size_t used = 0;
          long long value = std::stoll(token, &used);
          if (used != token.size()) throw std::invalid_argument(token);
          line.fields.push_back(value);
        } catch (const std::exception&) {
          throw InputError("line " + std::to_string(number_) + ": '" + token +
                           "' is not an integer");
        }
      }
      return line;
    }
    return std::nullopt;
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

Line expect(LineReader& reader, std::size_t fields, const char* what) {
  auto line = reader.next();
  if (!line) throw InputError(std::string("unexpected end of input: missing ") + what);
  if (line->fields.size() != fields) {
    throw InputError("line " + std::to_string(line->number) + ": expected " +
                     std::to_string(fields) + " integers for " + what + ", found " +
                     std::to_string(line->fields.size()));
  }
  return *line;
}

void expect_end(LineReader& reader) {
  if (auto extra = reader.next()) {
    throw InputError("line " + std::to_string(extra->number) +
                     ": more edge lines than announced in the header");
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace

OrderedGraph read_ordered_graph(std::istream& in) {
  LineReader reader(in);
  const Line header = expect(reader, 2, "header 'n m'");
  const long long n = header.fields[0];
  const long long m = header.fields[1];
  if (n < 0 || m < 0) {
    throw InputError("line " + std::to_string(header.number) + ": n and m must be non-negative");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    const Line line = expect(reader, 2, "edge 'u v'");
    long long u = line.fields[0];
    long long v = line.fields[1];
    if (u < 1 || v < 1 || u > n || v > n) {
      throw InputError("line " + std::to_string(line.number) + ": endpoint outside 1.." +
                       std::to_string(n));
    }
    if (u == v) throw InputError("line " + std::to_string(line.number) + ": self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  expect_end(reader);
  try {
    return OrderedGraph(static_cast<int>(n), std::move(edges));
  } catch (const InputError& e) {
    throw InputError(std::string("invalid graph: ") + e.what());
  }
}

OrderedGraph read_ordered_graph_file(const std::string& path) {
  auto in = open(path);
  return read_ordered_graph(in);
}

tracks::TrackInstance read_track_instance(std::istream& in) {
  LineReader reader(in);
  const Line header = expect(reader, 3, "header 'a b m'");
  const long long a = header.fields[0];
  const long long b = header.fields[1];
  const long long m = header.fields[2];
  if (a < 0 || b < 0 || m < 0) {
    throw InputError("line " + std::to_string(header.number) + ": a, b and m must be non-negative");
  }
  std::vector<std::pair<int, tracks::TrackVertex>> edges;
  for (long long i = 0; i < m; ++i) {
    const Line line = expect(reader, 2, "edge 'spine track'");
    const long long s = line.fields[0];
    const long long t = line.fields[1];
    if (s < 1 || s > a) {
      throw InputError("line " + std::to_string(line.number) + ": spine vertex outside 1.." +
                       std::to_string(a));
    }
    if (t < 1 || t > b) {
      throw InputError("line " + std::to_string(line.number) + ": track vertex outside 1.." +
                       std::to_string(b));
    }
    edges.emplace_back(static_cast<int>(s), static_cast<tracks::TrackVertex>(t - 1));
  }
  expect_end(reader);
  try {
    return tracks::TrackInstance(static_cast<int>(a), static_cast<std::size_t>(b), std::move(edges));
  } catch (const InputError& e) {
    throw InputError(std::string("invalid track instance: ") + e.what());
  }
}

tracks::TrackInstance read_track_instance_file(const std::string& path) {
  auto in = open(path);
  return read_track_instance(in);
}

InstanceKind sniff_kind(const std::string& path) {
  auto in = open(path);
  LineReader reader(in);
  auto header = reader.next();
  if (!header) throw InputError("'" + path + "' is empty");
  if (header->fields.size() == 3) return InstanceKind::kTrackInstance;
  if (header->fields.size() == 2) return InstanceKind::kOrderedGraph;
  throw InputError("line " + std::to_string(header->number) +
                   ": header must have 2 (ordered graph) or 3 (track instance) fields");
}

void write_ordered_graph(std::ostream& out, const OrderedGraph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace bookemb::io
