#include "bookemb/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "bookemb/errors.hpp"

namespace bookemb::render {

namespace {

constexpr double kStep = 40.0;
constexpr double kMargin = 30.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double vx(Vertex v) { return kMargin + kStep * (v - 1); }

void spine(std::ostringstream& out, double y, int n, double width) {
  out << "  <line class=\"spine\" x1=\"" << num(kMargin / 2) << "\" y1=\"" << num(y)
      << "\" x2=\"" << num(width - kMargin / 2) << "\" y2=\"" << num(y)
      << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (Vertex v = 1; v <= n; ++v) {
    out << "  <circle class=\"vertex\" cx=\"" << num(vx(v)) << "\" cy=\"" << num(y)
        << "\" r=\"3.50\" fill=\"black\"/>\n";
  }
}

}  // namespace

std::string render_book(const OrderedGraph& g, const PageAssignment& assignment) {
  assignment.validate(g);
  const int n = g.n();
  const double width = 2 * kMargin + kStep * std::max(0, n - 1);

  struct Lane {
    std::string title;
    EdgeSubset edges;
    bool deleted;
  };
  std::vector<Lane> lanes;
  for (int q = 1; q <= assignment.page_count(); ++q) {
    lanes.push_back({"page " + std::to_string(q), assignment.edges_on(q), false});
  }
  const EdgeSubset deleted = assignment.deleted_edges();
  if (!deleted.empty() && g.m() > 0) lanes.push_back({"deleted", deleted, true});

  std::vector<double> heights;
  double total = kMargin;
  for (const Lane& lane : lanes) {
    double radius = 0;
    lane.edges.for_each([&](EdgeId e) {
      radius = std::max(radius, kStep * (g.edge(e).v - g.edge(e).u) / 2);
    });
    heights.push_back(radius + 2 * kMargin);
    total += heights.back();
  }
  if (lanes.empty()) total += 2 * kMargin;
  total += kMargin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(total) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(total) << "\">\n";

  double top = kMargin;
  for (std::size_t i = 0; i < lanes.size(); ++i) {
    const Lane& lane = lanes[i];
    const double base = top + heights[i] - kMargin;
    out << " <g class=\"" << (lane.deleted ? "deleted" : "page") << "\">\n";
    out << "  <text x=\"" << num(kMargin / 2) << "\" y=\"" << num(top) << "\" font-size=\"12\">"
        << escape(lane.title) << "</text>\n";
    spine(out, base, n, width);
    lane.edges.for_each([&](EdgeId e) {
      const Edge& ed = g.edge(e);
      const double r = kStep * (ed.v - ed.u) / 2;
      out << "  <path class=\"edge\" d=\"M " << num(vx(ed.u)) << ' ' << num(base) << " A "
          << num(r) << ' ' << num(r) << " 0 0 1 " << num(vx(ed.v)) << ' ' << num(base)
          << "\" fill=\"none\" stroke=\"" << (lane.deleted ? "gray" : "steelblue")
          << "\" stroke-width=\"1.5\"" << (lane.deleted ? " stroke-dasharray=\"4 3\"" : "")
          << "/>\n";
    });
    if (!lane.deleted) {
      lane.edges.for_each([&](EdgeId e) {
        (g.crossing(e) & lane.edges).for_each([&](EdgeId f) {
          if (f < e) return;
          const Edge& a = g.edge(e);
          const Edge& b = g.edge(f);
          const double c1 = (vx(a.u) + vx(a.v)) / 2;
          const double r1 = (vx(a.v) - vx(a.u)) / 2;
          const double c2 = (vx(b.u) + vx(b.v)) / 2;
          const double r2 = (vx(b.v) - vx(b.u)) / 2;
          const double x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1));
          const double y = std::sqrt(std::max(0.0, r1 * r1 - (x - c1) * (x - c1)));
          out << "  <circle class=\"crossing\" cx=\"" << num(x) << "\" cy=\"" << num(base - y)
              << "\" r=\"4.00\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";
        });
      });
    }
    out << " </g>\n";
    top += heights[i];
  }
  double label_y = top;
  if (lanes.empty()) {
    spine(out, top + kMargin, n, width);
    label_y = top + kMargin;
  }
  for (Vertex v = 1; v <= n; ++v) {
    out << " <text class=\"label\" x=\"" << num(vx(v)) << "\" y=\"" << num(label_y + 4)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << escape(g.label(v)) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_tracks(const tracks::TrackInstance& inst, const tracks::TrackLayout& layout) {
  tracks::validate_layout(inst, layout);
  std::size_t widest = static_cast<std::size_t>(std::max(inst.a(), 1));
  for (const auto& order : layout.orders) widest = std::max(widest, order.size());
  const double width = 2 * kMargin + kStep * static_cast<double>(widest - 1);
  const double lane = 4 * kMargin;
  const double height =
      kMargin + lane * static_cast<double>(std::max<std::size_t>(layout.orders.size(), 1));

  auto spread = [&](std::size_t i, std::size_t count) {
    if (count <= 1) return width / 2;
    return kMargin + (width - 2 * kMargin) * static_cast<double>(i) / static_cast<double>(count - 1);
  };
  const auto a = static_cast<std::size_t>(inst.a());

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  for (std::size_t q = 0; q < std::max<std::size_t>(layout.orders.size(), 1); ++q) {
    const double top = kMargin + lane * static_cast<double>(q);
    const double spine_y = top + kMargin / 2;
    const double track_y = top + lane - kMargin;
    out << " <g class=\"track\">\n";
    out << "  <text x=\"" << num(kMargin / 4) << "\" y=\"" << num(top - 8)
        << "\" font-size=\"12\">track " << q + 1 << "</text>\n";
    out << "  <line class=\"spine\" x1=\"" << num(kMargin / 2) << "\" y1=\"" << num(spine_y)
        << "\" x2=\"" << num(width - kMargin / 2) << "\" y2=\"" << num(spine_y)
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out << "  <line class=\"trackline\" x1=\"" << num(kMargin / 2) << "\" y1=\"" << num(track_y)
        << "\" x2=\"" << num(width - kMargin / 2) << "\" y2=\"" << num(track_y)
        << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    const std::vector<tracks::TrackVertex> empty;
    const auto& order = q < layout.orders.size() ? layout.orders[q] : empty;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int s : inst.neighbors(order[i])) {
        out << "  <line class=\"edge\" x1=\"" << num(spread(static_cast<std::size_t>(s - 1), a))
            << "\" y1=\"" << num(spine_y) << "\" x2=\"" << num(spread(i, order.size()))
            << "\" y2=\"" << num(track_y) << "\" stroke=\"steelblue\" stroke-width=\"1.2\"/>\n";
      }
    }
    for (std::size_t s = 0; s < a; ++s) {
      out << "  <circle class=\"vertex\" cx=\"" << num(spread(s, a)) << "\" cy=\"" << num(spine_y)
          << "\" r=\"3.50\" fill=\"black\"/>\n";
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      out << "  <circle class=\"trackvertex\" cx=\"" << num(spread(i, order.size()))
          << "\" cy=\"" << num(track_y) << "\" r=\"3.50\" fill=\"white\" stroke=\"black\"/>\n";
      out << "  <text class=\"label\" x=\"" << num(spread(i, order.size())) << "\" y=\""
          << num(track_y + 16) << "\" font-size=\"11\" text-anchor=\"middle\">" << order[i] + 1
          << "</text>\n";
    }
    out << " </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace bookemb::render
