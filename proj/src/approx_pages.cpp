#include "bookemb/approx_pages.hpp"

#include <cmath>
#include <string>

#include "bookemb/circle_mis.hpp"
#include "bookemb/errors.hpp"

namespace bookemb::approx {

std::vector<EdgeSubset> greedy_pages(const OrderedGraph& g) {
  std::vector<EdgeSubset> pages;
  EdgeSubset remaining = g.all_edges();
  while (!remaining.empty()) {
    EdgeSubset page = circle::max_noncrossing_subset(g, remaining);
    remaining -= page;
    pages.push_back(std::move(page));
  }
  return pages;
}

std::vector<EdgeSubset> split_d_planar_page(const OrderedGraph& g, const EdgeSubset& page,
                                            std::size_t d) {
  page.for_each([&](EdgeId e) {
    const std::size_t c = (g.crossing(e) & page).count();
    if (c > d) {
      const Edge& ed = g.edge(e);
      throw InputError("edge " + std::to_string(e) + " (" + std::to_string(ed.u) + "," +
                       std::to_string(ed.v) + ") has " + std::to_string(c) +
                       " crossings on the page, more than d = " + std::to_string(d));
    }
  });

  std::vector<EdgeSubset> parts;
  EdgeSubset rest = page;
  for (std::size_t level = d; level > 0; --level) {
    EdgeSubset peeled(g.m());
    rest.for_each([&](EdgeId e) {
      if ((g.crossing(e) & rest).count() != level) return;
      if (!g.crossing(e).intersects(peeled)) peeled.insert(e);
    });
    if (!peeled.empty()) {
      rest -= peeled;
      parts.push_back(std::move(peeled));
    }
  }
  if (!rest.empty()) parts.push_back(std::move(rest));
  return parts;
}

PageAssignment to_assignment(const OrderedGraph& g, const std::vector<EdgeSubset>& pages) {
  PageAssignment out(g.m(), static_cast<int>(pages.size()));
  for (std::size_t i = 0; i < pages.size(); ++i) {
    pages[i].for_each([&](EdgeId e) { out.set(e, static_cast<int>(i + 1)); });
  }
  return out;
}

PageAssignment d_planar_pages_approx(const OrderedGraph& g, std::size_t /*d*/) {
  return to_assignment(g, greedy_pages(g));
}

double greedy_bound_factor(std::size_t m) {
  return m <= 1 ? 1.0 : std::log(static_cast<double>(m)) + 1.0;
}

}  // namespace bookemb::approx
