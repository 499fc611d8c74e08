#pragma once

#include <string>

#include "bookemb/core.hpp"
#include "bookemb/tracks.hpp"

namespace bookemb::render {

/// SVG of a book embedding: one horizontal lane per page with semicircular
/// arcs above a copy of the spine, crossings marked, deleted edges dashed
/// gray in an extra lane. Throws InputError if the assignment does not fit g.
std::string render_book(const OrderedGraph& g, const PageAssignment& assignment);

/// SVG of a spine+tracks drawing, one lane per track holding a copy of the
/// spine and the track line, with straight edges between them.
std::string render_tracks(const tracks::TrackInstance& inst, const tracks::TrackLayout& layout);

}  // namespace bookemb::render
