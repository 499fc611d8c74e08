#pragma once

#include <istream>
#include <string>

#include "bookemb/core.hpp"
#include "bookemb/tracks.hpp"

namespace bookemb::io {

/// Reads `n m` followed by m lines `u v`. Lines starting with '#' are
/// comments. Errors name the offending line.
OrderedGraph read_ordered_graph(std::istream& in);
OrderedGraph read_ordered_graph_file(const std::string& path);

/// Reads `a b m` followed by m lines `spine track` (both 1-based).
tracks::TrackInstance read_track_instance(std::istream& in);
tracks::TrackInstance read_track_instance_file(const std::string& path);

enum class InstanceKind { kOrderedGraph, kTrackInstance };
/// Decides by the number of fields on the header line.
InstanceKind sniff_kind(const std::string& path);

void write_ordered_graph(std::ostream& out, const OrderedGraph& g);

}  // namespace bookemb::io
