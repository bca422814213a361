#pragma once

#include "gcond/graph.hpp"

#include <iosfwd>
#include <string>

namespace gcond {

// Graph files are JSON with three fields:
//   vertices: list of string ids
//   edges:    list of [u, v, weight]; weight is an integer or a "p/q" string
//   face:     boundary walk of the designated face, in cyclic order
// Unknown extra fields are ignored. Malformed input raises ParseError.
PlaneGraph parse_graph(const std::string& text);
PlaneGraph load_graph_file(const std::string& path);

std::string graph_to_text(const PlaneGraph& g);
void save_graph_file(const PlaneGraph& g, const std::string& path);

}  // namespace gcond
