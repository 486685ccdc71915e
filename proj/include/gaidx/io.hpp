#ifndef GAIDX_IO_HPP
#define GAIDX_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gaidx/graph.hpp"

namespace gaidx {

/// Parses one graph6-encoded graph. Accepts an optional ">>graph6<<" header
/// and trailing whitespace; anything else malformed raises BadGraph6.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 bytes (no header, no trailing newline).
std::string write_graph6(const Graph& g);

/// Text edge-list format: '#' starts a comment, first two integers are the
/// vertex count and the edge count, followed by one "u v" pair per edge.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Reads one graph6 value per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

} // namespace gaidx

#endif
