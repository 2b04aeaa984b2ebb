#pragma once

#include <string>

#include "idom/graph.hpp"

namespace idom {

/// graph6 codec.
///
/// Layout: a size word (one byte n+63 for n <= 62, or '~' followed by three
/// bytes holding an 18-bit big-endian count for larger n), then the upper
/// triangle of the adjacency matrix read column by column:
///   x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ...
/// packed six bits per byte, most significant bit first, zero padded, each
/// byte offset by 63 so the encoding stays printable.
///
/// parse_graph6 is strict: every byte must lie in [63, 126], the length must
/// match the vertex count exactly, padding bits must be zero, and nothing may
/// follow the encoding. Vertex counts above MAX_VERTICES raise limit_error.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

/// Plain text form: the vertex count on the first line, then one "u v" edge
/// per line. encode_edge_list emits edges sorted with u < v.
Graph parse_edge_list(const std::string& text);
std::string encode_edge_list(const Graph& g);

/// Auto-detecting reader: edge-list text starts with a digit, a graph6 size
/// word never does. Leading and trailing whitespace is ignored.
Graph parse_graph(const std::string& text);

}  // namespace idom
