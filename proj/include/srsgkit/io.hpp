#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srsgkit/graph.hpp"

namespace srsgkit {

// graph6: one size byte n + 63 (n <= 62), then the upper triangle in
// column order (0,1), (0,2), (1,2), (0,3), ... packed big-endian into
// 6-bit groups, each + 63, zero padded. An optional ">>graph6<<" prefix
// is accepted. Throws MalformedHeader, TruncatedPayload, TrailingBits,
// ParseError.
Graph parse_graph6(std::string_view line);
// Throws SizeExceeded above 62 vertices.
std::string emit_graph6(const Graph& g);

// One graph per non-blank line. Errors carry `source` and the line number.
std::vector<Graph> parse_graph6_lines(std::string_view text, const std::string& source = {});
std::vector<Graph> read_graph6_file(const std::string& path);

// .sg text: "sg <n> <m>", then m lines "<u> <v> <+|->" with 0-based
// vertices. '#' starts a comment. Throws BadHeader, BadSign, ParseError,
// DuplicateEdge, SelfLoop, VertexOutOfRange, CountMismatch, each with the
// offending line.
SignedGraph parse_sg(std::string_view text, const std::string& source = {});
// Edges sorted by (u, v); parse_sg(emit_sg(g)) == g.
std::string emit_sg(const SignedGraph& g);
SignedGraph read_sg_file(const std::string& path);

// Undirected DOT; positive edges style=solid, negative style=dashed.
std::string export_dot(const SignedGraph& g, const std::string& name = "G");

// Throws Io when the file cannot be read or written.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace srsgkit
