#include "srsgkit/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "srsgkit/error.hpp"

namespace srsgkit {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view token, int& value) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.substr(0, kGraph6Prefix.size()) == kGraph6Prefix) line.remove_prefix(kGraph6Prefix.size());
  if (line.empty()) throw Error(ErrorKind::MalformedHeader, "empty graph6 record");
  const int head = static_cast<unsigned char>(line[0]);
  if (head < 63 || head > 126) {
    throw Error(ErrorKind::MalformedHeader, "size byte " + std::to_string(head) + " out of range");
  }
  const int n = head - 63;
  if (n == 63) throw Error(ErrorKind::MalformedHeader, "multi-byte sizes (n > 62) are not supported");
  if (n == 0) throw Error(ErrorKind::MalformedHeader, "graph with no vertices");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (pairs + 5) / 6;
  const std::string_view payload = line.substr(1);
  if (payload.size() < groups) {
    throw Error(ErrorKind::TruncatedPayload, "expected " + std::to_string(groups) +
                                                 " payload bytes, found " +
                                                 std::to_string(payload.size()));
  }
  if (payload.size() > groups) {
    throw Error(ErrorKind::TrailingBits, std::to_string(payload.size() - groups) +
                                             " bytes after the payload");
  }
  std::vector<int> bits;
  bits.reserve(groups * 6);
  for (char ch : payload) {
    const int value = static_cast<unsigned char>(ch) - 63;
    if (value < 0 || value > 63) {
      throw Error(ErrorKind::ParseError, "payload byte " + std::to_string(value + 63) + " out of range");
    }
    for (int shift = 5; shift >= 0; --shift) bits.push_back((value >> shift) & 1);
  }
  for (std::size_t i = pairs; i < bits.size(); ++i) {
    if (bits[i] != 0) throw Error(ErrorKind::TrailingBits, "padding bits are not zero");
  }
  std::vector<Edge> edges;
  std::size_t at = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bits[at++] != 0) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw Error(ErrorKind::SizeExceeded, "graph6 output supports at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text, const std::string& source) {
  std::vector<Graph> graphs;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    try {
      graphs.push_back(parse_graph6(lines[i]));
    } catch (const Error& e) {
      throw Error(e.kind(), e.detail(), static_cast<int>(i + 1), source);
    }
  }
  return graphs;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  return parse_graph6_lines(read_text_file(path), path);
}

SignedGraph parse_sg(std::string_view text, const std::string& source) {
  const auto lines = split_lines(text);
  const auto fail = [&](ErrorKind kind, const std::string& message, std::size_t line) -> Error {
    return Error(kind, message, static_cast<int>(line + 1), source);
  };
  bool have_header = false;
  int n = 0;
  int m = 0;
  std::size_t header_line = 0;
  std::vector<SignedEdge> edges;
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view content = lines[i];
    const auto hash = content.find('#');
    if (hash != std::string_view::npos) content = content.substr(0, hash);
    const auto fields = tokens(content);
    if (fields.empty()) continue;
    if (!have_header) {
      if (fields.size() != 3 || fields[0] != "sg" || !parse_int(fields[1], n) ||
          !parse_int(fields[2], m) || n < 1 || n > kMaxVertices || m < 0) {
        throw fail(ErrorKind::BadHeader, "expected 'sg <n> <m>' with 1 <= n <= 64", i);
      }
      have_header = true;
      header_line = i;
      continue;
    }
    if (fields.size() != 3) throw fail(ErrorKind::ParseError, "expected '<u> <v> <+|->'", i);
    int u = 0;
    int v = 0;
    if (!parse_int(fields[0], u) || !parse_int(fields[1], v)) {
      throw fail(ErrorKind::ParseError, "vertex is not an integer", i);
    }
    Sign sign = Sign::positive;
    if (fields[2] == "+") {
      sign = Sign::positive;
    } else if (fields[2] == "-") {
      sign = Sign::negative;
    } else {
      throw fail(ErrorKind::BadSign, "sign '" + std::string(fields[2]) + "' is not + or -", i);
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw fail(ErrorKind::VertexOutOfRange, "vertex outside 0.." + std::to_string(n - 1), i);
    }
    if (u == v) throw fail(ErrorKind::SelfLoop, "self loop at vertex " + std::to_string(u), i);
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw fail(ErrorKind::DuplicateEdge,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") repeated", i);
    }
    edges.push_back({u, v, sign});
  }
  if (!have_header) throw fail(ErrorKind::BadHeader, "missing 'sg <n> <m>' header", 0);
  if (static_cast<int>(edges.size()) != m) {
    throw fail(ErrorKind::CountMismatch,
               "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
               header_line);
  }
  return SignedGraph::from_signed_edges(n, edges);
}

std::string emit_sg(const SignedGraph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << "sg " << g.order() << ' ' << edges.size() << '\n';
  for (const SignedEdge& e : edges) {
    out << e.u << ' ' << e.v << ' ' << (e.sign == Sign::positive ? '+' : '-') << '\n';
  }
  return out.str();
}

SignedGraph read_sg_file(const std::string& path) { return parse_sg(read_text_file(path), path); }

std::string export_dot(const SignedGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const SignedEdge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [style="
        << (e.sign == Sign::positive ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << text;
}

}  // namespace srsgkit
