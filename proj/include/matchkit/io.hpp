#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <zlib.h>

#include "matchkit/graph.hpp"

namespace matchkit {

/// Parse failure with the byte offset (graph6) or line number (edge list,
/// corpus files) where decoding stopped.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  parse_error(const std::string& what, std::size_t line, int)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        offset_(0),
        line_(line) {}
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_ = 0;
  std::size_t line_ = 0;
};

// ---- graph6 ----------------------------------------------------------------
//
// Header-free graph6: N(n) is byte n+63 for n <= 62, otherwise 126 followed
// by three bytes carrying n in 18 bits big-endian (n <= 258047). The upper
// triangle of the adjacency matrix follows in column-major order
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
// each group + 63, zero-padded to a whole byte.

namespace g6 {

inline std::size_t triangle_bits(int n) {
  return static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
}

inline std::size_t body_bytes(int n) { return (triangle_bits(n) + 5) / 6; }

}  // namespace g6

inline std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 258047) throw std::domain_error("emit_graph6: vertex count too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0, filled = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (text.size() - pos < k)
      throw parse_error("graph6: truncated input", text.size());
  };
  auto sixbits = [&](std::size_t at) -> int {
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw parse_error("graph6: byte out of range", at);
    return c - 63;
  };

  need(1);
  int n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    need(4);
    if (static_cast<unsigned char>(text[1]) == 126)
      throw parse_error("graph6: vertex counts above 258047 unsupported", 1);
    n = (sixbits(1) << 12) | (sixbits(2) << 6) | sixbits(3);
    pos = 4;
  } else {
    n = sixbits(0);
    if (n > 62) throw parse_error("graph6: bad length byte", 0);
    pos = 1;
  }

  const std::size_t body = g6::body_bytes(n);
  if (text.size() - pos < body)
    throw parse_error("graph6: body shorter than length byte requires", text.size());
  if (text.size() - pos > body)
    throw parse_error("graph6: trailing garbage after body", pos + body);

  const std::size_t bits = g6::triangle_bits(n);
  std::vector<Edge> edges;
  std::size_t bit = 0;
  Vertex col = 1, row = 0;
  for (std::size_t i = 0; i < body; ++i) {
    int group = sixbits(pos + i);
    for (int b = 5; b >= 0; --b, ++bit) {
      int set = (group >> b) & 1;
      if (bit >= bits) {
        if (set) throw parse_error("graph6: padding bit set beyond triangle", pos + i);
        continue;
      }
      if (set) edges.push_back({row, col});
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

// ---- edge-list text format --------------------------------------------------
//
// First line "n m", then m lines "u v" (0-based). Lines whose first
// non-space character is '#' are comments; blank lines are skipped.

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto next_tokens = [&](std::vector<long>& out) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream ls(line);
      out.clear();
      long x;
      while (ls >> x) out.push_back(x);
      if (!ls.eof()) throw parse_error("edge list: non-numeric token", lineno, 0);
      return true;
    }
    return false;
  };

  std::vector<long> tok;
  if (!next_tokens(tok)) throw parse_error("edge list: empty input", lineno, 0);
  if (tok.size() != 2) throw parse_error("edge list: header must be \"n m\"", lineno, 0);
  long n = tok[0], m = tok[1];
  if (n < 0 || m < 0) throw parse_error("edge list: negative count", lineno, 0);

  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    if (!next_tokens(tok)) throw parse_error("edge list: fewer edges than header declares", lineno, 0);
    if (tok.size() != 2) throw parse_error("edge list: edge line must be \"u v\"", lineno, 0);
    if (tok[0] < 0 || tok[0] >= n || tok[1] < 0 || tok[1] >= n)
      throw parse_error("edge list: endpoint out of range", lineno, 0);
    if (tok[0] == tok[1]) throw parse_error("edge list: self-loop", lineno, 0);
    edges.push_back(make_edge(static_cast<Vertex>(tok[0]), static_cast<Vertex>(tok[1])));
  }
  if (next_tokens(tok)) throw parse_error("edge list: trailing content after last edge", lineno, 0);
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// ---- file ingestion ----------------------------------------------------------

/// Reads a whole file; files ending in ".gz" are decompressed transparently.
inline std::string read_text_file(const std::string& path) {
  if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error("cannot open " + path);
    std::string out;
    char buf[1 << 15];
    int got;
    while ((got = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(got));
    bool bad = got < 0;
    gzclose(f);
    if (bad) throw std::runtime_error("gzip read error in " + path);
    return out;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Parses a graph6 corpus (one graph per line); errors carry file and line.
inline std::vector<Graph> read_graph6_corpus(const std::string& path) {
  std::string text = read_text_file(path);
  std::vector<Graph> out;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line(text.data() + start,
                          (end == std::string::npos ? text.size() : end) - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what(), lineno, 0);
      }
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace matchkit
