#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "locatable/graph.hpp"

namespace locatable {

enum class GraphFormat { EdgeList, Graph6 };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Parses whitespace-separated non-negative integers; false on any other token.
inline bool parse_ints(std::string_view s, std::vector<long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || value < 0) return false;
    std::size_t next = static_cast<std::size_t>(ptr - s.data());
    if (next < s.size() && s[next] != ' ' && s[next] != '\t') return false;
    out.push_back(value);
    i = next;
  }
  return true;
}

inline Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<long> ints;
  long n = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!parse_ints(line, ints)) throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
    if (n < 0) {
      if (ints.size() != 1) throw ParseError(line_no, "expected vertex count");
      n = ints[0];
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      if (n > Graph::kMaxOrder) throw ParseError(line_no, "vertex count " + std::to_string(n) + " exceeds 64");
      continue;
    }
    if (ints.size() != 2) throw ParseError(line_no, "expected 'u v'");
    long u = ints[0], v = ints[1];
    if (u >= n || v >= n) throw ParseError(line_no, "vertex index out of range");
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    for (const auto& f : edges)
      if (f == e) throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(line_no, "missing vertex count");
  return Graph(static_cast<int>(n), edges);
}

inline Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError(1, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError(1, "invalid graph6 character");
  std::size_t i = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    i = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError(1, "unsupported graph6 size header");
    n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
    i = 4;
  }
  if (n < 1) throw ParseError(1, "graph6 vertex count must be positive");
  if (n > Graph::kMaxOrder) throw ParseError(1, "vertex count " + std::to_string(n) + " exceeds 64");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (text.size() - i != (bits + 5) / 6) throw ParseError(1, "graph6 body has wrong length");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      int byte = text[i + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  return Graph(static_cast<int>(n), edges);
}

}  // namespace detail

inline Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::EdgeList) {
  return format == GraphFormat::EdgeList ? detail::parse_edge_list(text) : detail::parse_graph6(text);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(63 + ((n >> 12) & 63));
    out += static_cast<char>(63 + ((n >> 6) & 63));
    out += static_cast<char>(63 + (n & 63));
  }
  int acc = 0, used = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out += static_cast<char>(acc + 63);
        acc = used = 0;
      }
    }
  if (used > 0) out += static_cast<char>((acc << (6 - used)) + 63);
  return out;
}

}  // namespace locatable
