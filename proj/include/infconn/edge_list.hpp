#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "infconn/error.hpp"
#include "infconn/graph.hpp"

// Edge-list text format:
//   line 1: "n m"
//   then m lines "u v" with 0-based ids.
// Reading accepts '#' comment lines and blank lines anywhere. Writing emits
// only the header and the edges with u < v in lexicographic order, LF endings.

namespace infconn {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] inline void parse_fail(const std::string& source, std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

inline long long parse_int(std::string_view tok, const std::string& source, std::size_t line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    parse_fail(source, line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace detail

/// Parses an edge-list document. Every problem is reported as a ParseError
/// whose message starts with "source:line:".
inline Graph read_edge_list(std::istream& in, const std::string& source = "<input>") {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<std::pair<long long, long long>> pairs;
  std::set<std::pair<long long, long long>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto toks = detail::split_ws(raw);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) detail::parse_fail(source, line_no, "expected two integers per line");
    const long long a = detail::parse_int(toks[0], source, line_no);
    const long long b = detail::parse_int(toks[1], source, line_no);
    if (!have_header) {
      if (a < 1) detail::parse_fail(source, line_no, "vertex count must be at least 1");
      if (b < 0) detail::parse_fail(source, line_no, "edge count must be non-negative");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(pairs.size()) == m)
      detail::parse_fail(source, line_no, "more than the declared " + std::to_string(m) + " edges");
    if (a < 0 || b < 0 || a >= n || b >= n)
      detail::parse_fail(source, line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (a == b) detail::parse_fail(source, line_no, "self-loop at vertex " + std::to_string(a));
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second)
      detail::parse_fail(source, line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    pairs.emplace_back(a, b);
  }
  if (!have_header) detail::parse_fail(source, line_no, "missing header line 'n m'");
  if (static_cast<long long>(pairs.size()) != m)
    detail::parse_fail(source, line_no,
                       "declared " + std::to_string(m) + " edges but found " + std::to_string(pairs.size()));
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

inline Graph read_edge_list_string(const std::string& text, const std::string& source = "<string>") {
  std::istringstream in(text);
  return read_edge_list(in, source);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  return read_edge_list(in, path);
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

inline void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, path + ": cannot open for writing");
  out << write_edge_list(g);
  if (!out) throw Error(ErrorCode::ParseError, path + ": write failed");
}

}  // namespace infconn
