#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "superdom/graph.hpp"

namespace superdom {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parsing refuses absurd vertex counts before allocating adjacency rows.
inline constexpr int kMaxParsedVertices = 4096;

// graph6: 6-bit groups in characters 63..126; upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ... The optional ">>graph6<<" header is
// accepted and ignored.
inline Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  if (line.empty()) throw FormatError("graph6: empty record");

  auto val = [&](size_t i) -> uint64_t {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw FormatError("graph6: character outside 63..126");
    return c - 63;
  };

  uint64_t n64 = 0;
  size_t pos = 0;
  if (line[0] != '~') {
    n64 = val(0);
    pos = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw FormatError("graph6: malformed length prefix");
    n64 = (val(1) << 12) | (val(2) << 6) | val(3);
    pos = 4;
  } else {
    if (line.size() < 8) throw FormatError("graph6: malformed length prefix");
    for (size_t i = 2; i < 8; ++i) n64 = (n64 << 6) | val(i);
    pos = 8;
  }
  if (n64 > static_cast<uint64_t>(kMaxParsedVertices))
    throw FormatError("graph6: vertex count exceeds supported maximum");

  const int n = static_cast<int>(n64);
  const uint64_t bits = static_cast<uint64_t>(n) * (n - 1) / 2;
  const size_t body = static_cast<size_t>((bits + 5) / 6);
  if (line.size() - pos != body) throw FormatError("graph6: body length mismatch");

  std::vector<std::pair<int, int>> edges;
  uint64_t bit_index = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit_index) {
      uint64_t group = val(pos + static_cast<size_t>(bit_index / 6));
      if ((group >> (5 - bit_index % 6)) & 1) edges.emplace_back(row, col);
    }
  }
  // padding bits up to the 6-bit boundary must be zero
  for (; bit_index % 6 != 0; ++bit_index) {
    uint64_t group = val(pos + static_cast<size_t>(bit_index / 6));
    if ((group >> (5 - bit_index % 6)) & 1) throw FormatError("graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

inline std::string emit_graph6(const Graph& g) {
  const uint64_t n = static_cast<uint64_t>(g.n());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    out.push_back(static_cast<char>((n & 0x3f) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
  }
  uint64_t group = 0;
  int filled = 0;
  for (int col = 1; col < g.n(); ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
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

namespace detail {

// Pulls the next whitespace-separated token, treating '#' as start-of-comment.
inline std::optional<std::string> next_token(std::istream& in) {
  std::string tok;
  char c;
  while (in.get(c)) {
    if (c == '#') {
      while (in.get(c) && c != '\n') {
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(c);
  }
  if (!tok.empty()) return tok;
  return std::nullopt;
}

inline int parse_count(const std::string& tok, const char* what) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw FormatError(std::string("edge list: bad ") + what + " '" + tok + "'");
  }
  if (used != tok.size() || v < 0)
    throw FormatError(std::string("edge list: bad ") + what + " '" + tok + "'");
  if (v > kMaxParsedVertices * static_cast<long>(kMaxParsedVertices))
    throw FormatError(std::string("edge list: ") + what + " out of range");
  return static_cast<int>(v);
}

}  // namespace detail

// Edge-list text: "n m" then m lines "u v" (0-based); '#' starts a comment.
// Multiple records may be concatenated in one stream.
class EdgeListReader {
 public:
  explicit EdgeListReader(std::istream& in) : in_(in) {}

  // nullopt at end of input; throws FormatError on a malformed record.
  std::optional<Graph> next() {
    auto tok = detail::next_token(in_);
    if (!tok) return std::nullopt;
    int n = detail::parse_count(*tok, "vertex count");
    if (n > kMaxParsedVertices) throw FormatError("edge list: vertex count exceeds supported maximum");
    auto mt = detail::next_token(in_);
    if (!mt) throw FormatError("edge list: missing edge count");
    int m = detail::parse_count(*mt, "edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      auto ut = detail::next_token(in_);
      auto vt = ut ? detail::next_token(in_) : std::nullopt;
      if (!ut || !vt) throw FormatError("edge list: truncated record");
      edges.emplace_back(detail::parse_count(*ut, "endpoint"), detail::parse_count(*vt, "endpoint"));
    }
    try {
      return Graph::from_edge_list(n, edges);
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("edge list: ") + e.what());
    }
  }

 private:
  std::istream& in_;
};

inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.q() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace superdom
