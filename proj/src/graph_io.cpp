#include "idcycle/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>

#include "idcycle/error.hpp"

namespace idcycle {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

int sextet(char c) {
  int value = static_cast<unsigned char>(c) - kOffset;
  if (value < 0 || value > 63) {
    throw ParseError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                     " outside [63, 126]");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  if (line.empty()) throw ParseError("graph6: empty record");
  if (line.front() == ':' || line.front() == ';' || line.front() == '&')
    throw ParseError("graph6: sparse6/digraph6 records are not supported");

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw ParseError("graph6: truncated record");
    return sextet(line[pos++]);
  };

  std::int64_t n = 0;
  if (static_cast<unsigned char>(line[0]) != kMaxByte) {
    n = next();
  } else {
    ++pos;
    int width = 3;
    if (pos < line.size() && static_cast<unsigned char>(line[pos]) == kMaxByte) {
      ++pos;
      width = 6;
    }
    for (int i = 0; i < width; ++i) n = (n << 6) | next();
  }
  if (n < 1) throw ParseError("graph6: graph needs at least one vertex");
  if (n > (1 << 20)) throw ParseError("graph6: vertex count too large");

  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t expected_bytes = (bits + 5) / 6;
  if (static_cast<std::int64_t>(line.size() - pos) != expected_bytes) {
    throw ParseError("graph6: expected " + std::to_string(expected_bytes) +
                     " edge bytes, found " + std::to_string(line.size() - pos));
  }

  std::vector<Graph::Edge> edges;
  std::int64_t bit = 0;
  int current = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) current = next();
      if (current & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero in canonical graph6.
  if (bit % 6 != 0 && (current & ((1 << (6 - bit % 6)) - 1)) != 0)
    throw ParseError("graph6: nonzero padding bits");
  return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const std::int64_t n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kMaxByte));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(kMaxByte));
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int current = 0;
  std::int64_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) current |= 1 << (5 - bit % 6);
      if (bit % 6 == 5) {
        out.push_back(static_cast<char>(current + kOffset));
        current = 0;
      }
    }
  }
  if (bit % 6 != 0) out.push_back(static_cast<char>(current + kOffset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Graph::Edge> edges;
  int declared_n = -1;
  int max_id = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.substr(0, 2) == "n=") {
        auto digits = body.substr(2);
        int n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 1)
          throw ParseError("edge list line " + std::to_string(line_no) + ": bad vertex count");
        declared_n = n;
      }
      continue;
    }
    int ids[2];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int k = 0; k < 2; ++k) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      auto [ptr, ec] = std::from_chars(p, end, ids[k]);
      if (ec != std::errc{} || ids[k] < 0)
        throw ParseError("edge list line " + std::to_string(line_no) +
                         ": expected two non-negative integers");
      p = ptr;
    }
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end)
      throw ParseError("edge list line " + std::to_string(line_no) + ": trailing characters");
    if (ids[0] == ids[1])
      throw InvalidGraph("edge list line " + std::to_string(line_no) + ": self-loop");
    max_id = std::max({max_id, ids[0], ids[1]});
    edges.emplace_back(ids[0], ids[1]);
  }
  int n = declared_n >= 0 ? declared_n : max_id + 1;
  if (n < 1) throw ParseError("edge list: no vertices");
  if (max_id >= n)
    throw ParseError("edge list: vertex " + std::to_string(max_id) +
                     " out of range for n=" + std::to_string(n));
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph load_graph(std::istream& in, GraphFormat format) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (format == GraphFormat::EdgeList) return parse_edge_list(text);
  auto body = trim(text);
  if (body.find('\n') != std::string_view::npos)
    throw ParseError("graph6: expected a single graph, found several lines");
  return parse_graph6(body);
}

Graph load_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return load_graph(in, format);
}

GraphFormat format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  return ends_with(".g6") || ends_with(".graph6") ? GraphFormat::Graph6
                                                  : GraphFormat::EdgeList;
}

std::vector<Graph> read_graph6_catalog(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("catalog line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace idcycle
