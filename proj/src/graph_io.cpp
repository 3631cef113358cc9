#include "rcp/graph_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "rcp/errors.hpp"

namespace rcp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    line = trim(line);
    if (line.empty()) break;
    const auto end = line.find_first_of(" \t");
    out.push_back(line.substr(0, end));
    if (end == std::string_view::npos) break;
    line.remove_prefix(end);
  }
  return out;
}

std::size_t to_index(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto toks = tokens(line);
    if (!n) {
      if (toks.size() != 2 || toks[0] != "n") {
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'n <count>'");
      }
      n = to_index(toks[1], line_no);
      if (*n > Graph::kMaxVertices) {
        throw ParseError("vertex count " + std::to_string(*n) + " exceeds 64");
      }
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const std::size_t u = to_index(toks[0], line_no);
    const std::size_t v = to_index(toks[1], line_no);
    if (u >= *n || v >= *n) {
      throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw ParseError("missing header 'n <count>'");
  try {
    return Graph(*n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
  }
  const std::size_t n = static_cast<std::size_t>(text[0] - 63);
  if (n > kMaxGraph6Order) throw ParseError("graph6 strings with n > 62 are not supported");
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw ParseError("graph6 length mismatch: expected " + std::to_string(1 + bytes) +
                     " characters, got " + std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - 63;
      if (chunk & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((text[1 + k / 6] - 63) & (1 << (5 - k % 6))) {
      throw ParseError("graph6 padding bits must be zero");
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw std::invalid_argument("graph6 output supports n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

}  // namespace rcp
