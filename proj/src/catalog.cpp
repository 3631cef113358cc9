#include "rcp/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rcp/graph_io.hpp"

namespace rcp::catalog {

Graph empty(std::size_t n) { return Graph(n); }

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, static_cast<Vertex>(a + j));
  }
  return Graph(a + b, edges);
}

Graph star(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

namespace {

std::optional<std::size_t> number(std::string_view s) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Graph> by_name(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  const char family = name.front();
  const std::string_view rest = name.substr(1);
  if (family == 'K') {
    if (const auto comma = rest.find(','); comma != std::string_view::npos) {
      const auto a = number(rest.substr(0, comma));
      const auto b = number(rest.substr(comma + 1));
      if (!a || !b || *a + *b > Graph::kMaxVertices) return std::nullopt;
      return complete_bipartite(*a, *b);
    }
  }
  const auto n = number(rest);
  if (!n || *n > Graph::kMaxVertices) return std::nullopt;
  switch (family) {
    case 'E': return empty(*n);
    case 'P': return path(*n);
    case 'C': return *n >= 3 ? std::optional<Graph>(cycle(*n)) : std::nullopt;
    case 'K': return complete(*n);
    case 'S': return *n >= 1 ? std::optional<Graph>(star(*n)) : std::nullopt;
    default: return std::nullopt;
  }
}

Graph canonical_form(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  if (n > 7) throw std::invalid_argument("canonical_form supports n <= 7");
  Permutation order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::uint64_t best_key = 0;
  Permutation best = order;
  do {
    // Vertex i of the relabelled graph is vertex order[i] of g.
    std::uint64_t key = 0;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        key = (key << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
      }
    }
    if (key > best_key) {
      best_key = key;
      best = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  Permutation inverse(n);
  for (Vertex i = 0; i < n; ++i) inverse[best[i]] = i;
  return permute(g, inverse);
}

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n > 7) throw std::invalid_argument("connected_graphs supports n <= 7");
  // Grow isomorphism classes one edge at a time.
  std::set<std::string> layer{to_graph6(Graph(n))};
  std::vector<Graph> out;
  const std::size_t max_edges = n * (n - (n ? 1 : 0)) / 2;
  for (std::size_t m = 0; m <= max_edges; ++m) {
    std::set<std::string> next;
    for (const std::string& code : layer) {
      const Graph g = parse_graph6(code);
      if (is_connected(g)) out.push_back(g);
      if (m == max_edges) continue;
      for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
          if (g.adjacent(i, j)) continue;
          std::vector<Edge> edges = g.edges();
          edges.emplace_back(i, j);
          next.insert(to_graph6(canonical_form(Graph(n, edges))));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<Graph> connected_graphs_up_to(std::size_t n_max) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto layer = connected_graphs(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace rcp::catalog
