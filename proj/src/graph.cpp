#include "rcp/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rcp/errors.hpp"

namespace rcp {

namespace {

VertexMask bit(Vertex v) { return VertexMask{1} << v; }

void check_order(std::size_t n) {
  if (n > Graph::kMaxVertices) {
    throw std::invalid_argument("graph has " + std::to_string(n) +
                                " vertices; at most 64 are supported");
  }
}

}  // namespace

Graph::Graph(std::size_t n) : adjacency_((check_order(n), n), 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                  " out of range");
    }
    if (adjacency_[e.u] & bit(e.v)) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    }
    adjacency_[e.u] |= bit(e.v);
    adjacency_[e.v] |= bit(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, [&] {
        std::vector<Edge> list;
        for (auto [a, b] : edges) list.emplace_back(a, b);
        return list;
      }()) {}

bool Graph::adjacent(Vertex a, Vertex b) const {
  return a < order() && b < order() && (adjacency_[a] & bit(b)) != 0;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  for (VertexMask m = adjacency_[v]; m; m &= m - 1) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  }
  return out;
}

std::size_t Graph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::popcount(adjacency_[v]));
}

Graph delete_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw std::invalid_argument("edge not in graph");
  std::vector<Edge> rest;
  rest.reserve(g.size() - 1);
  for (const Edge& f : g.edges()) {
    if (f != e) rest.push_back(f);
  }
  return Graph(g.order(), rest);
}

Contraction contract_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw std::invalid_argument("edge not in graph");
  const std::size_t n = g.order();
  Contraction out;
  out.merged = e.u;
  out.removed = e.v;
  out.relabel.resize(n);
  for (Vertex w = 0; w < n; ++w) {
    out.relabel[w] = w < e.v ? w : (w == e.v ? e.u : w - 1);
  }
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f == e) continue;
    Edge mapped(out.relabel[f.u], out.relabel[f.v]);
    edges.push_back(mapped);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = Graph(n - 1, edges);
  return out;
}

SubgraphCensus census(const Graph& g) {
  SubgraphCensus c;
  c.m = g.size();
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex d = b + 1; d < n; ++d) {
        if (g.adjacent(a, b) && g.adjacent(b, d) && g.adjacent(a, d)) ++c.tri;
      }
    }
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex d = b + 1; d < n; ++d) {
        for (Vertex f = d + 1; f < n; ++f) {
          const VertexMask sub = bit(a) | bit(b) | bit(d) | bit(f);
          int edges = 0;
          bool all_degree_two = true;
          for (Vertex v : {a, b, d, f}) {
            const int deg = std::popcount(g.neighbour_mask(v) & sub);
            edges += deg;
            all_degree_two = all_degree_two && deg == 2;
          }
          edges /= 2;
          if (edges == 6) ++c.k4;
          if (edges == 4 && all_degree_two) ++c.ind_c4;
        }
      }
    }
  }
  return c;
}

namespace {

void extend_automorphism(const Graph& g, Permutation& perm, VertexMask used,
                         Vertex next, std::vector<Permutation>& out) {
  const auto n = static_cast<Vertex>(g.order());
  if (next == n) {
    out.push_back(perm);
    return;
  }
  for (Vertex image = 0; image < n; ++image) {
    if (used & bit(image)) continue;
    if (g.degree(image) != g.degree(next)) continue;
    bool consistent = true;
    for (Vertex prev = 0; prev < next && consistent; ++prev) {
      consistent = g.adjacent(next, prev) == g.adjacent(image, perm[prev]);
    }
    if (!consistent) continue;
    perm[next] = image;
    extend_automorphism(g, perm, used | bit(image), next + 1, out);
  }
}

}  // namespace

std::vector<Permutation> automorphisms(const Graph& g, std::size_t cap) {
  if (g.order() > cap) {
    throw CapError("graph too large for automorphism enumeration (n=" +
                   std::to_string(g.order()) + ", cap=" + std::to_string(cap) + ")");
  }
  std::vector<Permutation> out;
  Permutation perm(g.order());
  extend_automorphism(g, perm, 0, 0, out);
  return out;
}

std::vector<Component> components(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<int> label(n, -1);
  std::vector<Component> out;
  for (Vertex start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    VertexMask seen = bit(start);
    VertexMask frontier = seen;
    while (frontier) {
      VertexMask grown = 0;
      for (VertexMask m = frontier; m; m &= m - 1) {
        grown |= g.neighbour_mask(static_cast<Vertex>(std::countr_zero(m)));
      }
      frontier = grown & ~seen;
      seen |= grown;
    }
    Component comp;
    std::vector<Vertex> local(n, 0);
    for (VertexMask m = seen; m; m &= m - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(m));
      label[v] = id;
      local[v] = static_cast<Vertex>(comp.to_original.size());
      comp.to_original.push_back(v);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      if (label[e.u] == id) edges.emplace_back(local[e.u], local[e.v]);
    }
    comp.graph = Graph(comp.to_original.size(), edges);
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("bipartition requires a connected graph");
  }
  const auto n = static_cast<Vertex>(g.order());
  Bipartition parts;
  if (n == 0) return parts;
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue{0};
  side[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbours(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        return std::nullopt;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    (side[v] == 0 ? parts.first : parts.second).push_back(v);
  }
  return parts;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.order() + b.order(), edges);
}

Graph permute(const Graph& g, const Permutation& perm) {
  if (perm.size() != g.order()) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), edges);
}

}  // namespace rcp
