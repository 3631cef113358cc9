#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rcp {

using Vertex = std::uint32_t;
using VertexMask = std::uint64_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex permutation; `perm[v]` is the image of v.
using Permutation = std::vector<Vertex>;

/// Labeled simple undirected graph on vertices 0..n-1.
///
/// Immutable once constructed. Adjacency is kept as one 64-bit mask per
/// vertex, so graphs are limited to 64 vertices.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws std::invalid_argument on loops, duplicate edges, or endpoints
  /// outside 0..n-1.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  /// Edges sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }
  VertexMask neighbour_mask(Vertex v) const { return adjacency_[v]; }
  std::vector<Vertex> neighbours(Vertex v) const;
  std::size_t degree(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexMask> adjacency_;
  std::vector<Edge> edges_;
};

struct SubgraphCensus {
  std::size_t m = 0;
  std::size_t tri = 0;
  std::size_t ind_c4 = 0;
  std::size_t k4 = 0;

  friend bool operator==(const SubgraphCensus&, const SubgraphCensus&) = default;
};

/// Result of contracting edge {u, v}.
///
/// The merged vertex occupies min(u, v); the slot max(u, v) is removed and
/// every vertex above it shifts down by one. `relabel[old]` gives the new id
/// (both endpoints map to `merged`).
struct Contraction {
  Graph graph;
  Vertex merged = 0;
  Vertex removed = 0;
  std::vector<Vertex> relabel;
};

struct Component {
  Graph graph;
  std::vector<Vertex> to_original;
};

struct Bipartition {
  std::vector<Vertex> first;   // contains vertex 0
  std::vector<Vertex> second;
};

Graph delete_edge(const Graph& g, const Edge& e);
Contraction contract_edge(const Graph& g, const Edge& e);

SubgraphCensus census(const Graph& g);

inline constexpr std::size_t kDefaultAutomorphismCap = 10;

/// Full automorphism group, sorted lexicographically (identity first).
/// Throws CapError when g.order() > cap.
std::vector<Permutation> automorphisms(const Graph& g,
                                       std::size_t cap = kDefaultAutomorphismCap);

/// Connected components ordered by their smallest original vertex.
std::vector<Component> components(const Graph& g);
bool is_connected(const Graph& g);

/// Two-colouring of a connected graph, or nullopt if it has an odd cycle.
/// Throws std::invalid_argument for disconnected input.
std::optional<Bipartition> bipartition(const Graph& g);

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabel vertices: vertex v of g becomes perm[v].
Graph permute(const Graph& g, const Permutation& perm);

}  // namespace rcp
