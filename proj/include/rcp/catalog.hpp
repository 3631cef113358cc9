#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcp/graph.hpp"

namespace rcp::catalog {

Graph empty(std::size_t n);
Graph path(std::size_t n);
/// Cycle 0-1-...-(n-1)-0; n >= 3.
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Star with centre 0 and n-1 leaves.
Graph star(std::size_t n);

/// Family shorthand: "E<n>" empty, "P<n>" path, "C<n>" cycle, "K<n>" complete,
/// "K<a>,<b>" complete bipartite, "S<n>" star. Returns nullopt if `name` is
/// not of that form.
std::optional<Graph> by_name(std::string_view name);

/// Canonical labelled form: the lexicographically largest adjacency
/// bitstring over all relabellings. Two graphs are isomorphic iff their
/// canonical forms are equal. Intended for n <= 7.
Graph canonical_form(const Graph& g);

/// One representative (in canonical form) of every isomorphism class of
/// connected graphs on exactly n vertices, n <= 7; ordered by edge count,
/// then graph6.
std::vector<Graph> connected_graphs(std::size_t n);

/// connected_graphs(1) .. connected_graphs(n_max) concatenated.
std::vector<Graph> connected_graphs_up_to(std::size_t n_max);

/// One graph6 string per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

}  // namespace rcp::catalog
