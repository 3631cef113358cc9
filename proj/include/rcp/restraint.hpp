#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcp/graph.hpp"

namespace rcp {

using Colour = std::uint32_t;
/// Sorted, duplicate-free set of positive colours.
using ColourSet = std::vector<Colour>;

/// Forbidden colour set per vertex.
class Restraint {
 public:
  Restraint() = default;
  /// Sorts and deduplicates each set. Throws std::invalid_argument on colour 0.
  explicit Restraint(std::vector<ColourSet> sets);
  Restraint(std::initializer_list<ColourSet> sets)
      : Restraint(std::vector<ColourSet>(sets)) {}

  /// All sets empty.
  static Restraint none(std::size_t n) { return Restraint(std::vector<ColourSet>(n)); }

  std::size_t size() const { return sets_.size(); }
  const ColourSet& operator[](Vertex v) const { return sets_[v]; }
  const std::vector<ColourSet>& sets() const { return sets_; }

  friend auto operator<=>(const Restraint&, const Restraint&) = default;
  friend bool operator==(const Restraint&, const Restraint&) = default;

 private:
  std::vector<ColourSet> sets_;
};

/// Canonical representative of a restraint-equivalence class: the minimum,
/// over all automorphisms, of the first-use colour renaming.
struct RestraintClass {
  Restraint canon;
  std::size_t k = 0;

  friend auto operator<=>(const RestraintClass&, const RestraintClass&) = default;
  friend bool operator==(const RestraintClass&, const RestraintClass&) = default;
};

/// Largest colour used; 0 when every set is empty.
Colour m_value(const Restraint& r);

/// |r(v)| = k for every v and every colour is at most k * n.
bool is_k_restraint(const Restraint& r, std::size_t k);

Restraint constant_restraint(const Graph& g, std::size_t k);

/// {1..k} on the side containing vertex 0, {k+1..2k} on the other.
/// Throws std::invalid_argument unless g is connected and bipartite.
Restraint alternating_restraint(const Graph& g, std::size_t k);

/// Adjacent vertices have disjoint sets.
bool is_proper(const Graph& g, const Restraint& r);

/// Rename colours 1, 2, ... in order of first appearance, scanning vertices
/// in index order and each set in ascending order.
Restraint first_use_normal_form(const Restraint& r);

/// Restraint with r'(v) = r(perm[v]).
Restraint pull_back(const Restraint& r, const Permutation& perm);

/// Canonical form given the automorphism group of the underlying graph.
Restraint canonical_restraint(const Restraint& r, std::span<const Permutation> group);

/// Throws CapError if g exceeds the automorphism cap, std::invalid_argument if
/// r.size() != g.order().
RestraintClass canonicalize(const Graph& g, const Restraint& r,
                            std::size_t automorphism_cap = kDefaultAutomorphismCap);

bool equivalent(const Graph& g, const Restraint& a, const Restraint& b,
                std::size_t automorphism_cap = kDefaultAutomorphismCap);

struct EnumerationCaps {
  std::size_t automorphism_cap = kDefaultAutomorphismCap;
  std::size_t max_order_k1 = 8;
  std::size_t max_order_k2 = 5;
  std::size_t max_order_larger_k = 4;

  std::size_t max_order(std::size_t k) const {
    return k <= 1 ? max_order_k1 : k == 2 ? max_order_k2 : max_order_larger_k;
  }
};

/// One representative per equivalence class of k-restraints on g, in
/// ascending canonical order. Throws CapError beyond the caps.
std::vector<RestraintClass> enumerate_k_restraints(const Graph& g, std::size_t k,
                                                   const EnumerationCaps& caps = {});

/// Restraint on the contracted graph: the merged vertex gets r(u) ∪ r(v),
/// every other vertex keeps its set under `relabel`.
/// Throws std::invalid_argument if `relabel` is not the map of a contraction
/// of {u, v} onto `merged`.
Restraint transport(const Restraint& r, std::span<const Vertex> relabel, Vertex merged,
                    Vertex u, Vertex v);
Restraint transport(const Restraint& r, const Contraction& c);

/// "[{1},{2},{1,3}]"; empty sets render as "{}".
std::string to_literal(const Restraint& r);

/// Accepts the literal syntax above or a JSON array of integer arrays.
/// Throws ParseError.
Restraint parse_restraint(std::string_view text);

}  // namespace rcp
