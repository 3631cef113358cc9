#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>

#include "rcp/bigint.hpp"
#include "rcp/graph.hpp"
#include "rcp/polynomial.hpp"
#include "rcp/restraint.hpp"

namespace rcp {

enum class PivotRule {
  smallest_edge,  // lexicographically smallest edge
  random_edge,    // uniformly random edge, seeded by EngineOptions::seed
};

struct EngineOptions {
  bool memoize = true;
  PivotRule pivot = PivotRule::smallest_edge;
  std::uint64_t seed = 0;
  /// The cache is cleared whenever it reaches this many entries.
  std::size_t max_cache_entries = std::size_t{1} << 21;
};

struct CacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t peak_entries = 0;
};

/// Restrained chromatic polynomials by edge deletion-contraction:
///
///   P(G, r) = P(G - uv, r) - P(G / uv, r_uv),
///
/// where the merged vertex of G / uv is restrained by r(u) ∪ r(v), and an
/// edgeless graph contributes the product of (x - |r(v)|) over its vertices.
/// The result counts permitted x-colourings for every x >= m_value(r).
///
/// Subresults are memoised on the exact labelled (adjacency, restraint)
/// state. One engine may be shared between threads; the cache behaves as a
/// single map with atomic get-or-insert.
class ChromaEngine {
 public:
  explicit ChromaEngine(EngineOptions options = {});
  ~ChromaEngine();
  ChromaEngine(const ChromaEngine&) = delete;
  ChromaEngine& operator=(const ChromaEngine&) = delete;

  /// Throws std::invalid_argument if r.size() != g.order(), CapError if r
  /// uses more than 64 distinct colours.
  IntPolynomial restrained_poly(const Graph& g, const Restraint& r);
  IntPolynomial chromatic_poly(const Graph& g);

  CacheStats stats() const;
  void clear_cache();
  const EngineOptions& options() const { return options_; }

 private:
  struct Cache;

  EngineOptions options_;
  std::unique_ptr<Cache> cache_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
  std::atomic<std::uint64_t> peak_{0};
  std::atomic<std::uint64_t> calls_{0};

  friend class Recursion;
};

/// Single-use engine with default options.
IntPolynomial restrained_poly(const Graph& g, const Restraint& r);
IntPolynomial chromatic_poly(const Graph& g);

struct CountBudget {
  std::size_t max_order = 8;
  /// Alternative allowance for larger graphs: x^n must not exceed this.
  std::uint64_t max_assignments = 1'000'000'000;
};

/// Exact number of proper colourings with colours {1..x} that avoid r(v) at
/// every vertex, by backtracking. Valid for every x, including x < m_value(r).
/// Throws CapError when n > budget.max_order and x^n > budget.max_assignments.
BigInt count_colourings(const Graph& g, const Restraint& r, std::uint64_t x,
                        const CountBudget& budget = {});

}  // namespace rcp
