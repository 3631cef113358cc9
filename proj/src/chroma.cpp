#include "rcp/chroma.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rcp/errors.hpp"

namespace rcp {

namespace {

using Mask = std::uint64_t;

Mask bit(unsigned i) { return Mask{1} << i; }

// Delete bit i from m, shifting higher bits down by one.
Mask drop_bit(Mask m, unsigned i) {
  const Mask low = m & (bit(i) - 1);
  const Mask high = i + 1 < 64 ? (m >> (i + 1)) << i : 0;
  return low | high;
}

// Graph and restraint packed as masks: adjacency[v] over vertices,
// forbidden[v] over compressed colours.
struct State {
  std::vector<Mask> adjacency;
  std::vector<Mask> forbidden;

  std::size_t order() const { return adjacency.size(); }

  void remove_vertex(unsigned v) {
    adjacency.erase(adjacency.begin() + v);
    forbidden.erase(forbidden.begin() + v);
    for (Mask& m : adjacency) m = drop_bit(m & ~bit(v), v);
  }

  void delete_edge(unsigned u, unsigned v) {
    adjacency[u] &= ~bit(v);
    adjacency[v] &= ~bit(u);
  }

  // Merge v into u (u < v) and drop slot v.
  void contract_edge(unsigned u, unsigned v) {
    const Mask from_v = adjacency[v] & ~bit(u);
    for (Mask m = from_v; m; m &= m - 1) adjacency[std::countr_zero(m)] |= bit(u);
    adjacency[u] = (adjacency[u] | from_v) & ~bit(v);
    forbidden[u] |= forbidden[v];
    remove_vertex(v);
  }

  std::vector<Mask> key() const {
    std::vector<Mask> k;
    k.reserve(2 * order());
    k.insert(k.end(), adjacency.begin(), adjacency.end());
    k.insert(k.end(), forbidden.begin(), forbidden.end());
    return k;
  }
};

struct KeyHash {
  std::size_t operator()(const std::vector<Mask>& key) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ key.size();
    for (Mask m : key) {
      h ^= m + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

State pack(const Graph& g, const Restraint& r) {
  if (r.size() != g.order()) {
    throw std::invalid_argument("restraint size " + std::to_string(r.size()) +
                                " does not match graph order " + std::to_string(g.order()));
  }
  std::vector<Colour> palette;
  for (const auto& s : r.sets()) palette.insert(palette.end(), s.begin(), s.end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  if (palette.size() > 64) {
    throw CapError("restraint uses more than 64 distinct colours");
  }
  State s;
  s.adjacency.resize(g.order());
  s.forbidden.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    s.adjacency[v] = g.neighbour_mask(v);
    for (Colour c : r[v]) {
      s.forbidden[v] |= bit(static_cast<unsigned>(
          std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
    }
  }
  return s;
}

}  // namespace

struct ChromaEngine::Cache {
  std::mutex mutex;
  std::unordered_map<std::vector<Mask>, IntPolynomial, KeyHash> map;
};

class Recursion {
 public:
  Recursion(ChromaEngine& engine, std::uint64_t seed) : engine_(engine), rng_(seed) {}

  IntPolynomial run(State s) {
    // Isolated vertices split off as linear factors; an edgeless graph
    // reduces entirely to the product of (x - |r(v)|).
    auto factor = IntPolynomial::constant(1);
    for (std::size_t i = s.order(); i-- > 0;) {
      if (s.adjacency[i] == 0) {
        factor.mul_linear(BigInt(std::popcount(s.forbidden[i])));
        s.remove_vertex(static_cast<unsigned>(i));
      }
    }
    if (s.order() == 0) return factor;

    const bool memoize = engine_.options_.memoize;
    std::vector<Mask> key;
    if (memoize) {
      key = s.key();
      std::lock_guard lock(engine_.cache_->mutex);
      const auto it = engine_.cache_->map.find(key);
      if (it != engine_.cache_->map.end()) {
        ++engine_.hits_;
        return factor * it->second;
      }
    }
    ++engine_.misses_;

    const auto [u, v] = pivot(s);
    State contracted = s;
    contracted.contract_edge(u, v);
    s.delete_edge(u, v);
    IntPolynomial result = run(std::move(s));
    result -= run(std::move(contracted));

    if (memoize) {
      std::lock_guard lock(engine_.cache_->mutex);
      auto& map = engine_.cache_->map;
      if (map.size() >= engine_.options_.max_cache_entries) map.clear();
      map.try_emplace(std::move(key), result);
      const std::uint64_t size = map.size();
      std::uint64_t peak = engine_.peak_.load();
      while (size > peak && !engine_.peak_.compare_exchange_weak(peak, size)) {
      }
    }
    return factor * result;
  }

 private:
  std::pair<unsigned, unsigned> pivot(const State& s) {
    if (engine_.options_.pivot == PivotRule::smallest_edge) {
      for (unsigned u = 0; u < s.order(); ++u) {
        const Mask above = s.adjacency[u] & ~((bit(u) << 1) - 1);
        if (above) return {u, static_cast<unsigned>(std::countr_zero(above))};
      }
    } else {
      std::vector<std::pair<unsigned, unsigned>> edges;
      for (unsigned u = 0; u < s.order(); ++u) {
        for (Mask m = s.adjacency[u] & ~((bit(u) << 1) - 1); m; m &= m - 1) {
          edges.emplace_back(u, static_cast<unsigned>(std::countr_zero(m)));
        }
      }
      if (!edges.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        return edges[pick(rng_)];
      }
    }
    throw std::logic_error("pivot requested on an edgeless graph");
  }

  ChromaEngine& engine_;
  std::mt19937_64 rng_;
};

ChromaEngine::ChromaEngine(EngineOptions options)
    : options_(options), cache_(std::make_unique<Cache>()) {}

ChromaEngine::~ChromaEngine() = default;

IntPolynomial ChromaEngine::restrained_poly(const Graph& g, const Restraint& r) {
  State s = pack(g, r);
  const std::uint64_t call = calls_++;
  return Recursion(*this, options_.seed + 0x9e3779b97f4a7c15ull * call).run(std::move(s));
}

IntPolynomial ChromaEngine::chromatic_poly(const Graph& g) {
  return restrained_poly(g, Restraint::none(g.order()));
}

CacheStats ChromaEngine::stats() const {
  return CacheStats{hits_.load(), misses_.load(), peak_.load()};
}

void ChromaEngine::clear_cache() {
  std::lock_guard lock(cache_->mutex);
  cache_->map.clear();
}

IntPolynomial restrained_poly(const Graph& g, const Restraint& r) {
  ChromaEngine engine;
  return engine.restrained_poly(g, r);
}

IntPolynomial chromatic_poly(const Graph& g) {
  ChromaEngine engine;
  return engine.chromatic_poly(g);
}

namespace {

class ColouringCounter {
 public:
  ColouringCounter(const Graph& g, const Restraint& r, std::uint64_t x)
      : g_(g), r_(r), x_(x), colour_(g.order(), 0) {}

  std::uint64_t count(Vertex v = 0) {
    if (v == g_.order()) return 1;
    std::uint64_t total = 0;
    for (std::uint64_t c = 1; c <= x_; ++c) {
      if (c <= 0xFFFFFFFFu &&
          std::binary_search(r_[v].begin(), r_[v].end(), static_cast<Colour>(c))) {
        continue;
      }
      bool clash = false;
      for (Vertex w = 0; w < v && !clash; ++w) clash = g_.adjacent(v, w) && colour_[w] == c;
      if (clash) continue;
      colour_[v] = c;
      total += count(v + 1);
    }
    return total;
  }

 private:
  const Graph& g_;
  const Restraint& r_;
  std::uint64_t x_;
  std::vector<std::uint64_t> colour_;
};

bool power_within(std::uint64_t base, std::size_t exponent, std::uint64_t limit) {
  BigInt value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    value *= base;
    if (value > limit) return false;
  }
  return true;
}

}  // namespace

BigInt count_colourings(const Graph& g, const Restraint& r, std::uint64_t x,
                        const CountBudget& budget) {
  if (r.size() != g.order()) throw std::invalid_argument("restraint size does not match graph order");
  if (g.order() > budget.max_order && !power_within(x, g.order(), budget.max_assignments)) {
    throw CapError("brute-force colouring count exceeds the work budget");
  }
  return BigInt(ColouringCounter(g, r, x).count());
}

}  // namespace rcp
