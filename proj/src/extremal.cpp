#include "rcp/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "rcp/catalog.hpp"
#include "rcp/coefficients.hpp"
#include "rcp/graph_io.hpp"

namespace rcp {

ClassPolynomials class_polynomials(const Graph& g, std::size_t k, ChromaEngine& engine,
                                   const SearchOptions& options) {
  ClassPolynomials out;
  out.classes = enumerate_k_restraints(g, k, options.caps);
  out.polys.resize(out.classes.size());
  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, out.classes.size() + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < out.classes.size(); ++i) {
      out.polys[i] = engine.restrained_poly(g, out.classes[i].canon);
    }
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < out.classes.size(); i = next++) {
          try {
            out.polys[i] = engine.restrained_poly(g, out.classes[i].canon);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace {

LeadingTerm leading_term(const IntPolynomial& p) { return LeadingTerm{p.degree(), p.leading()}; }

}  // namespace

ExtremalReport summarize(const Graph& g, std::size_t k, const ClassPolynomials& data) {
  if (data.classes.empty()) throw std::invalid_argument("no restraint classes to compare");
  ExtremalReport report;
  report.graph6 = to_graph6(g);
  report.k = k;
  report.class_count = data.classes.size();

  const auto& polys = data.polys;
  const auto [lo, hi] = std::minmax_element(polys.begin(), polys.end(),
                                            eventually_less<BigInt>);
  report.min_poly = *lo;
  report.max_poly = *hi;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& cls = data.classes[i];
    if (polys[i] == report.min_poly) {
      report.min_classes.push_back(cls);
    } else {
      report.min_witnesses.push_back({cls.canon, leading_term(polys[i] - report.min_poly)});
    }
    if (polys[i] == report.max_poly) {
      report.max_classes.push_back(cls);
    } else {
      report.max_witnesses.push_back({cls.canon, leading_term(report.max_poly - polys[i])});
    }
  }
  return report;
}

ExtremalReport find_extremal(const Graph& g, std::size_t k, ChromaEngine& engine,
                             const SearchOptions& options) {
  return summarize(g, k, class_polynomials(g, k, engine, options));
}

ReportProvider direct_provider(ChromaEngine& engine, const SearchOptions& options) {
  return [&engine, options](const Graph& g, std::size_t k) {
    return find_extremal(g, k, engine, options);
  };
}

std::size_t VerificationReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.violation; }));
}

std::size_t VerificationReport::skipped() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.skipped; }));
}

namespace {

std::string describe(const std::vector<RestraintClass>& classes) {
  std::string out = "{";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out += (i ? ", " : "") + to_literal(classes[i].canon);
  }
  return out + "}";
}

bool contains(const std::vector<RestraintClass>& classes, const Restraint& canon) {
  return std::any_of(classes.begin(), classes.end(),
                     [&](const RestraintClass& c) { return c.canon == canon; });
}

// Classes of k-restraints that are constant on every connected component.
std::set<Restraint> componentwise_constant_classes(const Graph& g, std::size_t k,
                                                   const EnumerationCaps& caps) {
  const auto parts = components(g);
  const auto group = automorphisms(g, caps.automorphism_cap);
  EnumerationCaps quotient_caps = caps;
  quotient_caps.max_order_k1 = quotient_caps.max_order_k2 = quotient_caps.max_order_larger_k =
      parts.size();
  std::set<Restraint> out;
  for (const auto& pattern : enumerate_k_restraints(Graph(parts.size()), k, quotient_caps)) {
    std::vector<ColourSet> sets(g.order());
    for (std::size_t c = 0; c < parts.size(); ++c) {
      for (Vertex v : parts[c].to_original) sets[v] = pattern.canon[static_cast<Vertex>(c)];
    }
    out.insert(canonical_restraint(Restraint(std::move(sets)), group));
  }
  return out;
}

}  // namespace

VerificationReport verify_min_theorem(std::span<const Graph> catalog, std::size_t k,
                                      const ReportProvider& provider,
                                      const EnumerationCaps& caps) {
  VerificationReport out{"min", k, {}};
  for (const Graph& g : catalog) {
    VerificationEntry entry{to_graph6(g), k, false, false, {}};
    const ExtremalReport report = provider(g, k);
    const auto expected = componentwise_constant_classes(g, k, caps);
    std::set<Restraint> found;
    for (const auto& c : report.min_classes) found.insert(c.canon);
    if (found != expected) {
      entry.violation = true;
      entry.message = "R_min = " + describe(report.min_classes) + ", expected the " +
                      std::to_string(expected.size()) + " componentwise-constant class(es)";
    } else if (g.size() > 0 && is_connected(g) && contains(report.max_classes, *expected.begin())) {
      entry.violation = true;
      entry.message = "constant class reaches R_max";
    } else {
      entry.message = "R_min = " + describe(report.min_classes);
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

VerificationReport verify_properness(std::span<const Graph> catalog, std::size_t k,
                                     const ReportProvider& provider) {
  VerificationReport out{"proper", k, {}};
  for (const Graph& g : catalog) {
    VerificationEntry entry{to_graph6(g), k, false, false, {}};
    const ExtremalReport report = provider(g, k);
    for (const auto& c : report.max_classes) {
      if (!is_proper(g, c.canon)) {
        entry.violation = true;
        entry.message = "improper R_max class " + to_literal(c.canon);
        break;
      }
    }
    if (!entry.violation) entry.message = "R_max = " + describe(report.max_classes);
    out.entries.push_back(std::move(entry));
  }
  return out;
}

VerificationReport verify_bipartite_max(std::span<const Graph> catalog, std::size_t k,
                                        const ReportProvider& provider,
                                        const EnumerationCaps& caps) {
  VerificationReport out{"bipartite", k, {}};
  for (const Graph& g : catalog) {
    VerificationEntry entry{to_graph6(g), k, false, false, {}};
    if (!is_connected(g) || !bipartition(g)) {
      entry.skipped = true;
      entry.message = "skipped: not a connected bipartite graph";
      out.entries.push_back(std::move(entry));
      continue;
    }
    const ExtremalReport report = provider(g, k);
    const Restraint expected =
        canonicalize(g, alternating_restraint(g, k), caps.automorphism_cap).canon;
    if (report.max_classes.size() != 1 || report.max_classes.front().canon != expected) {
      entry.violation = true;
      entry.message = "R_max = " + describe(report.max_classes) + ", expected {" +
                      to_literal(expected) + "}";
    } else {
      entry.message = "R_max = " + describe(report.max_classes);
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

A7Report verify_a7_condition(const Graph& g, std::size_t k, const ReportProvider& provider,
                             const EnumerationCaps& caps) {
  A7Report out;
  out.graph6 = to_graph6(g);
  out.k = k;
  for (auto& cls : enumerate_k_restraints(g, k, caps)) {
    if (!is_proper(g, cls.canon)) continue;
    BigInt value = a7_double_prime(g, cls.canon);
    out.proper_classes.push_back({std::move(cls), std::move(value)});
  }
  if (out.proper_classes.empty()) return out;
  out.minimum = std::min_element(out.proper_classes.begin(), out.proper_classes.end(),
                                 [](const A7Value& a, const A7Value& b) {
                                   return a.a7_double_prime < b.a7_double_prime;
                                 })
                    ->a7_double_prime;
  for (const auto& v : out.proper_classes) {
    if (v.a7_double_prime == out.minimum) out.minimisers.push_back(v.cls);
  }
  out.unique_minimiser = out.minimisers.size() == 1;
  out.max_classes = provider(g, k).max_classes;
  out.condition_holds = std::all_of(out.max_classes.begin(), out.max_classes.end(),
                                    [&](const RestraintClass& c) {
                                      return is_proper(g, c.canon) && contains(out.minimisers, c.canon);
                                    });
  return out;
}

VerificationReport verify_a7(std::span<const Graph> catalog, std::size_t k,
                             const ReportProvider& provider, const EnumerationCaps& caps) {
  VerificationReport out{"a7", k, {}};
  for (const Graph& g : catalog) {
    const A7Report a7 = verify_a7_condition(g, k, provider, caps);
    VerificationEntry entry{a7.graph6, k, false, !a7.condition_holds, {}};
    entry.message = "min A7'' = " + a7.minimum.str() + " attained by " +
                    std::to_string(a7.minimisers.size()) + " class(es)" +
                    (a7.unique_minimiser ? " (unique)" : "") + "; R_max = " +
                    describe(a7.max_classes);
    out.entries.push_back(std::move(entry));
  }
  return out;
}

bool CyclePattern::well_defined() const {
  return std::all_of(assigned.begin(), assigned.end(),
                     [](const auto& colours) { return colours.size() == 1; });
}

Restraint CyclePattern::restraint() const {
  if (!well_defined()) throw std::logic_error("odd-cycle pattern is not well defined for this n");
  std::vector<ColourSet> sets;
  for (const auto& colours : assigned) sets.push_back({colours.front()});
  return Restraint(std::move(sets));
}

CyclePattern odd_cycle_pattern_literal(std::size_t n) {
  if (n % 2 == 0 || n < 5) throw std::invalid_argument("odd-cycle pattern needs odd n >= 5");
  CyclePattern p;
  p.n = n;
  p.assigned.resize(n);
  // Arithmetic progression first, first + 2, ... up to `last` inclusive.
  const auto mark = [&](std::size_t first, std::size_t last, Colour colour) {
    for (std::size_t i = first; i <= last && i <= n; i += 2) p.assigned[i - 1].push_back(colour);
  };
  mark(1, (n - 1) / 2, 1);
  mark(2, (n - 3) / 2, 2);
  mark((n + 3) / 2, n, 2);
  mark((n + 1) / 2, n - 1, 3);
  return p;
}

Restraint odd_cycle_pattern_repaired(std::size_t n) {
  if (n % 2 == 0 || n < 5) throw std::invalid_argument("odd-cycle pattern needs odd n >= 5");
  std::vector<ColourSet> sets(n);
  const std::size_t half = (n - 1) / 2;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i <= half) {
      sets[i - 1] = {i % 2 == 1 ? Colour{1} : Colour{2}};
    } else {
      sets[i - 1] = {(i - half) % 2 == 1 ? Colour{3} : Colour{2}};
    }
  }
  return Restraint(std::move(sets));
}

ConjectureReport check_conjecture(std::size_t n, ChromaEngine& engine,
                                  const SearchOptions& options,
                                  std::optional<Restraint> reference) {
  if (n % 2 == 0) throw std::invalid_argument("conjecture concerns odd cycles; n must be odd");
  if (n < 5) throw std::invalid_argument("conjecture check needs n >= 5");
  const Graph g = catalog::cycle(n);
  const std::size_t cap = options.caps.automorphism_cap;

  ConjectureReport out;
  out.n = n;
  out.literal = odd_cycle_pattern_literal(n);
  out.repaired_class = canonicalize(g, odd_cycle_pattern_repaired(n), cap);
  out.extremal = find_extremal(g, 1, engine, options);
  const auto& winners = out.extremal.max_classes;
  out.unique_winner = winners.size() == 1;
  const auto matches = [&](const RestraintClass& c) {
    return out.unique_winner && winners.front() == c;
  };
  if (out.literal.well_defined()) {
    out.literal_class = canonicalize(g, out.literal.restraint(), cap);
    out.winner_matches_literal = matches(*out.literal_class);
  }
  out.winner_matches_repaired = matches(out.repaired_class);
  if (reference) {
    out.reference_class = canonicalize(g, *reference, cap);
    out.winner_matches_reference = matches(*out.reference_class);
  }
  return out;
}

}  // namespace rcp
