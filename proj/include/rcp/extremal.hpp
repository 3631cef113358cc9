#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcp/bigint.hpp"
#include "rcp/chroma.hpp"
#include "rcp/graph.hpp"
#include "rcp/polynomial.hpp"
#include "rcp/restraint.hpp"

namespace rcp {

struct LeadingTerm {
  int degree = -1;
  BigInt coefficient;

  friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;
};

/// A non-winning class and the leading term of its deficit polynomial
/// (winner - loser for R_max, loser - winner for R_min). The coefficient is
/// always positive.
struct Witness {
  Restraint canon;
  LeadingTerm deficit;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// R_min(G, k) and R_max(G, k) as sets of classes (ties are kept).
struct ExtremalReport {
  std::string graph6;
  std::size_t k = 0;
  std::size_t class_count = 0;
  std::vector<RestraintClass> min_classes;
  std::vector<RestraintClass> max_classes;
  IntPolynomial min_poly;
  IntPolynomial max_poly;
  std::vector<Witness> min_witnesses;
  std::vector<Witness> max_witnesses;

  friend bool operator==(const ExtremalReport&, const ExtremalReport&) = default;
};

struct SearchOptions {
  EnumerationCaps caps;
  std::size_t workers = 1;
};

struct ClassPolynomials {
  std::vector<RestraintClass> classes;  // ascending canonical order
  std::vector<IntPolynomial> polys;     // polys[i] belongs to classes[i]
};

/// Polynomial of one representative per class. Per-class work runs on
/// `options.workers` threads sharing the engine; the result does not depend
/// on the worker count.
ClassPolynomials class_polynomials(const Graph& g, std::size_t k, ChromaEngine& engine,
                                   const SearchOptions& options = {});

/// Throws std::invalid_argument if `data` is empty.
ExtremalReport summarize(const Graph& g, std::size_t k, const ClassPolynomials& data);

ExtremalReport find_extremal(const Graph& g, std::size_t k, ChromaEngine& engine,
                             const SearchOptions& options = {});

/// Source of extremal reports for the verifiers (direct search, or a
/// results store in front of it).
using ReportProvider = std::function<ExtremalReport(const Graph&, std::size_t)>;

ReportProvider direct_provider(ChromaEngine& engine, const SearchOptions& options);

struct VerificationEntry {
  std::string graph6;
  std::size_t k = 0;
  bool skipped = false;
  bool violation = false;
  std::string message;
};

struct VerificationReport {
  std::string theorem;
  std::size_t k = 0;
  std::vector<VerificationEntry> entries;

  std::size_t violations() const;
  std::size_t skipped() const;
  std::size_t checked() const { return entries.size() - skipped(); }
};

/// Minimum side: R_min must be exactly the classes that are constant on
/// every connected component (a single class for connected graphs). For
/// connected graphs with an edge, the constant class must also never reach
/// R_max.
VerificationReport verify_min_theorem(std::span<const Graph> catalog, std::size_t k,
                                      const ReportProvider& provider,
                                      const EnumerationCaps& caps = {});

/// Every class in R_max must be a proper restraint.
VerificationReport verify_properness(std::span<const Graph> catalog, std::size_t k,
                                     const ReportProvider& provider);

/// For connected bipartite graphs, R_max must be exactly the alternating
/// class. Other graphs are skipped with a notice.
VerificationReport verify_bipartite_max(std::span<const Graph> catalog, std::size_t k,
                                        const ReportProvider& provider,
                                        const EnumerationCaps& caps = {});

struct A7Value {
  RestraintClass cls;
  BigInt a7_double_prime;
};

struct A7Report {
  std::string graph6;
  std::size_t k = 0;
  std::vector<A7Value> proper_classes;
  BigInt minimum;
  std::vector<RestraintClass> minimisers;
  std::vector<RestraintClass> max_classes;
  /// Every R_max class is proper and attains the minimum.
  bool condition_holds = false;
  /// The minimum is attained by exactly one class.
  bool unique_minimiser = false;
};

A7Report verify_a7_condition(const Graph& g, std::size_t k, const ReportProvider& provider,
                             const EnumerationCaps& caps = {});

VerificationReport verify_a7(std::span<const Graph> catalog, std::size_t k,
                             const ReportProvider& provider, const EnumerationCaps& caps = {});

/// Colour assignment for C_n read literally from the three index cases of
/// the odd-cycle pattern (vertices 1..n). A vertex may receive no colour or
/// more than one when n ≡ 1 (mod 4).
struct CyclePattern {
  std::size_t n = 0;
  std::vector<std::vector<Colour>> assigned;  // 0-based vertex -> colours

  bool well_defined() const;
  /// Throws std::logic_error unless well_defined().
  Restraint restraint() const;
};

CyclePattern odd_cycle_pattern_literal(std::size_t n);

/// Parity-consistent reading of the same pattern: vertices 1..(n-1)/2
/// alternate 1,2 and vertices (n+1)/2..n alternate 3,2. Agrees with the
/// literal reading whenever that is well defined.
Restraint odd_cycle_pattern_repaired(std::size_t n);

struct ConjectureReport {
  std::size_t n = 0;
  CyclePattern literal;
  std::optional<RestraintClass> literal_class;
  RestraintClass repaired_class;
  ExtremalReport extremal;
  std::optional<bool> winner_matches_literal;
  bool winner_matches_repaired = false;
  std::optional<RestraintClass> reference_class;
  std::optional<bool> winner_matches_reference;
  bool unique_winner = false;
};

/// Exhaustive R_max(C_n, 1) compared against the odd-cycle pattern. Reports,
/// never asserts. Throws std::invalid_argument for even n or n < 5.
ConjectureReport check_conjecture(std::size_t n, ChromaEngine& engine,
                                  const SearchOptions& options = {},
                                  std::optional<Restraint> reference = std::nullopt);

}  // namespace rcp
