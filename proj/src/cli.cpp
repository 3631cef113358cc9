#include "rcp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "rcp/catalog.hpp"
#include "rcp/chroma.hpp"
#include "rcp/coefficients.hpp"
#include "rcp/errors.hpp"
#include "rcp/extremal.hpp"
#include "rcp/graph_io.hpp"
#include "rcp/json_io.hpp"
#include "rcp/report_store.hpp"

namespace rcp::cli {

namespace {

using nlohmann::json;

enum class Command { poly, count, coeffs, classes, extremal, verify, conjecture };

struct RunConfig {
  Command command = Command::poly;
  std::string graph_source;
  std::string format = "auto";
  std::string restraint_source;
  std::size_t k = 1;
  std::optional<std::uint64_t> x;
  bool json_output = false;
  std::size_t workers = 1;
  std::string results_dir;
  std::size_t n_max = 5;
  std::string theorem;
  std::string catalog_path;
  std::size_t cycle_n = 0;
  bool no_cache = false;
  bool stats = false;
  EnumerationCaps caps;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool is_file(const std::string& source) {
  std::error_code ec;
  return !source.empty() && std::filesystem::is_regular_file(source, ec);
}

std::string first_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  throw ParseError("graph6 file is empty");
}

Graph load_graph(const RunConfig& cfg) {
  const std::string& src = cfg.graph_source;
  std::string format = cfg.format;
  if (format == "auto") {
    if (is_file(src)) {
      format = std::filesystem::path(src).extension() == ".g6" ? "graph6" : "edgelist";
    } else if (catalog::by_name(src)) {
      format = "name";
    } else if (src.find(';') != std::string::npos || src.starts_with("n ")) {
      format = "edgelist";
    } else {
      format = "graph6";
    }
  }
  if (format == "name") {
    if (auto g = catalog::by_name(src)) return *g;
    throw ParseError("unknown graph name '" + src + "'");
  }
  if (format == "edgelist") {
    if (is_file(src)) return parse_edge_list(read_file(src));
    std::string text = src;
    std::replace(text.begin(), text.end(), ';', '\n');
    return parse_edge_list(text);
  }
  if (format == "graph6") return parse_graph6(is_file(src) ? first_line(read_file(src)) : src);
  throw ParseError("unknown graph format '" + format + "'");
}

Restraint load_restraint(const RunConfig& cfg, const Graph& g) {
  if (cfg.restraint_source.empty()) return Restraint::none(g.order());
  const std::string text =
      is_file(cfg.restraint_source) ? read_file(cfg.restraint_source) : cfg.restraint_source;
  Restraint r = parse_restraint(text);
  if (r.size() != g.order()) {
    throw std::invalid_argument("restraint has " + std::to_string(r.size()) +
                                " sets but the graph has " + std::to_string(g.order()) +
                                " vertices");
  }
  return r;
}

std::string describe_graph(const Graph& g) {
  return to_graph6(g) + " (n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
}

json graph_json(const Graph& g) {
  return json{{"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}};
}

json stats_json(const CacheStats& s) {
  return json{{"hits", s.hits}, {"misses", s.misses}, {"peak_entries", s.peak_entries}};
}

void print_stats(std::ostream& out, const CacheStats& s) {
  out << "cache: hits=" << s.hits << " misses=" << s.misses << " peak_entries=" << s.peak_entries
      << '\n';
}

EngineOptions engine_options(const RunConfig& cfg) {
  EngineOptions o;
  o.memoize = !cfg.no_cache;
  return o;
}

SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions o;
  o.caps = cfg.caps;
  o.workers = cfg.workers;
  return o;
}

std::string term_string(const LeadingTerm& t) {
  return to_descending_string(IntPolynomial::monomial(t.coefficient, static_cast<std::size_t>(t.degree)));
}

int cmd_poly(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const Restraint r = load_restraint(cfg, g);
  ChromaEngine engine(engine_options(cfg));
  const IntPolynomial p = engine.restrained_poly(g, r);
  const Colour m = m_value(r);
  if (cfg.json_output) {
    json j{{"command", "poly"},
           {"graph", graph_json(g)},
           {"restraint", restraint_to_json(r)},
           {"m_value", m},
           {"polynomial", polynomial_to_json(p)},
           {"rendered", to_descending_string(p)}};
    if (cfg.x) {
      j["evaluation"] = {{"x", *cfg.x},
                         {"value", eval(p, BigInt(*cfg.x)).str()},
                         {"valid", *cfg.x >= m}};
    }
    if (cfg.stats) j["cache"] = stats_json(engine.stats());
    out << j.dump() << '\n';
    return kOk;
  }
  out << "graph: " << describe_graph(g) << '\n';
  out << "restraint: " << to_literal(r) << '\n';
  out << "polynomial: " << to_descending_string(p) << '\n';
  out << "coefficients: " << to_coefficient_string(p) << '\n';
  if (cfg.x) {
    out << "value at x=" << *cfg.x << ": " << eval(p, BigInt(*cfg.x)) << '\n';
    if (*cfg.x < m) {
      out << "note: x < M = " << m
          << "; the polynomial counts colourings only for x >= M (use 'count' for exact values)\n";
    }
  }
  if (cfg.stats) print_stats(out, engine.stats());
  return kOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const Restraint r = load_restraint(cfg, g);
  if (!cfg.x) throw std::invalid_argument("count requires --x");
  const BigInt count = count_colourings(g, r, *cfg.x);
  if (cfg.json_output) {
    out << json{{"command", "count"},
                {"graph", graph_json(g)},
                {"restraint", restraint_to_json(r)},
                {"x", *cfg.x},
                {"count", count.str()}}
               .dump()
        << '\n';
    return kOk;
  }
  out << "graph: " << describe_graph(g) << '\n';
  out << "restraint: " << to_literal(r) << '\n';
  out << "permitted colourings with x=" << *cfg.x << ": " << count << '\n';
  return kOk;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const Restraint r = load_restraint(cfg, g);
  const std::size_t n = g.order();
  const IntPolynomial p = restrained_poly(g, r);
  const BigInt n1 = coeff_n1(g, r);
  const BigInt n2 = n >= 2 ? coeff_n2(g, r) : BigInt(0);
  std::optional<CoefficientBreakdown> n3;
  if (n >= 3) n3 = coeff_n3(g, r);

  const auto extracted = [&](std::size_t drop) {
    return n >= drop ? unsigned_coefficient(p, n, n - drop) : BigInt(0);
  };
  const bool match = (n < 1 || extracted(1) == n1) && (n < 2 || extracted(2) == n2) &&
                     (!n3 || extracted(3) == n3->total());

  if (cfg.json_output) {
    json j{{"command", "coeffs"},
           {"graph", graph_json(g)},
           {"restraint", restraint_to_json(r)},
           {"a_n_1", n1.str()},
           {"polynomial", polynomial_to_json(p)},
           {"matches_polynomial", match}};
    if (n >= 2) j["a_n_2"] = n2.str();
    if (n3) {
      j["a_n_3"] = n3->total().str();
      j["terms"] = {{"A0", n3->a0.str()},
                    {"A1", n3->a1.str()},
                    {"A2", n3->a2.str()},
                    {"A3", n3->a3.str()},
                    {"A4", n3->a4.str()},
                    {"A5", n3->a5.str()},
                    {"A6", n3->a6.str()},
                    {"A7'", n3->a7_prime.str()},
                    {"A7''", n3->a7_double_prime.str()},
                    {"A8'", n3->a8_prime.str()},
                    {"A8''", n3->a8_double_prime.str()},
                    {"A8", n3->a8.str()}};
    }
    out << j.dump() << '\n';
    return kOk;
  }
  out << "graph: " << describe_graph(g) << '\n';
  out << "restraint: " << to_literal(r) << '\n';
  out << "a_{n-1} = " << n1 << '\n';
  if (n >= 2) out << "a_{n-2} = " << n2 << '\n';
  if (n3) {
    out << "a_{n-3} = " << n3->total() << '\n';
    out << "  A0=" << n3->a0 << " A1=" << n3->a1 << " A2=" << n3->a2 << " A3=" << n3->a3
        << " A4=" << n3->a4 << " A5=" << n3->a5 << " A6=" << n3->a6 << '\n';
    out << "  A7'=" << n3->a7_prime << " A7''=" << n3->a7_double_prime << " A8'=" << n3->a8_prime
        << " A8''=" << n3->a8_double_prime << " A8=" << n3->a8 << '\n';
  }
  out << "polynomial: " << to_descending_string(p) << '\n';
  out << "closed forms match polynomial: " << (match ? "yes" : "NO") << '\n';
  return kOk;
}

int cmd_classes(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const auto classes = enumerate_k_restraints(g, cfg.k, cfg.caps);
  if (cfg.json_output) {
    json list = json::array();
    for (const auto& c : classes) {
      list.push_back({{"canon", restraint_to_json(c.canon)},
                      {"literal", to_literal(c.canon)},
                      {"proper", is_proper(g, c.canon)}});
    }
    out << json{{"command", "classes"},
                {"graph", graph_json(g)},
                {"k", cfg.k},
                {"class_count", classes.size()},
                {"classes", list}}
               .dump()
        << '\n';
    return kOk;
  }
  out << "graph: " << describe_graph(g) << ", k=" << cfg.k << '\n';
  out << classes.size() << " classes\n";
  for (const auto& c : classes) {
    out << "  " << to_literal(c.canon) << (is_proper(g, c.canon) ? "  proper" : "") << '\n';
  }
  return kOk;
}

void print_report(std::ostream& out, const ExtremalReport& r) {
  out << "classes: " << r.class_count << '\n';
  out << "R_min (" << r.min_classes.size() << "): " << to_descending_string(r.min_poly) << '\n';
  for (const auto& c : r.min_classes) out << "  " << to_literal(c.canon) << '\n';
  out << "R_max (" << r.max_classes.size() << "): " << to_descending_string(r.max_poly) << '\n';
  for (const auto& c : r.max_classes) out << "  " << to_literal(c.canon) << '\n';
  out << "R_max deficits (leading term of winner - class):\n";
  for (const auto& w : r.max_witnesses) {
    out << "  " << to_literal(w.canon) << "  " << term_string(w.deficit) << '\n';
  }
}

ReportProvider make_provider(const RunConfig& cfg, ChromaEngine& engine,
                             std::unique_ptr<ResultStore>& store) {
  ReportProvider direct = direct_provider(engine, search_options(cfg));
  if (cfg.results_dir.empty()) return direct;
  store = std::make_unique<ResultStore>(cfg.results_dir);
  return stored_provider(*store, std::move(direct));
}

int cmd_extremal(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  ChromaEngine engine(engine_options(cfg));
  std::unique_ptr<ResultStore> store;
  const ExtremalReport report = make_provider(cfg, engine, store)(g, cfg.k);
  if (cfg.json_output) {
    json j = report_to_json(report);
    j["command"] = "extremal";
    if (cfg.stats) j["cache"] = stats_json(engine.stats());
    out << j.dump() << '\n';
    return kOk;
  }
  out << "graph: " << describe_graph(g) << ", k=" << cfg.k << '\n';
  print_report(out, report);
  if (cfg.stats) print_stats(out, engine.stats());
  return kOk;
}

std::vector<Graph> verification_catalog(const RunConfig& cfg) {
  if (!cfg.catalog_path.empty()) return catalog::parse_graph6_lines(read_file(cfg.catalog_path));
  if (!cfg.graph_source.empty()) return {load_graph(cfg)};
  if (cfg.n_max > 7) throw CapError("--n-max is limited to 7 for the built-in catalog");
  return catalog::connected_graphs_up_to(cfg.n_max);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto graphs = verification_catalog(cfg);
  ChromaEngine engine(engine_options(cfg));
  std::unique_ptr<ResultStore> store;
  const ReportProvider provider = make_provider(cfg, engine, store);
  VerificationReport report;
  if (cfg.theorem == "min") {
    report = verify_min_theorem(graphs, cfg.k, provider, cfg.caps);
  } else if (cfg.theorem == "proper") {
    report = verify_properness(graphs, cfg.k, provider);
  } else if (cfg.theorem == "bipartite") {
    report = verify_bipartite_max(graphs, cfg.k, provider, cfg.caps);
  } else {
    report = verify_a7(graphs, cfg.k, provider, cfg.caps);
  }
  if (cfg.json_output) {
    json entries = json::array();
    for (const auto& e : report.entries) {
      entries.push_back({{"graph6", e.graph6},
                         {"k", e.k},
                         {"skipped", e.skipped},
                         {"violation", e.violation},
                         {"message", e.message}});
    }
    out << json{{"command", "verify"},
                {"theorem", report.theorem},
                {"k", report.k},
                {"checked", report.checked()},
                {"skipped", report.skipped()},
                {"violations", report.violations()},
                {"entries", entries}}
               .dump()
        << '\n';
  } else {
    for (const auto& e : report.entries) {
      out << (e.skipped ? "skip " : e.violation ? "FAIL " : "ok   ") << e.graph6 << "  k=" << e.k
          << "  " << e.message << '\n';
    }
    out << "theorem " << report.theorem << ", k=" << report.k << ": " << report.checked()
        << " checked, " << report.skipped() << " skipped, " << report.violations()
        << " violations\n";
  }
  return report.violations() ? kViolation : kOk;
}

int cmd_conjecture(const RunConfig& cfg, std::ostream& out) {
  std::optional<Restraint> reference;
  if (!cfg.restraint_source.empty()) {
    reference = parse_restraint(is_file(cfg.restraint_source) ? read_file(cfg.restraint_source)
                                                              : cfg.restraint_source);
  } else if (cfg.cycle_n == 7) {
    reference = Restraint{{1}, {2}, {1}, {2}, {3}, {1}, {3}};
  }
  ChromaEngine engine(engine_options(cfg));
  const ConjectureReport r = check_conjecture(cfg.cycle_n, engine, search_options(cfg), reference);

  json literal = json::array();
  for (const auto& colours : r.literal.assigned) literal.push_back(colours);
  const auto opt_bool = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  if (cfg.json_output) {
    json j{{"command", "conjecture"},
           {"n", r.n},
           {"pattern_literal", literal},
           {"pattern_well_defined", r.literal.well_defined()},
           {"pattern_repaired", restraint_to_json(r.repaired_class.canon)},
           {"winner_matches_literal", opt_bool(r.winner_matches_literal)},
           {"winner_matches_repaired", r.winner_matches_repaired},
           {"winner_matches_reference", opt_bool(r.winner_matches_reference)},
           {"unique_winner", r.unique_winner},
           {"report", report_to_json(r.extremal)}};
    if (r.literal_class) j["pattern_literal_class"] = restraint_to_json(r.literal_class->canon);
    if (r.reference_class) j["reference_class"] = restraint_to_json(r.reference_class->canon);
    out << j.dump() << '\n';
    return kOk;
  }
  const auto yes_no = [](const std::optional<bool>& b) {
    return b ? (*b ? "yes" : "no") : "n/a";
  };
  out << "cycle C" << r.n << ", k=1\n";
  out << "pattern (literal): ";
  for (std::size_t v = 0; v < r.literal.assigned.size(); ++v) {
    const auto& colours = r.literal.assigned[v];
    out << (v ? " " : "");
    if (colours.empty()) out << '?';
    for (std::size_t i = 0; i < colours.size(); ++i) out << (i ? "/" : "") << colours[i];
  }
  out << (r.literal.well_defined() ? "" : "  (not well defined for this n)") << '\n';
  out << "pattern (parity-consistent) class: " << to_literal(r.repaired_class.canon) << '\n';
  if (r.reference_class) out << "reference class: " << to_literal(r.reference_class->canon) << '\n';
  print_report(out, r.extremal);
  out << "unique winner: " << (r.unique_winner ? "yes" : "no") << '\n';
  out << "winner matches literal pattern: " << yes_no(r.winner_matches_literal) << '\n';
  out << "winner matches parity-consistent pattern: " << (r.winner_matches_repaired ? "yes" : "no")
      << '\n';
  out << "winner matches reference: " << yes_no(r.winner_matches_reference) << '\n';
  return kOk;
}

void add_graph_options(CLI::App* sub, RunConfig& cfg, bool required) {
  auto* opt = sub->add_option("--graph", cfg.graph_source,
                              "graph file or inline value (graph6, edge list with ';', or a "
                              "name such as C7, P4, K3, K2,3, S4, E3)");
  if (required) opt->required();
  sub->add_option("--format", cfg.format, "graph format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6", "name"}));
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_flag("--json", cfg.json_output, "emit a single JSON object");
}

void add_search_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--k", cfg.k, "restraint size")->check(CLI::PositiveNumber);
  sub->add_option("--workers", cfg.workers, "worker threads for per-class work")
      ->check(CLI::PositiveNumber);
  sub->add_option("--results-dir", cfg.results_dir, "resumable store for extremal reports");
  sub->add_option("--aut-cap", cfg.caps.automorphism_cap, "automorphism enumeration cap");
  sub->add_option("--enum-cap-k1", cfg.caps.max_order_k1, "largest n enumerated for k=1");
  sub->add_option("--enum-cap-k2", cfg.caps.max_order_k2, "largest n enumerated for k=2");
  sub->add_option("--enum-cap", cfg.caps.max_order_larger_k, "largest n enumerated for k>=3");
}

void add_engine_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_flag("--no-cache", cfg.no_cache, "disable memoisation");
  sub->add_flag("--stats", cfg.stats, "print memo-cache statistics");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Restrained chromatic polynomials and extremal restraints"};
  app.require_subcommand(1);

  auto* poly = app.add_subcommand("poly", "restrained chromatic polynomial");
  add_graph_options(poly, cfg, true);
  poly->add_option("--restraint", cfg.restraint_source, "restraint literal or file");
  poly->add_option("--x", cfg.x, "evaluate at x");
  add_common_options(poly, cfg);
  add_engine_options(poly, cfg);

  auto* count = app.add_subcommand("count", "brute-force count of permitted colourings");
  add_graph_options(count, cfg, true);
  count->add_option("--restraint", cfg.restraint_source, "restraint literal or file");
  count->add_option("--x", cfg.x, "number of colours")->required();
  add_common_options(count, cfg);

  auto* coeffs = app.add_subcommand("coeffs", "closed-form top coefficients");
  add_graph_options(coeffs, cfg, true);
  coeffs->add_option("--restraint", cfg.restraint_source, "restraint literal or file");
  add_common_options(coeffs, cfg);

  auto* classes = app.add_subcommand("classes", "k-restraints up to equivalence");
  add_graph_options(classes, cfg, true);
  add_search_options(classes, cfg);
  add_common_options(classes, cfg);

  auto* extremal = app.add_subcommand("extremal", "R_min and R_max by exhaustive search");
  add_graph_options(extremal, cfg, true);
  add_search_options(extremal, cfg);
  add_common_options(extremal, cfg);
  add_engine_options(extremal, cfg);

  auto* verify = app.add_subcommand("verify", "check an extremal theorem over a graph catalog");
  add_graph_options(verify, cfg, false);
  verify->add_option("--theorem", cfg.theorem, "theorem to check")
      ->required()
      ->check(CLI::IsMember({"min", "proper", "bipartite", "a7"}));
  verify->add_option("--n-max", cfg.n_max, "all connected graphs with 1..n-max vertices");
  verify->add_option("--catalog", cfg.catalog_path, "graph6 file, one graph per line");
  add_search_options(verify, cfg);
  add_common_options(verify, cfg);
  add_engine_options(verify, cfg);

  auto* conjecture = app.add_subcommand("conjecture", "odd-cycle R_max pattern check (k=1)");
  conjecture->add_option("--n", cfg.cycle_n, "odd cycle length")->required();
  conjecture->add_option("--restraint", cfg.restraint_source,
                         "reference restraint to compare against (default for n=7: "
                         "[{1},{2},{1},{2},{3},{1},{3}])");
  conjecture->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  conjecture->add_option("--aut-cap", cfg.caps.automorphism_cap, "automorphism enumeration cap");
  conjecture->add_option("--enum-cap-k1", cfg.caps.max_order_k1, "largest n enumerated for k=1");
  add_common_options(conjecture, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (poly->parsed()) return cmd_poly(cfg, out);
    if (count->parsed()) return cmd_count(cfg, out);
    if (coeffs->parsed()) return cmd_coeffs(cfg, out);
    if (classes->parsed()) return cmd_classes(cfg, out);
    if (extremal->parsed()) return cmd_extremal(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (conjecture->parsed()) return cmd_conjecture(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapError& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace rcp::cli
