#include "rcp/restraint.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rcp/errors.hpp"

namespace rcp {

Restraint::Restraint(std::vector<ColourSet> sets) : sets_(std::move(sets)) {
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.front() == 0) {
      throw std::invalid_argument("restraint colours must be positive integers");
    }
  }
}

Colour m_value(const Restraint& r) {
  Colour m = 0;
  for (const auto& s : r.sets()) {
    if (!s.empty()) m = std::max(m, s.back());
  }
  return m;
}

bool is_k_restraint(const Restraint& r, std::size_t k) {
  const std::size_t limit = k * r.size();
  return std::all_of(r.sets().begin(), r.sets().end(), [&](const ColourSet& s) {
    return s.size() == k && (s.empty() || s.back() <= limit);
  });
}

Restraint constant_restraint(const Graph& g, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  ColourSet base(k);
  for (std::size_t i = 0; i < k; ++i) base[i] = static_cast<Colour>(i + 1);
  return Restraint(std::vector<ColourSet>(g.order(), base));
}

Restraint alternating_restraint(const Graph& g, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const auto parts = bipartition(g);
  if (!parts) throw std::invalid_argument("alternating restraint requires a bipartite graph");
  ColourSet low(k);
  ColourSet high(k);
  for (std::size_t i = 0; i < k; ++i) {
    low[i] = static_cast<Colour>(i + 1);
    high[i] = static_cast<Colour>(k + i + 1);
  }
  std::vector<ColourSet> sets(g.order());
  for (Vertex v : parts->first) sets[v] = low;
  for (Vertex v : parts->second) sets[v] = high;
  return Restraint(std::move(sets));
}

bool is_proper(const Graph& g, const Restraint& r) {
  if (r.size() != g.order()) throw std::invalid_argument("restraint size does not match graph order");
  for (const Edge& e : g.edges()) {
    const auto& a = r[e.u];
    const auto& b = r[e.v];
    std::vector<Colour> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty()) return false;
  }
  return true;
}

Restraint first_use_normal_form(const Restraint& r) {
  std::vector<std::pair<Colour, Colour>> renaming;  // (old, new)
  std::vector<ColourSet> sets;
  sets.reserve(r.size());
  for (const auto& s : r.sets()) {
    ColourSet renamed;
    for (Colour c : s) {
      auto it = std::find_if(renaming.begin(), renaming.end(),
                             [c](const auto& p) { return p.first == c; });
      if (it == renaming.end()) {
        renaming.emplace_back(c, static_cast<Colour>(renaming.size() + 1));
        it = renaming.end() - 1;
      }
      renamed.push_back(it->second);
    }
    sets.push_back(std::move(renamed));
  }
  return Restraint(std::move(sets));
}

Restraint pull_back(const Restraint& r, const Permutation& perm) {
  if (perm.size() != r.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<ColourSet> sets(r.size());
  for (Vertex v = 0; v < r.size(); ++v) sets[v] = r[perm[v]];
  return Restraint(std::move(sets));
}

namespace {

// Flat encoding of a restraint with colours compressed to 0..C-1. Each vertex
// contributes its set size followed by its colours; comparing encodings
// lexicographically orders restraints with equal set sizes exactly like
// Restraint::operator<.
struct FlatRestraint {
  std::vector<std::uint32_t> offsets;  // n + 1 entries
  std::vector<std::uint32_t> colours;  // dense ids, ascending per vertex
  std::size_t distinct = 0;

  explicit FlatRestraint(const Restraint& r) {
    std::vector<Colour> palette;
    for (const auto& s : r.sets()) palette.insert(palette.end(), s.begin(), s.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    distinct = palette.size();
    offsets.push_back(0);
    for (const auto& s : r.sets()) {
      for (Colour c : s) {
        colours.push_back(static_cast<std::uint32_t>(
            std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
      }
      offsets.push_back(static_cast<std::uint32_t>(colours.size()));
    }
  }
};

constexpr std::uint32_t kUnmapped = ~std::uint32_t{0};

}  // namespace

Restraint canonical_restraint(const Restraint& r, std::span<const Permutation> group) {
  if (group.empty()) throw std::invalid_argument("automorphism group must contain the identity");
  const FlatRestraint flat(r);
  const std::size_t n = r.size();
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> current;
  std::vector<std::uint32_t> rename(flat.distinct, kUnmapped);
  std::vector<std::uint32_t> scratch;
  for (const Permutation& perm : group) {
    std::fill(rename.begin(), rename.end(), kUnmapped);
    current.clear();
    std::uint32_t next = 0;
    // -1: already smaller than best, 0: equal prefix, 1: abandon.
    int order = best.empty() ? -1 : 0;
    for (std::size_t v = 0; v < n && order <= 0; ++v) {
      const Vertex src = perm[v];
      scratch.clear();
      for (std::uint32_t i = flat.offsets[src]; i < flat.offsets[src + 1]; ++i) {
        std::uint32_t& target = rename[flat.colours[i]];
        if (target == kUnmapped) target = next++;
        scratch.push_back(target);
      }
      std::sort(scratch.begin(), scratch.end());
      const auto emit = [&](std::uint32_t value) {
        if (order == 0) {
          const std::uint32_t ref = best[current.size()];
          if (value < ref) order = -1;
          else if (value > ref) order = 1;
        }
        current.push_back(value);
      };
      emit(static_cast<std::uint32_t>(scratch.size()));
      for (std::uint32_t c : scratch) emit(c);
    }
    if (order < 0) best = current;
  }
  std::vector<ColourSet> sets(n);
  std::size_t pos = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint32_t count = best[pos++];
    for (std::uint32_t i = 0; i < count; ++i) sets[v].push_back(best[pos++] + 1);
  }
  return Restraint(std::move(sets));
}

RestraintClass canonicalize(const Graph& g, const Restraint& r, std::size_t automorphism_cap) {
  if (r.size() != g.order()) throw std::invalid_argument("restraint size does not match graph order");
  const auto group = automorphisms(g, automorphism_cap);
  RestraintClass out;
  out.canon = canonical_restraint(r, group);
  out.k = r.size() ? r[0].size() : 0;
  return out;
}

bool equivalent(const Graph& g, const Restraint& a, const Restraint& b,
                std::size_t automorphism_cap) {
  return canonicalize(g, a, automorphism_cap).canon == canonicalize(g, b, automorphism_cap).canon;
}

namespace {

// Depth-first generation of first-use normal forms of k-restraints.
class NormalFormGenerator {
 public:
  NormalFormGenerator(std::size_t n, std::size_t k, std::span<const Permutation> group,
                      std::vector<RestraintClass>& out)
      : n_(n), k_(k), group_(group), out_(out), sets_(n) {}

  void run() { extend(0, 0); }

 private:
  void extend(std::size_t vertex, Colour used) {
    if (vertex == n_) {
      Restraint candidate(sets_);
      // Keep only forms that are their own canon: one per class.
      if (canonical_restraint(candidate, group_) == candidate) {
        out_.push_back(RestraintClass{std::move(candidate), k_});
      }
      return;
    }
    for (std::size_t fresh = 0; fresh <= k_; ++fresh) {
      const std::size_t old = k_ - fresh;
      if (old > used) continue;
      ColourSet chosen;
      choose_old(vertex, used, fresh, old, 1, chosen);
    }
  }

  void choose_old(std::size_t vertex, Colour used, std::size_t fresh, std::size_t remaining,
                  Colour from, ColourSet& chosen) {
    if (remaining == 0) {
      ColourSet s = chosen;
      for (std::size_t i = 1; i <= fresh; ++i) s.push_back(static_cast<Colour>(used + i));
      sets_[vertex] = std::move(s);
      extend(vertex + 1, static_cast<Colour>(used + fresh));
      return;
    }
    for (Colour c = from; c + remaining - 1 <= used; ++c) {
      chosen.push_back(c);
      choose_old(vertex, used, fresh, remaining - 1, c + 1, chosen);
      chosen.pop_back();
    }
  }

  std::size_t n_;
  std::size_t k_;
  std::span<const Permutation> group_;
  std::vector<RestraintClass>& out_;
  std::vector<ColourSet> sets_;
};

}  // namespace

std::vector<RestraintClass> enumerate_k_restraints(const Graph& g, std::size_t k,
                                                   const EnumerationCaps& caps) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (g.order() > caps.max_order(k)) {
    throw CapError("enumeration cap exceeded: n=" + std::to_string(g.order()) + " with k=" +
                   std::to_string(k) + " (cap " + std::to_string(caps.max_order(k)) + ")");
  }
  const auto group = automorphisms(g, caps.automorphism_cap);
  std::vector<RestraintClass> out;
  NormalFormGenerator(g.order(), k, group, out).run();
  std::sort(out.begin(), out.end());
  return out;
}

Restraint transport(const Restraint& r, std::span<const Vertex> relabel, Vertex merged, Vertex u,
                    Vertex v) {
  const std::size_t n = r.size();
  if (relabel.size() != n || n < 2 || u >= n || v >= n || u == v) {
    throw std::invalid_argument("inconsistent relabeling");
  }
  if (relabel[u] != merged || relabel[v] != merged) {
    throw std::invalid_argument("inconsistent relabeling: endpoints must map to the merged vertex");
  }
  std::vector<int> hit(n - 1, 0);
  for (Vertex w = 0; w < n; ++w) {
    if (relabel[w] >= n - 1) throw std::invalid_argument("inconsistent relabeling: id out of range");
    if (w != v) ++hit[relabel[w]];
  }
  if (std::any_of(hit.begin(), hit.end(), [](int h) { return h != 1; })) {
    throw std::invalid_argument("inconsistent relabeling: not a bijection");
  }
  std::vector<ColourSet> sets(n - 1);
  for (Vertex w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    sets[relabel[w]] = r[w];
  }
  ColourSet joined;
  std::set_union(r[u].begin(), r[u].end(), r[v].begin(), r[v].end(), std::back_inserter(joined));
  sets[merged] = std::move(joined);
  return Restraint(std::move(sets));
}

Restraint transport(const Restraint& r, const Contraction& c) {
  return transport(r, c.relabel, c.merged, c.merged, c.removed);
}

std::string to_literal(const Restraint& r) {
  std::ostringstream out;
  out << '[';
  for (std::size_t v = 0; v < r.size(); ++v) {
    if (v) out << ',';
    out << '{';
    for (std::size_t i = 0; i < r[v].size(); ++i) out << (i ? "," : "") << r[v][i];
    out << '}';
  }
  out << ']';
  return out.str();
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  Restraint parse() {
    expect('[');
    std::vector<ColourSet> sets;
    skip_space();
    if (peek() == ']') {
      ++pos_;
    } else {
      while (true) {
        sets.push_back(parse_set());
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
    }
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    try {
      return Restraint(std::move(sets));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

 private:
  ColourSet parse_set() {
    skip_space();
    const char open = peek();
    if (open != '{' && open != '[') fail("expected '{' or '['");
    ++pos_;
    const char close = open == '{' ? '}' : ']';
    ColourSet s;
    skip_space();
    if (peek() == close) {
      ++pos_;
      return s;
    }
    while (true) {
      s.push_back(parse_colour());
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(close);
      return s;
    }
  }

  Colour parse_colour() {
    skip_space();
    std::uint64_t value = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > 0xFFFFFFFFu) fail("colour too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a colour");
    if (value == 0) fail("colours must be positive");
    return static_cast<Colour>(value);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("restraint literal, position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Restraint parse_restraint(std::string_view text) { return LiteralParser(text).parse(); }

}  // namespace rcp
