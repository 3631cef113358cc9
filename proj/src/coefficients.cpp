#include "rcp/coefficients.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace rcp {

namespace {

BigInt choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

std::size_t common(const ColourSet& a, const ColourSet& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else ++count, ++i, ++j;
  }
  return count;
}

std::size_t common(const ColourSet& a, const ColourSet& b, const ColourSet& c) {
  ColourSet ab;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ab));
  return common(ab, c);
}

void check_sizes(const Graph& g, const Restraint& r) {
  if (r.size() != g.order()) throw std::invalid_argument("restraint size does not match graph order");
}

std::vector<BigInt> set_sizes(const Restraint& r) {
  std::vector<BigInt> sizes;
  for (const auto& s : r.sets()) sizes.emplace_back(s.size());
  return sizes;
}

BigInt edge_overlap(const Graph& g, const Restraint& r) {
  BigInt sum = 0;
  for (const Edge& e : g.edges()) sum += common(r[e.u], r[e.v]);
  return sum;
}

}  // namespace

BigInt coeff_n1(const Graph& g, const Restraint& r) {
  check_sizes(g, r);
  BigInt sum = g.size();
  for (const auto& s : r.sets()) sum += s.size();
  return sum;
}

BigInt coeff_n2(const Graph& g, const Restraint& r) {
  check_sizes(g, r);
  const auto sizes = set_sizes(r);
  const SubgraphCensus c = census(g);
  BigInt total_size = 0;
  for (const auto& s : sizes) total_size += s;
  return chromatic_h_n2(c) + elementary_symmetric<BigInt>(sizes, 2) +
         BigInt(c.m) * total_size - edge_overlap(g, r);
}

BigInt a7_double_prime(const Graph& g, const Restraint& r) {
  check_sizes(g, r);
  BigInt sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto nbrs = g.neighbours(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) sum += common(r[nbrs[i]], r[nbrs[j]]);
    }
  }
  return -sum;
}

CoefficientBreakdown coeff_n3(const Graph& g, const Restraint& r) {
  check_sizes(g, r);
  const std::size_t n = g.order();
  if (n < 3) throw std::invalid_argument("coefficient undefined: a_{n-3} needs n >= 3");
  const SubgraphCensus c = census(g);
  const auto sizes = set_sizes(r);
  const BigInt m(c.m);
  BigInt total_size = 0;
  for (const auto& s : sizes) total_size += s;
  const BigInt overlap = edge_overlap(g, r);

  CoefficientBreakdown b;
  b.a0 = chromatic_h_n3(c);
  b.a1 = elementary_symmetric<BigInt>(sizes, 3);
  b.a2 = (m - 1) * elementary_symmetric<BigInt>(sizes, 2);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) b.a3 += sizes[i] * sizes[j];
    }
  }
  for (const Edge& e : g.edges()) {
    b.a4 -= BigInt(common(r[e.u], r[e.v])) * (total_size - sizes[e.u] - sizes[e.v]);
  }
  b.a5 = chromatic_h_n2(c) * total_size;
  b.a6 = -(m - 1) * overlap;
  for (const Edge& e : g.edges()) {
    const VertexMask shared = g.neighbour_mask(e.u) & g.neighbour_mask(e.v);
    b.a7_prime += BigInt(std::popcount(shared)) * common(r[e.u], r[e.v]);
  }
  b.a7_double_prime = a7_double_prime(g, r);

  BigInt half_sum = 0;
  BigInt sixth_sum = 0;
  for (const Edge& e : g.edges()) {
    const VertexMask either = (g.neighbour_mask(e.u) | g.neighbour_mask(e.v)) &
                              ~((VertexMask{1} << e.u) | (VertexMask{1} << e.v));
    const VertexMask both = g.neighbour_mask(e.u) & g.neighbour_mask(e.v);
    for (Vertex k = 0; k < n; ++k) {
      const VertexMask kb = VertexMask{1} << k;
      if (!(either & kb)) continue;
      const std::size_t triple = common(r[e.u], r[e.v], r[k]);
      half_sum += triple;
      if (both & kb) sixth_sum += triple;
    }
  }
  b.a8_prime = BigRational(half_sum, 2);
  b.a8_double_prime = BigRational(sixth_sum, 6);
  const BigRational a8 = b.a8_prime + b.a8_double_prime;
  if (denominator(a8) != 1) {
    throw std::logic_error("A_8 is not integral; census or multiplicity error");
  }
  b.a8 = numerator(a8);
  return b;
}

BigInt chromatic_h_n2(const SubgraphCensus& c) { return choose(c.m, 2) - c.tri; }

BigInt chromatic_h_n3(const SubgraphCensus& c) {
  return choose(c.m, 3) - BigInt(static_cast<long long>(c.m) - 2) * c.tri - c.ind_c4 + 2 * BigInt(c.k4);
}

BigInt unsigned_coefficient(const IntPolynomial& p, std::size_t n, std::size_t i) {
  const BigInt c = p.coeff(i);
  return (n - i) % 2 == 0 ? c : BigInt(-c);
}

}  // namespace rcp
