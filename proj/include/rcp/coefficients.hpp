#pragma once

#include "rcp/bigint.hpp"
#include "rcp/graph.hpp"
#include "rcp/polynomial.hpp"
#include "rcp/restraint.hpp"

namespace rcp {

// Closed forms for the top coefficients of a restrained chromatic polynomial
// written as  P(x) = sum_i (-1)^(n-i) a_i x^i.  The a_i are nonnegative.

/// a_{n-1} = m + sum |r(u)|
BigInt coeff_n1(const Graph& g, const Restraint& r);

/// a_{n-2} = C(m,2) - #triangles + sum_{i<j} |r_i||r_j| + m sum |r_i|
///           - sum_{edges} |r_i ∩ r_j|
BigInt coeff_n2(const Graph& g, const Restraint& r);

/// Term-by-term value of a_{n-3}.
struct CoefficientBreakdown {
  BigInt a0;  // C(m,3) - (m-2) #triangles - #induced C4 + 2 #K4
  BigInt a1;  // sum_{i<j<k} |r_i||r_j||r_k|
  BigInt a2;  // (m-1) sum_{i<j} |r_i||r_j|
  BigInt a3;  // sum over non-adjacent pairs of |r_i||r_j|
  BigInt a4;  // -sum_{edges ij} |r_i ∩ r_j| sum_{k≠i,j} |r_k|
  BigInt a5;  // (C(m,2) - #triangles) sum |r_i|
  BigInt a6;  // -(m-1) sum_{edges} |r_i ∩ r_j|
  BigInt a7_prime;         // sum_{edges ij} |N(i) ∩ N(j)| |r_i ∩ r_j|
  BigInt a7_double_prime;  // -sum_u sum_{v<w in N(u)} |r_v ∩ r_w|
  // The 1/2 and 1/6 weights make these individually fractional on
  // triangles; only their sum is an integer.
  BigRational a8_prime;
  BigRational a8_double_prime;
  BigInt a8;

  BigInt a7() const { return a7_prime + a7_double_prime; }
  /// a_{n-3}.
  BigInt total() const { return a0 + a1 + a2 + a3 + a4 + a5 + a6 + a7() + a8; }
};

/// Throws std::invalid_argument when n < 3, std::logic_error if A_8 fails
/// to be integral.
CoefficientBreakdown coeff_n3(const Graph& g, const Restraint& r);

/// The A_7'' term alone; defined for every n.
BigInt a7_double_prime(const Graph& g, const Restraint& r);

/// Chromatic-polynomial coefficients h_{n-2} and h_{n-3} from the census.
BigInt chromatic_h_n2(const SubgraphCensus& c);
BigInt chromatic_h_n3(const SubgraphCensus& c);

/// a_i read off a polynomial of degree n: (-1)^(n-i) times the coefficient of x^i.
BigInt unsigned_coefficient(const IntPolynomial& p, std::size_t n, std::size_t i);

}  // namespace rcp
