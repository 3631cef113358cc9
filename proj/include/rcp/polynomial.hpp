#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rcp/bigint.hpp"

namespace rcp {

/// Dense univariate polynomial; `coefficients()[i]` is the coefficient of x^i.
///
/// Always stored trimmed: the highest stored coefficient is nonzero and the
/// zero polynomial has no coefficients.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }
  static Polynomial monomial(Scalar c, std::size_t degree) {
    std::vector<Scalar> coeffs(degree + 1);
    coeffs[degree] = std::move(c);
    return Polynomial(std::move(coeffs));
  }
  /// x - a
  static Polynomial linear_root(Scalar a) { return Polynomial(std::vector<Scalar>{-a, Scalar(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Scalar> coefficients() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial& operator*=(const Scalar& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  /// Multiply in place by (x - a).
  Polynomial& mul_linear(const Scalar& a) {
    if (coeffs_.empty()) return *this;
    coeffs_.emplace_back(0);
    for (std::size_t i = coeffs_.size() - 1; i > 0; --i) coeffs_[i] = coeffs_[i - 1] - a * coeffs_[i];
    coeffs_[0] = -a * coeffs_[0];
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(Polynomial p, const Scalar& c) { return p *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;

template <class Scalar>
Polynomial<Scalar> scale(const Polynomial<Scalar>& p, const Scalar& c) {
  return p * c;
}

/// Horner evaluation.
template <class Scalar>
Scalar eval(const Polynomial<Scalar>& p, const Scalar& x) {
  Scalar acc(0);
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// q(x) = p(x - k), expanded by the binomial theorem.
template <class Scalar>
Polynomial<Scalar> shift(const Polynomial<Scalar>& p, const Scalar& k) {
  const auto c = p.coefficients();
  std::vector<Scalar> out(c.size());
  // (x - k)^i = sum_j C(i, j) x^j (-k)^(i-j)
  std::vector<Scalar> binom;
  for (std::size_t i = 0; i < c.size(); ++i) {
    binom.assign(i + 1, Scalar(0));
    binom[0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[j] = binom[j - 1] * Scalar(i - j + 1) / Scalar(j);
    Scalar power(1);  // (-k)^(i-j), built from j = i downward
    for (std::size_t j = i + 1; j-- > 0;) {
      out[j] += c[i] * binom[j] * power;
      power *= -k;
    }
  }
  return Polynomial<Scalar>(std::move(out));
}

enum class Dominance { first, second, equal };

/// Which polynomial is larger for all sufficiently large x: decided by the
/// sign of the leading coefficient of p - q.
template <class Scalar>
Dominance compare_eventually(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  const auto d = p - q;
  if (d.is_zero()) return Dominance::equal;
  return d.leading() > 0 ? Dominance::first : Dominance::second;
}

/// Strict weak ordering "p is eventually smaller than q".
template <class Scalar>
bool eventually_less(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  return compare_eventually(p, q) == Dominance::second;
}

/// S_i(a): sum over all i-subsets of the product of their entries; S_0 = 1.
template <class Scalar>
Scalar elementary_symmetric(std::span<const Scalar> a, std::size_t i) {
  if (i > a.size()) throw std::out_of_range("elementary_symmetric: index exceeds list length");
  std::vector<Scalar> e(i + 1, Scalar(0));
  e[0] = 1;
  for (const Scalar& value : a) {
    for (std::size_t j = i; j >= 1; --j) e[j] += e[j - 1] * value;
  }
  return e[i];
}

/// Product of (x - a_v) over the list.
template <class Scalar>
Polynomial<Scalar> product_of_linear(std::span<const Scalar> roots) {
  auto p = Polynomial<Scalar>::constant(Scalar(1));
  for (const Scalar& a : roots) p = p * Polynomial<Scalar>::linear_root(a);
  return p;
}

/// "[c0, c1, ..., cn]"; the zero polynomial renders as "[]".
template <class Scalar>
std::string to_coefficient_string(const Polynomial<Scalar>& p) {
  std::ostringstream out;
  out << '[';
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << c[i];
  out << ']';
  return out.str();
}

/// Descending form with explicit signs, e.g. "x^3 - 6x^2 + 11x - 6".
template <class Scalar>
std::string to_descending_string(const Polynomial<Scalar>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  const auto c = p.coefficients();
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    const Scalar magnitude = negative ? Scalar(-c[i]) : c[i];
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || magnitude != 1) out << magnitude;
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

}  // namespace rcp
