#pragma once

#include "hyperobs/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hyperobs {

/// Power product of state variables, kept as (0-based variable, exponent)
/// pairs sorted by variable with no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<int, int>;

  Monomial() = default;
  static Monomial variable(int var, int power = 1);
  /// Throws std::invalid_argument for unsorted, repeated or non-positive entries.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  int degree() const { return degree_; }
  int exponent(int var) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// This monomial with the exponent of `var` lowered by one; `var` must occur.
  Monomial lowered(int var) const;

  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

/// Graded lexicographic order, x1 > x2 > ... within a degree.
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are stored in decreasing grlex order with nonzero coefficients, so
/// two polynomials are equal exactly when their term lists are equal.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& constant);
  Polynomial(const Monomial& m, const Rational& coeff);
  static Polynomial variable(int var);
  /// Merges duplicate monomials, drops zero coefficients and sorts.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Maximum total degree; 0 for constants and for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous(int degree) const;
  /// Largest variable index occurring plus one.
  int variable_bound() const;

  Polynomial derivative(int var) const;
  std::vector<Polynomial> gradient(int n) const;

  Rational evaluate(std::span<const Rational> x) const;
  double evaluate(std::span<const double> x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial& other) const;

  /// Human-readable form with 1-based names, e.g. "x1*x3^2 + 1/2*x2".
  std::string to_string() const;

 private:
  friend class PolynomialBuilder;
  std::vector<Term> terms_;
};

/// Hash-map accumulator for building large polynomials term by term.
class PolynomialBuilder {
 public:
  void add(const Monomial& m, const Rational& coeff);
  void add(Monomial&& m, const Rational& coeff);
  void add(const Polynomial& p, const Rational& scale = 1);
  std::size_t size() const { return acc_.size(); }
  Polynomial build() &&;

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

}  // namespace hyperobs
