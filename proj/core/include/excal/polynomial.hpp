#pragma once

#include "excal/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace excal {

/// One power product over the coordinate variables x1..xn and the direction
/// symbols e1..en. Exponent lists are sparse: strictly increasing variable
/// indices, every stored exponent positive.
class Monomial {
 public:
  using ExponentList = std::vector<std::pair<int, int>>;  // (index, exponent)

  Monomial() = default;
  static Monomial x(int index, int exponent = 1);
  static Monomial e(int index, int exponent = 1);

  const ExponentList& x_exponents() const { return x_; }
  const ExponentList& e_exponents() const { return e_; }
  int x_exponent(int index) const;
  int e_exponent(int index) const;
  Monomial with_x_exponent(int index, int exponent) const;

  int total_degree() const;
  int x_degree() const;
  bool is_constant() const { return x_.empty() && e_.empty(); }

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
  /// Graded lexicographic order: total degree first, ties broken
  /// lexicographically on the x part, then on the e part.
  bool operator<(const Monomial& other) const;

  std::string str() const;

 private:
  static int lex_compare(const ExponentList& a, const ExponentList& b);
  ExponentList x_;
  ExponentList e_;
};

/// Sparse multivariate polynomial with exact rational coefficients, the
/// computable stand-in for smooth scalar functions. Zero coefficients are
/// never stored, so structural equality is semantic equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(int constant);              // NOLINT: implicit by design
  Polynomial(const Rational& constant);  // NOLINT
  Polynomial(Monomial m, Rational coefficient);

  static Polynomial variable(int index);   // x_index
  static Polynomial direction(int index);  // e_index

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  int total_degree() const;  // -1 for the zero polynomial
  int x_degree() const;
  /// Largest variable index mentioned in any x or e exponent (0 if none).
  int max_variable_index() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;

  /// Formal partial derivative with respect to x_index. Direction symbols
  /// e1..en are treated as constants.
  Polynomial partial(int index) const;

  /// Replace e_i by values[i-1]; the result only mentions x variables.
  Polynomial substitute_directions(const std::vector<Rational>& values) const;

  bool operator==(const Polynomial& other) const = default;

  /// Canonical rendering, terms in descending graded lexicographic order.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) { return p * scalar; }

/// All monomials in x1..xn of exact total degree d, descending order.
std::vector<Monomial> monomials_of_degree(int n, int degree);
/// All monomials in x1..xn of total degree <= d, descending order.
std::vector<Monomial> monomials_up_to_degree(int n, int degree);

}  // namespace excal
