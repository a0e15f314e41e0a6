#pragma once

#include "excal/multiindex.hpp"
#include "excal/polynomial.hpp"

#include <map>
#include <string>

namespace excal {

/// Differential k-form on R^n with polynomial coefficients, stored as a map
/// from increasing multi-indices of length k to coefficients. The zero form
/// is the empty map.
class KForm {
 public:
  using CoefficientMap = std::map<MultiIndex, Polynomial>;

  KForm(int degree, int ambient);

  int degree() const { return degree_; }
  int ambient() const { return ambient_; }
  const CoefficientMap& coefficients() const { return coeffs_; }
  const Polynomial& coefficient(const MultiIndex& index) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Accumulate c dx_I, dropping the entry if the sum cancels.
  void add_term(const MultiIndex& index, const Polynomial& c);

  KForm operator-() const;
  /// Addition tolerates a zero operand of any degree so that operator chains
  /// that bottom out at the top of the complex stay total.
  KForm operator+(const KForm& other) const;
  KForm operator-(const KForm& other) const;
  KForm operator*(const Polynomial& scale) const;
  KForm operator*(const Rational& scale) const;

  bool operator==(const KForm& other) const = default;

  std::string str() const;

 private:
  int degree_;
  int ambient_;
  CoefficientMap coeffs_;
};

/// d_k: degree k -> k+1. At top degree the result is the zero form, which
/// keeps the complex total.
KForm exterior_derivative(const KForm& w);

/// Bilinear wedge product; dx_I dx_J vanishes on a shared index, otherwise
/// contributes the merge-permutation sign.
KForm wedge(const KForm& a, const KForm& b);

/// star_k(dx_I) = signature(I) dx_J with J the complement of I.
KForm hodge_star(const KForm& w);

/// star_k^{-1}(psi) = (-1)^{k(n-k)} star_{n-k}(psi); psi must have degree n-k.
KForm hodge_star_inverse(const KForm& psi, int target_degree);

/// Codifferential on k-forms (k >= 1): (-1)^k star_{k-1}^{-1} d_{n-k} star_k.
KForm codifferential(const KForm& w);

/// Same operator through the other published sign route,
/// (-1)^{n(k-1)+1} star_{n-(k-1)} d_{n-k} star_k; kept separate so the two
/// routes can be checked against each other.
KForm codifferential_double_star(const KForm& w);

/// Laplace-de Rham operator: delta d at degree 0, delta d + d delta above.
KForm laplace_de_rham(const KForm& w);

}  // namespace excal
