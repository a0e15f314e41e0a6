#include "excal/kform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace excal {

namespace {

const Polynomial kZeroPolynomial{};

}  // namespace

KForm::KForm(int degree, int ambient) : degree_(degree), ambient_(ambient) {
  if (ambient_ < 0) throw std::invalid_argument("ambient dimension must be non-negative");
  if (degree_ < 0 || degree_ > ambient_)
    throw std::invalid_argument("form degree must satisfy 0 <= k <= n");
}

const Polynomial& KForm::coefficient(const MultiIndex& index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? kZeroPolynomial : it->second;
}

void KForm::add_term(const MultiIndex& index, const Polynomial& c) {
  if (index.ambient() != ambient_ || index.degree() != degree_)
    throw std::invalid_argument("multi-index does not match the form");
  if (c.is_zero()) return;
  auto it = coeffs_.find(index);
  if (it == coeffs_.end()) {
    coeffs_.emplace(index, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

KForm KForm::operator-() const {
  KForm out(degree_, ambient_);
  for (const auto& [index, c] : coeffs_) out.coeffs_.emplace(index, -c);
  return out;
}

KForm KForm::operator+(const KForm& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (degree_ != other.degree_) throw std::invalid_argument("degree mismatch");
  KForm out = *this;
  for (const auto& [index, c] : other.coeffs_) out.add_term(index, c);
  return out;
}

KForm KForm::operator-(const KForm& other) const { return *this + (-other); }

KForm KForm::operator*(const Polynomial& scale) const {
  KForm out(degree_, ambient_);
  for (const auto& [index, c] : coeffs_) out.add_term(index, c * scale);
  return out;
}

KForm KForm::operator*(const Rational& scale) const {
  KForm out(degree_, ambient_);
  if (scale == 0) return out;
  for (const auto& [index, c] : coeffs_) out.coeffs_.emplace(index, c * scale);
  return out;
}

std::string KForm::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, c] : coeffs_) {
    if (!first) os << " + ";
    const bool needs_parens = c.terms().size() > 1 && degree_ > 0;
    if (needs_parens) {
      os << "(" << c.str() << ")";
    } else {
      os << c.str();
    }
    if (degree_ > 0) os << " dx" << index.str();
    first = false;
  }
  return os.str();
}

KForm exterior_derivative(const KForm& w) {
  const int n = w.ambient();
  const int k = w.degree();
  KForm out(std::min(k + 1, n), n);
  if (k >= n) return out;  // nothing above top degree
  for (const auto& [index, c] : w.coefficients()) {
    for (int i = 1; i <= n; ++i) {
      if (index.contains(i)) continue;
      Polynomial dp = c.partial(i);
      if (dp.is_zero()) continue;
      // dx_i dx_I sorts to the increasing basis with one transposition per
      // component below i
      std::vector<int> components = index.components();
      int below = 0;
      while (below < static_cast<int>(components.size()) && components[below] < i) ++below;
      components.insert(components.begin() + below, i);
      out.add_term(MultiIndex(std::move(components), n), below % 2 == 0 ? dp : -dp);
    }
  }
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  const int n = a.ambient();
  const int k = a.degree();
  const int l = b.degree();
  if (k + l > n) return KForm(n, n);  // zero: every product has a repeated index
  KForm out(k + l, n);
  for (const auto& [ia, ca] : a.coefficients()) {
    for (const auto& [ib, cb] : b.coefficients()) {
      bool shared = false;
      int inversions = 0;
      for (int va : ia.components()) {
        if (ib.contains(va)) {
          shared = true;
          break;
        }
        for (int vb : ib.components())
          if (vb < va) ++inversions;
      }
      if (shared) continue;
      std::vector<int> merged = ia.components();
      merged.insert(merged.end(), ib.components().begin(), ib.components().end());
      std::sort(merged.begin(), merged.end());
      Polynomial c = ca * cb;
      out.add_term(MultiIndex(std::move(merged), n), inversions % 2 == 0 ? c : -c);
    }
  }
  return out;
}

KForm hodge_star(const KForm& w) {
  KForm out(w.ambient() - w.degree(), w.ambient());
  for (const auto& [index, c] : w.coefficients())
    out.add_term(index.complement(), index.signature() > 0 ? c : -c);
  return out;
}

KForm hodge_star_inverse(const KForm& psi, int target_degree) {
  const int n = psi.ambient();
  if (target_degree < 0 || target_degree > n)
    throw std::invalid_argument("target degree out of range");
  if (psi.degree() != n - target_degree)
    throw std::invalid_argument("degree mismatch: expected an (n-k)-form");
  KForm out = hodge_star(psi);
  const int sign_exp = target_degree * (n - target_degree);
  return sign_exp % 2 == 0 ? out : -out;
}

KForm codifferential(const KForm& w) {
  const int k = w.degree();
  if (k == 0) throw std::domain_error("codifferential needs degree >= 1");
  KForm inner = exterior_derivative(hodge_star(w));
  KForm out = hodge_star_inverse(inner, k - 1);
  return k % 2 == 0 ? out : -out;
}

KForm codifferential_double_star(const KForm& w) {
  const int k = w.degree();
  const int n = w.ambient();
  if (k == 0) throw std::domain_error("codifferential needs degree >= 1");
  KForm out = hodge_star(exterior_derivative(hodge_star(w)));
  const int sign_exp = n * (k - 1) + 1;
  return sign_exp % 2 == 0 ? out : -out;
}

KForm laplace_de_rham(const KForm& w) {
  const int k = w.degree();
  KForm raised_then_lowered = codifferential(exterior_derivative(w));
  if (k == 0) return raised_then_lowered;
  return raised_then_lowered + exterior_derivative(codifferential(w));
}

}  // namespace excal
