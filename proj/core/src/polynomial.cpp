#include "excal/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace excal {

namespace {

Monomial::ExponentList merge_exponents(const Monomial::ExponentList& a,
                                       const Monomial::ExponentList& b) {
  Monomial::ExponentList out;
  out.reserve(a.size() + b.size());
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia].first == b[ib].first) {
      out.emplace_back(a[ia].first, a[ia].second + b[ib].second);
      ++ia;
      ++ib;
    } else if (a[ia].first < b[ib].first) {
      out.push_back(a[ia++]);
    } else {
      out.push_back(b[ib++]);
    }
  }
  for (; ia < a.size(); ++ia) out.push_back(a[ia]);
  for (; ib < b.size(); ++ib) out.push_back(b[ib]);
  return out;
}

int degree_of(const Monomial::ExponentList& list) {
  int d = 0;
  for (const auto& [index, exponent] : list) d += exponent;
  return d;
}

}  // namespace

Monomial Monomial::x(int index, int exponent) {
  if (index < 1) throw std::out_of_range("variable index must be >= 1");
  if (exponent < 0) throw std::invalid_argument("exponent must be non-negative");
  Monomial m;
  if (exponent > 0) m.x_.emplace_back(index, exponent);
  return m;
}

Monomial Monomial::e(int index, int exponent) {
  if (index < 1) throw std::out_of_range("direction index must be >= 1");
  if (exponent < 0) throw std::invalid_argument("exponent must be non-negative");
  Monomial m;
  if (exponent > 0) m.e_.emplace_back(index, exponent);
  return m;
}

int Monomial::x_exponent(int index) const {
  for (const auto& [i, p] : x_)
    if (i == index) return p;
  return 0;
}

int Monomial::e_exponent(int index) const {
  for (const auto& [i, p] : e_)
    if (i == index) return p;
  return 0;
}

Monomial Monomial::with_x_exponent(int index, int exponent) const {
  if (exponent < 0) throw std::invalid_argument("exponent must be non-negative");
  Monomial out = *this;
  auto it = std::find_if(out.x_.begin(), out.x_.end(),
                         [index](const auto& pair) { return pair.first == index; });
  if (it != out.x_.end()) {
    if (exponent == 0) {
      out.x_.erase(it);
    } else {
      it->second = exponent;
    }
  } else if (exponent > 0) {
    auto pos = std::find_if(out.x_.begin(), out.x_.end(),
                            [index](const auto& pair) { return pair.first > index; });
    out.x_.insert(pos, {index, exponent});
  }
  return out;
}

int Monomial::total_degree() const { return degree_of(x_) + degree_of(e_); }

int Monomial::x_degree() const { return degree_of(x_); }

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.x_ = merge_exponents(x_, other.x_);
  out.e_ = merge_exponents(e_, other.e_);
  return out;
}

int Monomial::lex_compare(const ExponentList& a, const ExponentList& b) {
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia].first == b[ib].first) {
      if (a[ia].second != b[ib].second) return a[ia].second > b[ib].second ? 1 : -1;
      ++ia;
      ++ib;
    } else if (a[ia].first < b[ib].first) {
      return 1;  // positive power at an earlier variable ranks higher
    } else {
      return -1;
    }
  }
  if (ia < a.size()) return 1;
  if (ib < b.size()) return -1;
  return 0;
}

bool Monomial::operator<(const Monomial& other) const {
  const int da = total_degree();
  const int db = other.total_degree();
  if (da != db) return da < db;
  if (int c = lex_compare(x_, other.x_); c != 0) return c < 0;
  return lex_compare(e_, other.e_) < 0;
}

std::string Monomial::str() const {
  if (is_constant()) return "1";
  std::ostringstream os;
  bool first = true;
  const auto emit = [&](char symbol, const ExponentList& list) {
    for (const auto& [index, exponent] : list) {
      if (!first) os << "*";
      os << symbol << index;
      if (exponent > 1) os << "^" << exponent;
      first = false;
    }
  };
  emit('x', x_);
  emit('e', e_);
  return os.str();
}

Polynomial::Polynomial(int constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(Monomial m, Rational coefficient) {
  if (coefficient != 0) terms_.emplace(std::move(m), std::move(coefficient));
}

Polynomial Polynomial::variable(int index) { return Polynomial(Monomial::x(index), 1); }

Polynomial Polynomial::direction(int index) { return Polynomial(Monomial::e(index), 1); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int Polynomial::x_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_degree());
  return d;
}

int Polynomial::max_variable_index() const {
  int top = 0;
  for (const auto& [m, c] : terms_) {
    if (!m.x_exponents().empty()) top = std::max(top, m.x_exponents().back().first);
    if (!m.e_exponents().empty()) top = std::max(top, m.e_exponents().back().first);
  }
  return top;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial out;
  if (scalar == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
  return out;
}

Polynomial Polynomial::partial(int index) const {
  if (index < 1) throw std::out_of_range("variable index must be >= 1");
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    const int p = m.x_exponent(index);
    if (p == 0) continue;
    out.add_term(m.with_x_exponent(index, p - 1), c * p);
  }
  return out;
}

Polynomial Polynomial::substitute_directions(const std::vector<Rational>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Rational factor = c;
    for (const auto& [index, exponent] : m.e_exponents()) {
      if (index > static_cast<int>(values.size()))
        throw std::out_of_range("no value supplied for direction symbol");
      for (int t = 0; t < exponent; ++t) factor *= values[index - 1];
    }
    Monomial bare;
    for (const auto& [index, exponent] : m.x_exponents())
      bare = bare * Monomial::x(index, exponent);
    out.add_term(bare, factor);
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      a = boost::multiprecision::abs(a);
    }
    if (m.is_constant()) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << m.str();
    }
    first = false;
  }
  return os.str();
}

namespace {

void collect_monomials(int n, int degree_left, int min_index, Monomial current,
                       std::vector<Monomial>& out) {
  if (degree_left == 0) {
    out.push_back(current);
    return;
  }
  if (min_index > n) return;
  for (int p = degree_left; p >= 0; --p) {
    Monomial next = current * Monomial::x(min_index, p);
    collect_monomials(n, degree_left - p, min_index + 1, next, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int degree) {
  if (n < 1) throw std::invalid_argument("need at least one variable");
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  std::vector<Monomial> out;
  collect_monomials(n, degree, 1, Monomial{}, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int n, int degree) {
  std::vector<Monomial> out;
  for (int d = degree; d >= 0; --d) {
    auto level = monomials_of_degree(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace excal
