#include <doctest.h>

#include <stdexcept>

#include "excal/polynomial.hpp"
#include "excal/random_inputs.hpp"

using excal::Monomial;
using excal::Polynomial;
using excal::Rational;

namespace {

Polynomial x(int i) { return Polynomial::variable(i); }
Polynomial e(int i) { return Polynomial::direction(i); }

}  // namespace

TEST_CASE("additive inverse cancels to the empty term map") {
  CHECK((x(1) + (-x(1))).is_zero());
  CHECK((x(1) * x(2) + x(1) * x(2)) == x(1) * x(2) * Rational(2));
}

TEST_CASE("rational coefficients accumulate exactly") {
  const Polynomial a = x(1) * Rational(1, 2) + Polynomial(Rational(1, 3));
  const Polynomial b = x(1) * Rational(1, 2);
  CHECK(a + b == x(1) + Polynomial(Rational(1, 3)));
}

TEST_CASE("products distribute and directions multiply like variables") {
  CHECK((x(1) * Polynomial(0)).is_zero());
  CHECK((x(1) + x(2)) * (x(1) - x(2)) == x(1) * x(1) - x(2) * x(2));
  CHECK(e(1) * x(1) * e(1) == Polynomial(Monomial::e(1, 2) * Monomial::x(1), 1));
}

TEST_CASE("partial differentiates x and treats e as constant") {
  CHECK((x(1) * x(1)).partial(1) == x(1) * Rational(2));
  CHECK((x(1) * x(2) + e(1) * x(1)).partial(1) == x(2) + e(1));
  CHECK((x(2) * x(2) * x(2)).partial(1).is_zero());
  CHECK_THROWS_AS(x(1).partial(0), std::out_of_range);
}

TEST_CASE("ring axioms hold on random inputs") {
  excal::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(2, 5);
    excal::PolynomialShape shape;
    shape.with_directions = trial % 3 == 0;
    const Polynomial a = random_polynomial(rng, n, shape);
    const Polynomial b = random_polynomial(rng, n, shape);
    const Polynomial c = random_polynomial(rng, n, shape);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("partial derivatives commute and satisfy the product rule") {
  excal::Rng rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(2, 5);
    const Polynomial p = random_polynomial(rng, n);
    const Polynomial q = random_polynomial(rng, n);
    const int i = rng.uniform(1, n);
    const int j = rng.uniform(1, n);
    CHECK(p.partial(i).partial(j) == p.partial(j).partial(i));
    CHECK((p * q).partial(i) == p.partial(i) * q + p * q.partial(i));
    CHECK((p + q).partial(i) == p.partial(i) + q.partial(i));
  }
}

TEST_CASE("direction substitution evaluates e symbols") {
  const Polynomial p = e(1) * x(1) + e(2) * e(2);
  const Polynomial value = p.substitute_directions({Rational(1, 2), Rational(-1)});
  CHECK(value == x(1) * Rational(1, 2) + Polynomial(1));
  CHECK_THROWS_AS(p.substitute_directions({Rational(1)}), std::out_of_range);
}

TEST_CASE("canonical rendering is graded lexicographic, descending") {
  const Polynomial p = x(2) + x(1) * x(1) - Polynomial(Rational(1, 3)) + x(1) * x(2) * e(1);
  CHECK(p.str() == "x1*x2*e1 + x1^2 + x2 - 1/3");
  CHECK(Polynomial().str() == "0");
  CHECK((-x(1)).str() == "-x1");
  CHECK((x(1) * Rational(-3, 2)).str() == "-3/2*x1");
}

TEST_CASE("monomial enumeration covers every degree once") {
  const auto upto = excal::monomials_up_to_degree(3, 2);
  CHECK(upto.size() == 10);  // C(3+2,2)
  const auto exact = excal::monomials_of_degree(2, 3);
  CHECK(exact.size() == 4);
  for (const auto& m : exact) CHECK(m.total_degree() == 3);
}
