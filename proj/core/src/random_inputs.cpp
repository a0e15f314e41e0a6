#include "excal/random_inputs.hpp"

namespace excal {

Polynomial random_polynomial(Rng& rng, int n, const PolynomialShape& shape) {
  Polynomial out;
  for (int t = 0; t < shape.terms; ++t) {
    const int degree = rng.uniform(0, shape.max_degree);
    Monomial m;
    for (int step = 0; step < degree; ++step) {
      const int var = rng.uniform(1, n);
      const bool direction = shape.with_directions && rng.uniform(0, 3) == 0;
      m = m * (direction ? Monomial::e(var) : Monomial::x(var));
    }
    out += Polynomial(m, rng.nonzero_rational(shape.max_abs_numerator, shape.max_denominator));
  }
  return out;
}

KForm random_kform(Rng& rng, int n, int degree, const PolynomialShape& shape) {
  KForm out(degree, n);
  for (const auto& index : enumerate_multiindices(degree, n)) {
    if (rng.uniform(0, 2) == 0) continue;  // keep forms sparse
    out.add_term(index, random_polynomial(rng, n, shape));
  }
  return out;
}

VectorFunction random_field(Rng& rng, int n, int rank, const PolynomialShape& shape) {
  VectorFunction out(rank, n);
  const long long slots = binomial(n, rank);
  for (long long s = 0; s < slots; ++s)
    out.set_coordinate(static_cast<int>(s), random_polynomial(rng, n, shape));
  return out;
}

}  // namespace excal
