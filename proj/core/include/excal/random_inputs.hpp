#pragma once

#include "excal/kform.hpp"
#include "excal/nabla.hpp"

#include <cstdint>
#include <random>

namespace excal {

/// Deterministic source for randomized suites. Draws are reduced from raw
/// mt19937_64 output so that sequences are identical across standard library
/// implementations; the slight modulo bias is irrelevant here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  int uniform(int lo, int hi) {  // inclusive bounds
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

  Rational rational(int max_abs_numerator, int max_denominator) {
    const int num = uniform(-max_abs_numerator, max_abs_numerator);
    const int den = uniform(1, max_denominator);
    return Rational(num, den);
  }

  Rational nonzero_rational(int max_abs_numerator, int max_denominator) {
    for (;;) {
      Rational r = rational(max_abs_numerator, max_denominator);
      if (r != 0) return r;
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct PolynomialShape {
  int max_degree = 3;
  int terms = 4;
  bool with_directions = false;
  int max_abs_numerator = 6;
  int max_denominator = 3;
};

Polynomial random_polynomial(Rng& rng, int n, const PolynomialShape& shape = {});
KForm random_kform(Rng& rng, int n, int degree, const PolynomialShape& shape = {});
VectorFunction random_field(Rng& rng, int n, int rank, const PolynomialShape& shape = {});

}  // namespace excal
