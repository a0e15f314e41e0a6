#include "excal/harmonic.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace excal::harmonic {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> reduce(std::vector<std::vector<Rational>>& m, int cols) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    const Rational lead = m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] /= lead;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

std::vector<std::vector<Rational>> kernel_basis(std::vector<std::vector<Rational>> m, int cols) {
  const std::vector<int> pivot_cols = reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> kernel;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t p = 0; p < pivot_cols.size(); ++p) v[pivot_cols[p]] = -m[p][free];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// Scale to a primitive integer vector whose first nonzero entry is positive.
void normalize(std::vector<Rational>& v) {
  BigInt den_lcm = 1;
  for (const auto& r : v)
    if (r != 0) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(r));
  BigInt num_gcd = 0;
  for (auto& r : v) {
    r *= den_lcm;
    if (r != 0) num_gcd = boost::multiprecision::gcd(num_gcd, numerator(r));
  }
  if (num_gcd == 0) return;
  int sign = 0;
  for (const auto& r : v) {
    if (r != 0) {
      sign = r > 0 ? 1 : -1;
      break;
    }
  }
  const Rational scale = Rational(sign) / Rational(num_gcd);
  for (auto& r : v) r *= scale;
}

int excluded_start(int i, int n) { return 2 * i == n || 2 * (i - 1) == n; }

}  // namespace

Polynomial coordinate_laplacian(const Polynomial& p, int n) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  Polynomial out;
  for (int i = 1; i <= n; ++i) out += p.partial(i).partial(i);
  return out;
}

HarmonicBasis harmonic_basis(int n, int degree) {
  if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  HarmonicBasis basis;
  basis.n = n;
  basis.degree = degree;
  const auto monos = monomials_of_degree(n, degree);
  if (degree < 2) {
    for (const auto& m : monos) basis.elements.emplace_back(m, 1);
    return basis;
  }
  const auto image_monos = monomials_of_degree(n, degree - 2);
  std::map<Monomial, int> image_row;
  for (std::size_t r = 0; r < image_monos.size(); ++r) image_row.emplace(image_monos[r], r);

  std::vector<std::vector<Rational>> matrix(image_monos.size(),
                                            std::vector<Rational>(monos.size(), 0));
  for (std::size_t c = 0; c < monos.size(); ++c) {
    const Polynomial lap = coordinate_laplacian(Polynomial(monos[c], 1), n);
    for (const auto& [m, coeff] : lap.terms()) matrix[image_row.at(m)][c] = coeff;
  }

  for (auto& v : kernel_basis(std::move(matrix), static_cast<int>(monos.size()))) {
    normalize(v);
    Polynomial element;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (v[c] != 0) element += Polynomial(monos[c], v[c]);
    basis.elements.push_back(std::move(element));
  }
  return basis;
}

bool is_harmonic_field(const VectorFunction& f) {
  if (f.rank() > f.ambient() / 2) throw std::out_of_range("rank must be at most floor(n/2)");
  return laplace_de_rham(presentation_inverse(f)).is_zero();
}

bool is_coordinate_harmonic(const VectorFunction& f) {
  for (const auto& c : f.coords())
    if (!coordinate_laplacian(c, f.ambient()).is_zero()) return false;
  return true;
}

std::pair<OperationDescriptor, OperationDescriptor> neighbor_operations(int n, int k) {
  if (k < 1 || k > n / 2) throw std::out_of_range("rank must be in 1..floor(n/2)");
  return {make_operation(n, n - k + 1), make_operation(n, k + 1)};
}

bool harmonic_equivalence_check(const VectorFunction& f) {
  const int n = f.ambient();
  const int k = f.rank();
  if (k < 1 || k > n / 2) throw std::out_of_range("rank must be in 1..floor(n/2)");
  const bool kernel = laplace_de_rham(presentation_inverse(f)).is_zero();
  const auto [lowering, raising] = neighbor_operations(n, k);
  const bool both_vanish = apply(lowering, f).is_zero() && apply(raising, f).is_zero();
  return kernel == both_vanish;
}

AnnihilationReport harmonic_annihilation_check(const VectorFunction& f, int max_order) {
  if (!is_harmonic_field(f)) throw std::invalid_argument("input is not harmonic");
  const int n = f.ambient();
  const int min_order = f.rank() == 0 ? 2 : 1;
  AnnihilationReport report;
  for (int i = 1; i <= n; ++i) {
    if (excluded_start(i, n)) continue;
    if (make_operation(n, i).domain_rank != f.rank()) continue;
    for (int order = min_order; order <= max_order; ++order) {
      const auto seq = alternating_sequence(i, order, n);
      const bool zero = apply_sequence(seq, f, n).is_zero();
      report.cases.push_back({i, order, zero});
      report.all_zero = report.all_zero && zero;
    }
  }
  return report;
}

std::vector<VectorFunction> harmonic_field_witnesses(int n, int k, int max_degree) {
  if (k < 1 || k > n / 2) throw std::out_of_range("rank must be in 1..floor(n/2)");
  if (max_degree < 0) throw std::invalid_argument("degree bound must be non-negative");
  std::vector<VectorFunction> out;
  std::set<std::string> seen;
  const auto slots = enumerate_multiindices(k, n);
  for (int d = 0; d <= max_degree; ++d) {
    const auto scalars = harmonic_basis(n, d + 2);
    for (const auto& h : scalars.elements) {
      for (const auto& slot : slots) {
        KForm seed(k, n);
        seed.add_term(slot, h);
        const KForm witness_form = exterior_derivative(codifferential(seed));
        VectorFunction witness = presentation(witness_form);
        if (witness.is_zero()) continue;
        if (seen.insert(witness.str()).second) out.push_back(std::move(witness));
      }
    }
  }
  return out;
}

ConjectureReport conjecture_scan(int n, int k_min, int k_max, int degree_max) {
  if (n < 3) throw std::invalid_argument("scan needs ambient dimension >= 3");
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("empty order range");
  if (degree_max < 0) throw std::invalid_argument("degree bound must be non-negative");

  ConjectureReport report;
  report.n = n;
  report.k_min = k_min;
  report.k_max = k_max;
  report.degree_max = degree_max;

  std::vector<HarmonicBasis> bases;
  for (int d = 0; d <= degree_max; ++d) bases.push_back(harmonic_basis(n, d));

  const int m = n / 2;
  for (int rank = 0; rank <= m; ++rank) {
    std::vector<VectorFunction> witnesses;
    const long long slots = binomial(n, rank);
    for (const auto& basis : bases) {
      for (const auto& h : basis.elements) {
        for (long long s = 0; s < slots; ++s) {
          VectorFunction f(rank, n);
          f.set_coordinate(static_cast<int>(s), h);
          witnesses.push_back(std::move(f));
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      if (excluded_start(i, n)) continue;
      if (make_operation(n, i).domain_rank != rank) continue;
      for (int order = k_min; order <= k_max; ++order) {
        const auto seq = alternating_sequence(i, order, n);
        SequenceScan scan{rank, i, order, static_cast<long long>(witnesses.size()), true};
        for (const auto& witness : witnesses) {
          const VectorFunction output = apply_sequence(seq, witness, n);
          ++report.applications;
          if (output.is_zero()) continue;
          scan.all_zero = false;
          if (!report.counterexample) {
            // re-derive before reporting: a counterexample must reproduce
            const VectorFunction again = apply_sequence(seq, witness, n);
            if (again.is_zero()) throw std::logic_error("counterexample did not reproduce");
            report.counterexample = ConjectureCounterexample{seq, witness, output};
          }
        }
        report.per_sequence.push_back(scan);
        ++report.sequences_tested;
      }
    }
  }
  return report;
}

}  // namespace excal::harmonic
