#pragma once

#include "excal/nabla.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace excal::harmonic {

/// sum_i d^2 p / dx_i^2 over x_1..x_n. This is the scalar notion behind
/// "coordinate-harmonic"; the Laplace-de Rham operator at degree 0 is its
/// negative.
Polynomial coordinate_laplacian(const Polynomial& p, int n);

/// Exact basis of the harmonic subspace of homogeneous degree-d polynomials,
/// computed as the kernel of the Laplacian by row reduction over rationals.
struct HarmonicBasis {
  int n = 0;
  int degree = 0;
  std::vector<Polynomial> elements;
};

HarmonicBasis harmonic_basis(int n, int degree);

/// True iff the k-form presented by f lies in the Laplace-de Rham kernel.
/// Requires rank <= floor(n/2).
bool is_harmonic_field(const VectorFunction& f);

/// True iff every coordinate has zero coordinate Laplacian. On flat space
/// this is computed independently of is_harmonic_field; the two predicates
/// are deliberately kept separate.
bool is_coordinate_harmonic(const VectorFunction& f);

/// The two operations with domain rank k: the degree-lowering nabla_{n-k+1}
/// and the degree-raising nabla_{k+1} (they coincide at k = m for even n).
std::pair<OperationDescriptor, OperationDescriptor> neighbor_operations(int n, int k);

/// Checks the biconditional "f presents a Laplace-kernel form iff both
/// neighbor operations annihilate f" for this one field (1 <= rank <= m).
/// A false return is a concrete refutation witness: the left-to-right
/// direction can genuinely fail on R^n, e.g. for f = (x2, 0, 0).
bool harmonic_equivalence_check(const VectorFunction& f);

struct AnnihilationCase {
  int start_index = 0;
  int order = 0;
  bool zero = false;
};

struct AnnihilationReport {
  bool all_zero = true;
  std::vector<AnnihilationCase> cases;
};

/// Applies every admissible alternating composition with matching domain to a
/// harmonic input and records whether each output vanishes. Orders run from
/// 2 (rank 0) or 1 (rank >= 1) up to max_order; for rank 0 the first case is
/// the degree-lowering-after-gradient chain. Throws if f is not harmonic.
AnnihilationReport harmonic_annihilation_check(const VectorFunction& f, int max_order);

/// Closed-and-coclosed homogeneous rank-k witnesses (k >= 1), built as
/// d(delta(H dx_J)) from scalar harmonic H. Both neighbor operations vanish
/// on every returned field, so they satisfy the strong harmonicity that the
/// annihilation statement needs. Coefficient degrees run up to max_degree.
std::vector<VectorFunction> harmonic_field_witnesses(int n, int k, int max_degree);

struct ConjectureCounterexample {
  std::vector<int> sequence;  // application order
  VectorFunction witness;
  VectorFunction output;
};

struct SequenceScan {
  int rank = 0;
  int start_index = 0;
  int order = 0;
  long long witnesses = 0;
  bool all_zero = true;
};

/// Bounded-evidence report: which alternating compositions of orders
/// [k_min, k_max] were applied to which coordinate-harmonic witnesses, and
/// whether any output survived. A surviving output is re-verified before it
/// is reported as a counterexample.
struct ConjectureReport {
  int n = 0;
  int k_min = 0;
  int k_max = 0;
  int degree_max = 0;
  long long sequences_tested = 0;
  long long applications = 0;
  std::vector<SequenceScan> per_sequence;
  std::optional<ConjectureCounterexample> counterexample;
};

/// Scans the conjectured triviality of order >= 3 alternating compositions on
/// coordinate-harmonic inputs: every harmonic-basis element of degree
/// <= degree_max is placed in every coordinate slot of every rank <= m whose
/// rank admits a composition. Evidence only; the bounds are in the report.
ConjectureReport conjecture_scan(int n, int k_min, int k_max, int degree_max);

}  // namespace excal::harmonic
