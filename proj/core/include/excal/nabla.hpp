#pragma once

#include "excal/kform.hpp"

#include <string>
#include <vector>

namespace excal {

/// Which operation family a count or an enumeration ranges over.
/// A: the n operations nabla_1..nabla_n built from d and the Hodge star.
/// B: family A extended with the directional derivative nabla_0.
enum class Family { A, B };

std::string family_str(Family family);

/// Coordinate presentation of a k-form: the C(n,k) coefficients read off in
/// lexicographic multi-index order. Ranks at or below floor(n/2) are the
/// working domains of the operation family; higher ranks only appear as
/// intermediate presentations.
class VectorFunction {
 public:
  VectorFunction(int rank, int ambient);  // zero element
  VectorFunction(int rank, int ambient, std::vector<Polynomial> coords);

  int rank() const { return rank_; }
  int ambient() const { return ambient_; }
  const std::vector<Polynomial>& coords() const { return coords_; }
  const Polynomial& coordinate(int position) const;
  void set_coordinate(int position, Polynomial value);
  bool is_zero() const;

  bool operator==(const VectorFunction& other) const = default;
  VectorFunction operator+(const VectorFunction& other) const;
  VectorFunction operator*(const Rational& scale) const;

  std::string str() const;  // "(p1, p2, ...)"

 private:
  int rank_;
  int ambient_;
  std::vector<Polynomial> coords_;
};

VectorFunction presentation(const KForm& w);
KForm presentation_inverse(const VectorFunction& f);

enum class OperationKind {
  directional,  // nabla_0: f -> sum_i (df/dx_i) e_i
  ascending,    // nabla_i = p_i d_{i-1} p_{i-1}^{-1}, 1 <= i <= m
  middle,       // nabla_{m+1}; shape depends on the parity of n
  descending,   // nabla_{n-j} = p_j star_j^{-1} d_{n-(j+1)} star_{j+1} p_{j+1}^{-1}
};

struct OperationDescriptor {
  int index = 0;  // the i of nabla_i, 0..n
  int ambient = 0;
  int domain_rank = 0;
  int codomain_rank = 0;
  OperationKind kind = OperationKind::directional;

  bool operator==(const OperationDescriptor& other) const = default;
};

/// Descriptor for nabla_index in dimension n (index 0 is the directional
/// derivative). Domain and codomain ranks follow the two published columns:
/// ascending up to m = floor(n/2), one middle operation at m+1, descending
/// from m+2 to n.
OperationDescriptor make_operation(int n, int index);

/// All operations of the family, in index order (0..n for B, 1..n for A).
std::vector<OperationDescriptor> build_operations(int n, bool with_directional);

/// True iff b can be applied after a (b.domain == a.codomain).
bool composable(const OperationDescriptor& a, const OperationDescriptor& b);

VectorFunction apply(const OperationDescriptor& op, const VectorFunction& f);

/// Apply nabla_{seq[0]}, then nabla_{seq[1]}, ...; seq is application order.
VectorFunction apply_sequence(const std::vector<int>& seq, const VectorFunction& f, int n);

/// f . e for a rank-1 function: sum_i f_i e_i.
Polynomial dot_direction(const VectorFunction& f);

/// The pair relation driving every non-triviality count: true iff the
/// composition nabla_j after nabla_i is non-trivial, i.e.
/// (i=0,j=0) or (i=0,j=1) or (i=n,j=0) or (i+j=n+1 and 2i != n).
bool nontrivial_pair(int i, int j, int n);

/// The alternating index pattern [i, n+1-i, i, ...] of length k, the shape of
/// every non-trivial composition over family A of order >= 3. Start indices
/// with 2i = n or 2(i-1) = n are rejected: their patterns die after one step.
std::vector<int> alternating_sequence(int i, int k, int n);

/// All length-k alternating patterns that are walks of the pair relation.
/// For k >= 3 (and for every k when n is odd) this is exactly
/// alternating_sequence over the admissible start indices; for even n the
/// orders 1 and 2 admit finitely many extra short patterns.
std::vector<std::vector<int>> nontrivial_sequences(int n, int k);

/// Decide whether the composed operator annihilates every input, by applying
/// it to each single-monomial coordinate slot over all monomials of total
/// degree <= length(seq). Sound and complete because every operation is a
/// first-order constant-coefficient operator, so the composition has order
/// <= k and vanishes iff it kills that finite basis. Direction symbols stay
/// symbolic: a composition through nabla_0 is trivial only if it vanishes
/// identically in the e variables as well.
bool is_trivial_composition(const std::vector<int>& seq, int n);

/// All type-composable index sequences of length k over the family.
std::vector<std::vector<int>> composable_sequences(int n, int k, Family family);

std::string sequence_str(const std::vector<int>& seq);

}  // namespace excal
