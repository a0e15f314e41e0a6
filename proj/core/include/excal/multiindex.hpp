#pragma once

#include <string>
#include <vector>

namespace excal {

long long binomial(int n, int k);

/// Strictly increasing index tuple 1 <= i1 < ... < ik <= n selecting a basis
/// element dx_I. The empty tuple (k = 0) is allowed.
class MultiIndex {
 public:
  MultiIndex(std::vector<int> components, int ambient);
  static MultiIndex empty(int ambient) { return MultiIndex({}, ambient); }

  int degree() const { return static_cast<int>(components_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<int>& components() const { return components_; }
  bool contains(int index) const;

  /// The increasing tuple over {1..n} \ {i1..ik}.
  MultiIndex complement() const;

  /// Sign of the permutation (i1..ik, j1..j(n-k)) of (1..n), with J the
  /// complement, computed by inversion count.
  int signature() const;

  /// Zero-based lexicographic position among all length-k tuples in 1..n.
  int rank() const;

  bool operator==(const MultiIndex& other) const = default;
  bool operator<(const MultiIndex& other) const;

  std::string str() const;  // "(1,3)"; "()" when empty

 private:
  std::vector<int> components_;
  int ambient_ = 0;
};

/// All C(n,k) multi-indices in lexicographic order; the position in this list
/// fixes the coordinate layout used by every presentation map.
std::vector<MultiIndex> enumerate_multiindices(int k, int n);

MultiIndex multiindex_at_rank(int rank, int k, int n);

}  // namespace excal
