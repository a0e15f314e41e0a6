#pragma once

#include "excal/nabla.hpp"
#include "excal/rational.hpp"

#include <optional>
#include <vector>

namespace excal::census {

/// F_1 = F_2 = 1. The indexing is pinned by the order-1 count over family B
/// in dimension 3 being 4 = F_4 + 1.
BigInt fibonacci(int k);

/// Number of length-k type-composable sequences, counted as walks in the
/// composability digraph by iterated vector-matrix products.
BigInt count_compositions(int n, int k, Family family);

/// Number of length-k walks in the non-triviality digraph (edge i -> j iff
/// nontrivial_pair(i, j, n); family A drops node 0).
BigInt count_nontrivial(int n, int k, Family family);

/// Non-trivial count by brute force: enumerate composable sequences and test
/// each with the symbolic triviality oracle. Feasible for small n and k.
BigInt count_nontrivial_oracle(int n, int k, Family family);

/// The sequences behind count_nontrivial_oracle, sorted.
std::vector<std::vector<int>> oracle_nontrivial_sequences(int n, int k, Family family);

/// Closed form for the family-A non-trivial count:
/// n when n is odd; n / n-1 / n-2 for k = 1 / k = 2 / k > 2 when n is even.
long long nontrivial_closed_form_a(int n, int k);

/// Non-trivial count of compositions starting at one of nabla_2..nabla_{n-1},
/// the family-A closed form minus the two distinguished starts. Meaningful
/// for n >= 3.
long long middle_start_closed_form(int n, int k);

/// Closed form for the family-B non-trivial count: F_{k+3} plus the middle
/// start count. Evaluates to n+1 (even n, k=1) and n+2 (even n, k=2).
/// Derivation requires n >= 3; at n = 2 the true counts differ (see README).
BigInt nontrivial_closed_form_b(int n, int k);

/// Family-B count via the recurrence route: the distinguished-start partial
/// sum obeys s(k) = s(k-1) + s(k-2) with s(1) = 3, s(2) = 5, independent of
/// n >= 3; the middle starts are added back per order.
BigInt nontrivial_recurrence_b(int n, int k);

/// The n = 3 route: the count minus one satisfies the Fibonacci recurrence
/// with seeds 3 and 5.
BigInt nontrivial_recurrence_shifted_n3(int k);

/// One verified cell of the census: the same quantity computed by graph
/// walks, closed form, recurrence and (optionally) the symbolic oracle.
struct CensusReport {
  int n = 0;
  int k = 0;
  Family family = Family::A;
  BigInt count_graph;
  BigInt count_formula;
  BigInt count_recurrence;
  std::optional<BigInt> count_oracle;
  bool agree = false;
};

struct CrossCheckOptions {
  int n_min = 2;
  int n_max = 5;
  int k_max = 6;
  bool with_oracle = false;
  int oracle_max_n = 5;  // documented feasibility bound
  int oracle_max_k = 4;
};

/// Every (n, k, family) cell in range; agree is true iff all computed counts
/// for the cell coincide.
std::vector<CensusReport> cross_check(const CrossCheckOptions& options);

}  // namespace excal::census
