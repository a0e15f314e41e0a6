#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace excal::suites {

struct SuiteResult {
  std::string name;
  int cases = 0;
  bool passed = true;
  std::string first_failure;  // rendered witness of the first failing case
};

bool all_passed(const std::vector<SuiteResult>& results);

/// Exterior-calculus identities on random forms of every degree 0..n:
/// d(d w) = 0, star(star w) = (-1)^{k(n-k)} w, star-inverse round trip,
/// the Leibniz rule, agreement of the two codifferential routes, and the
/// degree-0 Laplacian being the negative coordinate Laplacian.
std::vector<SuiteResult> forms_identity_suite(int n, std::uint64_t seed, int cases_per_degree);

/// Dimension-3 concordance: the first three operations match the classical
/// gradient / curl / divergence component formulas computed directly from
/// partial derivatives, the eight order-2 compositions behave as published
/// (exactly curl-after-gradient and divergence-after-curl are trivial), and
/// the directional-derivative identities hold.
std::vector<SuiteResult> classical_r3_suite(std::uint64_t seed, int cases);

/// Pair-level agreement between the pair relation and the symbolic oracle:
/// composable pairs are non-trivial exactly when related, and unrelated pairs
/// include every non-composable one.
std::vector<SuiteResult> pair_table_suite(int n);

/// Harmonic checks for every rank 1..m: the kernel/neighbor equivalence on
/// random and constructed fields, and annihilation of closed-and-coclosed
/// witnesses by all alternating compositions up to max_order.
std::vector<SuiteResult> harmonic_suite(int n, std::uint64_t seed, int fields_per_rank,
                                        int max_order);

}  // namespace excal::suites
