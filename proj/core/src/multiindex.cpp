#include "excal/multiindex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace excal {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

MultiIndex::MultiIndex(std::vector<int> components, int ambient)
    : components_(std::move(components)), ambient_(ambient) {
  if (ambient_ < 0) throw std::invalid_argument("ambient dimension must be non-negative");
  int prev = 0;
  for (int c : components_) {
    if (c <= prev || c > ambient_)
      throw std::invalid_argument("multi-index must be strictly increasing within 1..n");
    prev = c;
  }
}

bool MultiIndex::contains(int index) const {
  return std::binary_search(components_.begin(), components_.end(), index);
}

MultiIndex MultiIndex::complement() const {
  std::vector<int> rest;
  rest.reserve(ambient_ - degree());
  std::size_t pos = 0;
  for (int v = 1; v <= ambient_; ++v) {
    if (pos < components_.size() && components_[pos] == v) {
      ++pos;
    } else {
      rest.push_back(v);
    }
  }
  return MultiIndex(std::move(rest), ambient_);
}

int MultiIndex::signature() const {
  std::vector<int> permutation = components_;
  const auto rest = complement().components();
  permutation.insert(permutation.end(), rest.begin(), rest.end());
  int inversions = 0;
  for (std::size_t a = 0; a < permutation.size(); ++a)
    for (std::size_t b = a + 1; b < permutation.size(); ++b)
      if (permutation[a] > permutation[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int MultiIndex::rank() const {
  const int k = degree();
  long long r = 0;
  int prev = 0;
  for (int t = 0; t < k; ++t) {
    for (int v = prev + 1; v < components_[t]; ++v) r += binomial(ambient_ - v, k - t - 1);
    prev = components_[t];
  }
  return static_cast<int>(r);
}

bool MultiIndex::operator<(const MultiIndex& other) const {
  return components_ < other.components_;
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) os << ",";
    os << components_[i];
  }
  os << ")";
  return os.str();
}

std::vector<MultiIndex> enumerate_multiindices(int k, int n) {
  if (k < 0 || k > n) throw std::out_of_range("degree must satisfy 0 <= k <= n");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  std::vector<int> current(k);
  for (int i = 0; i < k; ++i) current[i] = i + 1;
  for (;;) {
    out.emplace_back(current, n);
    // advance to the lexicographic successor
    int t = k - 1;
    while (t >= 0 && current[t] == n - (k - 1 - t)) --t;
    if (t < 0) break;
    ++current[t];
    for (int s = t + 1; s < k; ++s) current[s] = current[s - 1] + 1;
  }
  return out;
}

MultiIndex multiindex_at_rank(int rank, int k, int n) {
  if (k < 0 || k > n) throw std::out_of_range("degree must satisfy 0 <= k <= n");
  if (rank < 0 || rank >= binomial(n, k)) throw std::out_of_range("rank out of range");
  std::vector<int> components;
  components.reserve(k);
  long long remaining = rank;
  int value = 1;
  for (int t = 0; t < k; ++t) {
    for (;; ++value) {
      const long long below = binomial(n - value, k - t - 1);
      if (remaining < below) break;
      remaining -= below;
    }
    components.push_back(value);
    ++value;
  }
  return MultiIndex(std::move(components), n);
}

}  // namespace excal
