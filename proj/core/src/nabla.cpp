#include "excal/nabla.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace excal {

std::string family_str(Family family) { return family == Family::A ? "A" : "B"; }

VectorFunction::VectorFunction(int rank, int ambient)
    : rank_(rank), ambient_(ambient),
      coords_(static_cast<std::size_t>(binomial(ambient, rank))) {
  if (ambient_ < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (rank_ < 0 || rank_ > ambient_) throw std::invalid_argument("rank must satisfy 0 <= k <= n");
}

VectorFunction::VectorFunction(int rank, int ambient, std::vector<Polynomial> coords)
    : VectorFunction(rank, ambient) {
  if (coords.size() != coords_.size())
    throw std::invalid_argument("coordinate count does not match C(n,k)");
  coords_ = std::move(coords);
}

const Polynomial& VectorFunction::coordinate(int position) const {
  return coords_.at(static_cast<std::size_t>(position));
}

void VectorFunction::set_coordinate(int position, Polynomial value) {
  coords_.at(static_cast<std::size_t>(position)) = std::move(value);
}

bool VectorFunction::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

VectorFunction VectorFunction::operator+(const VectorFunction& other) const {
  if (rank_ != other.rank_ || ambient_ != other.ambient_)
    throw std::invalid_argument("rank or ambient mismatch");
  VectorFunction out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += other.coords_[i];
  return out;
}

VectorFunction VectorFunction::operator*(const Rational& scale) const {
  VectorFunction out = *this;
  for (auto& c : out.coords_) c = c * scale;
  return out;
}

std::string VectorFunction::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) os << ", ";
    os << coords_[i].str();
  }
  os << ")";
  return os.str();
}

VectorFunction presentation(const KForm& w) {
  const auto indices = enumerate_multiindices(w.degree(), w.ambient());
  std::vector<Polynomial> coords;
  coords.reserve(indices.size());
  for (const auto& index : indices) coords.push_back(w.coefficient(index));
  return VectorFunction(w.degree(), w.ambient(), std::move(coords));
}

KForm presentation_inverse(const VectorFunction& f) {
  KForm w(f.rank(), f.ambient());
  const auto indices = enumerate_multiindices(f.rank(), f.ambient());
  for (std::size_t r = 0; r < indices.size(); ++r) w.add_term(indices[r], f.coordinate(r));
  return w;
}

OperationDescriptor make_operation(int n, int index) {
  if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  if (index < 0 || index > n) throw std::out_of_range("operation index must be in 0..n");
  const int m = n / 2;
  if (index == 0) return {0, n, 0, 0, OperationKind::directional};
  if (index <= m) return {index, n, index - 1, index, OperationKind::ascending};
  if (index == m + 1) {
    if (n % 2 == 0) return {index, n, m, m - 1, OperationKind::middle};
    return {index, n, m, m, OperationKind::middle};
  }
  const int j = n - index;
  return {index, n, j + 1, j, OperationKind::descending};
}

std::vector<OperationDescriptor> build_operations(int n, bool with_directional) {
  if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  std::vector<OperationDescriptor> out;
  out.reserve(static_cast<std::size_t>(n) + (with_directional ? 1 : 0));
  for (int index = with_directional ? 0 : 1; index <= n; ++index)
    out.push_back(make_operation(n, index));
  return out;
}

bool composable(const OperationDescriptor& a, const OperationDescriptor& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch");
  return b.domain_rank == a.codomain_rank;
}

VectorFunction apply(const OperationDescriptor& op, const VectorFunction& f) {
  if (f.ambient() != op.ambient) throw std::invalid_argument("ambient mismatch");
  if (f.rank() != op.domain_rank) throw std::invalid_argument("rank mismatch");
  const int n = op.ambient;
  const int m = n / 2;
  switch (op.kind) {
    case OperationKind::directional: {
      const Polynomial& g = f.coordinate(0);
      Polynomial out;
      for (int i = 1; i <= n; ++i) out += g.partial(i) * Polynomial::direction(i);
      return VectorFunction(0, n, {out});
    }
    case OperationKind::ascending:
      return presentation(exterior_derivative(presentation_inverse(f)));
    case OperationKind::middle: {
      const KForm raised = exterior_derivative(presentation_inverse(f));
      const int target = n % 2 == 0 ? m - 1 : m;
      return presentation(hodge_star_inverse(raised, target));
    }
    case OperationKind::descending: {
      const int j = n - op.index;
      KForm w = hodge_star(presentation_inverse(f));
      w = exterior_derivative(w);
      return presentation(hodge_star_inverse(w, j));
    }
  }
  throw std::logic_error("unreachable");
}

VectorFunction apply_sequence(const std::vector<int>& seq, const VectorFunction& f, int n) {
  VectorFunction current = f;
  for (int index : seq) current = apply(make_operation(n, index), current);
  return current;
}

Polynomial dot_direction(const VectorFunction& f) {
  if (f.rank() != 1) throw std::invalid_argument("dot with e needs a rank-1 function");
  Polynomial out;
  for (int i = 0; i < f.ambient(); ++i)
    out += f.coordinate(i) * Polynomial::direction(i + 1);
  return out;
}

bool nontrivial_pair(int i, int j, int n) {
  if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  if (i < 0 || i > n || j < 0 || j > n) throw std::out_of_range("operation index must be in 0..n");
  return (i == 0 && j == 0) || (i == 0 && j == 1) || (i == n && j == 0) ||
         (i + j == n + 1 && 2 * i != n);
}

std::vector<int> alternating_sequence(int i, int k, int n) {
  if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  if (i < 1 || i > n) throw std::out_of_range("start index must be in 1..n");
  if (k < 1) throw std::invalid_argument("order must be >= 1");
  if (2 * i == n || 2 * (i - 1) == n)
    throw std::invalid_argument("start index excluded: its alternating pattern breaks off");
  std::vector<int> seq(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) seq[t] = t % 2 == 0 ? i : n + 1 - i;
  return seq;
}

std::vector<std::vector<int>> nontrivial_sequences(int n, int k) {
  if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  if (k < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> seq(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) seq[t] = t % 2 == 0 ? i : n + 1 - i;
    bool walk = true;
    for (int t = 0; t + 1 < k; ++t) {
      if (!nontrivial_pair(seq[t], seq[t + 1], n)) {
        walk = false;
        break;
      }
    }
    if (walk) out.push_back(std::move(seq));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_trivial_composition(const std::vector<int>& seq, int n) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  std::vector<OperationDescriptor> ops;
  ops.reserve(seq.size());
  for (int index : seq) ops.push_back(make_operation(n, index));
  for (std::size_t t = 0; t + 1 < ops.size(); ++t)
    if (!composable(ops[t], ops[t + 1]))
      throw std::invalid_argument("sequence is not type-composable");

  const int k = static_cast<int>(seq.size());
  const int domain_rank = ops.front().domain_rank;
  const long long slots = binomial(n, domain_rank);
  // One single-monomial coordinate at a time; degree up to the composition
  // order k is exactly what a constant-coefficient operator of order <= k
  // needs to be pinned down.
  for (const Monomial& mono : monomials_up_to_degree(n, k)) {
    for (long long s = 0; s < slots; ++s) {
      VectorFunction input(domain_rank, n);
      input.set_coordinate(static_cast<int>(s), Polynomial(mono, 1));
      VectorFunction current = input;
      for (const auto& op : ops) current = apply(op, current);
      if (!current.is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> composable_sequences(int n, int k, Family family) {
  if (k < 1) throw std::invalid_argument("order must be >= 1");
  const auto ops = build_operations(n, family == Family::B);
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  const auto extend = [&](auto&& self, int codomain_rank) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (const auto& op : ops) {
      if (!current.empty() && op.domain_rank != codomain_rank) continue;
      current.push_back(op.index);
      self(self, op.codomain_rank);
      current.pop_back();
    }
  };
  extend(extend, -1);
  return out;
}

std::string sequence_str(const std::vector<int>& seq) {
  std::ostringstream os;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (it != seq.rbegin()) os << " ∘ ";
    os << "∇" << *it;
  }
  return os.str();
}

}  // namespace excal
