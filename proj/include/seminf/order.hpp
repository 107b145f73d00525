#ifndef SEMINF_ORDER_HPP
#define SEMINF_ORDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seminf/algebra.hpp"

namespace seminf {

/// The natural partial order of an inverse semigroup: a <= b iff a = e.b for
/// some idempotent e. Holds a non-owning reference to the algebra; keep the
/// algebra alive for as long as the order is used.
class NaturalOrder {
public:
  explicit NaturalOrder(const FiniteAlgebra& algebra);

  const FiniteAlgebra& algebra() const { return *algebra_; }
  int size() const { return n_; }

  bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }

  /// Greatest lower bound of {a, b} when it exists.
  std::optional<int> infimum(int a, int b) const;

  /// Covering pairs (a, b): a < b with nothing strictly between,
  /// ordered by (a, b).
  std::vector<std::pair<int, int>> covers() const;

private:
  const FiniteAlgebra* algebra_;
  int n_;
  std::vector<std::uint8_t> leq_;
};

/// Computes the order; derives the inverse map first when the algebra lacks
/// one (propagating its errors).
NaturalOrder natural_order(const FiniteAlgebra& s);

/// Hasse diagram in DOT format: nodes labeled by element name, edges are the
/// covering relations only, drawn bottom-up.
std::string hasse_dot(const NaturalOrder& order);

}  // namespace seminf

#endif  // SEMINF_ORDER_HPP
