#include "seminf/order.hpp"

#include <sstream>

namespace seminf {

NaturalOrder::NaturalOrder(const FiniteAlgebra& algebra)
    : algebra_(&algebra), n_(algebra.size()) {
  // The relation is only a partial order over an inverse semigroup;
  // inverse_map throws when the algebra is not one.
  if (!algebra.has_inv()) inverse_map(algebra);

  const std::vector<int> idem = idempotents(algebra);
  leq_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int b = 0; b < n_; ++b)
    for (int e : idem) leq_[algebra.product(e, b) * n_ + b] = 1;
}

std::optional<int> NaturalOrder::infimum(int a, int b) const {
  // Greatest element of the common lower bounds, when one exists.
  int best = -1;
  for (int c = 0; c < n_; ++c)
    if (leq(c, a) && leq(c, b) && (best == -1 || leq(best, c))) best = c;
  if (best == -1) return std::nullopt;
  for (int c = 0; c < n_; ++c)
    if (leq(c, a) && leq(c, b) && !leq(c, best)) return std::nullopt;
  return best;
}

std::vector<std::pair<int, int>> NaturalOrder::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < n_ && covering; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) covering = false;
      if (covering) out.emplace_back(a, b);
    }
  return out;
}

NaturalOrder natural_order(const FiniteAlgebra& s) { return NaturalOrder(s); }

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string hasse_dot(const NaturalOrder& order) {
  const FiniteAlgebra& s = order.algebra();
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int a = 0; a < order.size(); ++a)
    out << "  " << dot_quote(s.elements[a]) << ";\n";
  for (const auto& [lo, hi] : order.covers())
    out << "  " << dot_quote(s.elements[lo]) << " -> "
        << dot_quote(s.elements[hi]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace seminf
