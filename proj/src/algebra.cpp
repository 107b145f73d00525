#include "seminf/algebra.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "strings.hpp"

namespace seminf {

int FiniteAlgebra::element_index(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == name) return i;
  return -1;
}

FiniteAlgebra validate_table(std::string name,
                             std::vector<std::string> elements,
                             std::vector<int> mul) {
  const int n = static_cast<int>(elements.size());
  std::unordered_set<std::string_view> seen;
  for (const auto& e : elements) {
    if (e.empty()) throw DuplicateNameError("empty element name");
    if (!seen.insert(e).second)
      throw DuplicateNameError(concat("duplicate element name '", e, "'"));
  }
  if (mul.size() != static_cast<std::size_t>(n) * n)
    throw BadIndexError(concat("multiplication table has ", mul.size(),
                               " entries, expected ", n * n));
  for (int v : mul)
    if (v < 0 || v >= n)
      throw BadIndexError(concat("table entry ", v, " out of range 0..",
                                 n - 1));

  FiniteAlgebra s;
  s.name = std::move(name);
  s.elements = std::move(elements);
  s.mul = std::move(mul);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = s.product(a, b);
      for (int c = 0; c < n; ++c)
        if (s.product(ab, c) != s.product(a, s.product(b, c)))
          throw NonAssociativeError(
              a, b, c,
              concat("not associative at (", s.elements[a], ", ",
                     s.elements[b], ", ", s.elements[c], "): (ab)c = ",
                     s.elements[s.product(ab, c)], " but a(bc) = ",
                     s.elements[s.product(a, s.product(b, c))]));
    }
  return s;
}

std::vector<int> inverse_map(const FiniteAlgebra& s) {
  const int n = s.size();
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int y = 0; y < n; ++y) {
      if (s.product(s.product(a, y), a) == a &&
          s.product(s.product(y, a), y) == y) {
        if (found >= 0)
          throw NonUniqueInverseError(
              a, found, y,
              concat("element ", s.elements[a], " has several inverses: ",
                     s.elements[found], " and ", s.elements[y]));
        found = y;
      }
    }
    if (found < 0)
      throw NoInverseError(a, concat("element ", s.elements[a],
                                     " has no inverse"));
    inv[a] = found;
  }
  return inv;
}

std::vector<int> idempotents(const FiniteAlgebra& s) {
  std::vector<int> out;
  for (int a = 0; a < s.size(); ++a)
    if (s.product(a, a) == a) out.push_back(a);
  return out;
}

int aperiodic_index(const FiniteAlgebra& s) {
  // For each x the power sequence stabilizes iff its cycle has length 1;
  // the answer is the largest stabilization point.
  const int n = s.size();
  int index = 1;
  for (int x = 0; x < n; ++x) {
    int p = x;
    int k = 1;
    for (; k <= n; ++k) {
      const int next = s.product(p, x);
      if (next == p) break;
      p = next;
    }
    if (k > n)
      throw NotAperiodicError(
          x, concat("no exponent up to ", n, " stabilizes ", s.elements[x],
                    "; the algebra contains a nontrivial subgroup"));
    index = std::max(index, k);
  }
  return index;
}

AiAdditionTable derive_addition(const FiniteAlgebra& s, int n) {
  if (n < 1) throw Error("derive_addition: exponent must be positive");
  std::vector<int> computed;
  if (!s.has_inv()) computed = inverse_map(s);
  const std::vector<int>& inv = s.has_inv() ? s.inv : computed;
  const int size = s.size();
  for (int x = 0; x < size; ++x)
    if (s.power(x, n) != s.power(x, n + 1))
      throw ExponentTooSmallError(
          x, concat("x^", n, " = x^", n + 1, " fails for x = ",
                    s.elements[x]));

  AiAdditionTable result;
  result.provenance = AiAdditionTable::Provenance::derived_from_power;
  result.table.resize(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      result.table[a * size + b] =
          s.product(s.power(s.product(a, inv[b]), n), a);
  return result;
}

namespace {

/// Backtracking state for the addition search. The table is symmetric with
/// a forced diagonal; assignments propagate the two distributivity laws as
/// forced cells and check associativity against already-known cells.
class AdditionSearch {
public:
  explicit AdditionSearch(const FiniteAlgebra& s)
      : s_(s), n_(s.size()), add_(static_cast<std::size_t>(n_) * n_, -1) {
    for (int i = 0; i < n_; ++i) set_raw(i, i, i);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) cells_.emplace_back(i, j);
  }

  std::vector<AiAdditionTable> run() {
    search(0);
    std::sort(results_.begin(), results_.end(),
              [](const AiAdditionTable& a, const AiAdditionTable& b) {
                return a.table < b.table;
              });
    return results_;
  }

private:
  int get(int i, int j) const { return add_[i * n_ + j]; }
  void set_raw(int i, int j, int v) { add_[i * n_ + j] = add_[j * n_ + i] = v; }

  /// Assigns i+j = v, propagating consequences. Returns false on conflict.
  /// Every cell set is recorded on the trail.
  bool assign(int i, int j, int v, std::vector<std::pair<int, int>>& trail) {
    const int cur = get(i, j);
    if (cur != -1) return cur == v;
    set_raw(i, j, v);
    trail.emplace_back(i, j);
    for (int c = 0; c < n_; ++c) {
      // c(i+j) = ci + cj and (i+j)c = ic + jc
      if (!assign(s_.product(c, i), s_.product(c, j), s_.product(c, v), trail))
        return false;
      if (!assign(s_.product(i, c), s_.product(j, c), s_.product(v, c), trail))
        return false;
      // (i+j)+c = i+(j+c) on cells already known
      const int jc = get(j, c);
      if (jc != -1) {
        const int l = get(v, c), r = get(i, jc);
        if (l != -1 && r != -1 && l != r) return false;
      }
      const int ic = get(i, c);
      if (ic != -1) {
        const int l = get(c, v), r = get(ic, j);
        if (l != -1 && r != -1 && l != r) return false;
      }
    }
    return true;
  }

  void undo(std::vector<std::pair<int, int>>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it)
      add_[it->first * n_ + it->second] = add_[it->second * n_ + it->first] =
          -1;
    trail.clear();
  }

  bool complete_table_valid() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const int ab = get(a, b);
        for (int c = 0; c < n_; ++c) {
          if (get(ab, c) != get(a, get(b, c))) return false;
          if (s_.product(c, ab) != get(s_.product(c, a), s_.product(c, b)))
            return false;
          if (s_.product(ab, c) != get(s_.product(a, c), s_.product(b, c)))
            return false;
        }
      }
    return true;
  }

  void search(std::size_t from) {
    while (from < cells_.size() &&
           get(cells_[from].first, cells_[from].second) != -1)
      ++from;
    if (from == cells_.size()) {
      if (complete_table_valid()) {
        AiAdditionTable t;
        t.table = add_;
        t.provenance = AiAdditionTable::Provenance::found_by_search;
        results_.push_back(std::move(t));
      }
      return;
    }
    const auto [i, j] = cells_[from];
    std::vector<std::pair<int, int>> trail;
    for (int v = 0; v < n_; ++v) {
      if (assign(i, j, v, trail)) search(from + 1);
      undo(trail);
    }
  }

  const FiniteAlgebra& s_;
  int n_;
  std::vector<int> add_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<AiAdditionTable> results_;
};

}  // namespace

std::vector<AiAdditionTable> find_all_ai_additions(const FiniteAlgebra& s) {
  return AdditionSearch(s).run();
}

std::optional<SubuniverseViolation> subuniverse_violation(
    const FiniteAlgebra& s, std::span<const int> subset, bool with_inverse) {
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<char> member(s.size(), 0);
  for (int a : sorted) {
    if (a < 0 || a >= s.size())
      throw BadIndexError(concat("subset element ", a, " out of range"));
    member[a] = 1;
  }
  for (int a : sorted)
    for (int b : sorted) {
      const int ab = s.product(a, b);
      if (!member[ab])
        return SubuniverseViolation{SubuniverseViolation::Kind::product, a, b,
                                    ab};
    }
  if (with_inverse) {
    const std::vector<int>& inv = s.has_inv() ? s.inv : inverse_map(s);
    for (int a : sorted)
      if (!member[inv[a]])
        return SubuniverseViolation{SubuniverseViolation::Kind::inverse, a, a,
                                    inv[a]};
  }
  return std::nullopt;
}

bool is_subuniverse(const FiniteAlgebra& s, std::span<const int> subset,
                    bool with_inverse) {
  return !subuniverse_violation(s, subset, with_inverse).has_value();
}

bool AiSemiringReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* AiSemiringReport::find(std::string_view axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

AiSemiringReport verify_ai_semiring(const FiniteAlgebra& s) {
  if (!s.has_add()) throw Error("verify_ai_semiring: no addition table");
  const int n = s.size();
  AiSemiringReport report;

  AxiomCheck comm;
  comm.axiom = "add-commutative";
  for (int a = 0; a < n && comm.pass; ++a)
    for (int b = 0; b < n; ++b)
      if (s.sum(a, b) != s.sum(b, a)) {
        comm.pass = false;
        comm.counterexample = {a, b};
        break;
      }
  report.checks.push_back(std::move(comm));

  AxiomCheck idem;
  idem.axiom = "add-idempotent";
  for (int a = 0; a < n; ++a)
    if (s.sum(a, a) != a) {
      idem.pass = false;
      idem.counterexample = {a};
      break;
    }
  report.checks.push_back(std::move(idem));

  AxiomCheck assoc;
  assoc.axiom = "add-associative";
  for (int a = 0; a < n && assoc.pass; ++a)
    for (int b = 0; b < n && assoc.pass; ++b)
      for (int c = 0; c < n; ++c)
        if (s.sum(s.sum(a, b), c) != s.sum(a, s.sum(b, c))) {
          assoc.pass = false;
          assoc.counterexample = {a, b, c};
          break;
        }
  report.checks.push_back(std::move(assoc));

  AxiomCheck ldist;
  ldist.axiom = "left-distributive";
  for (int a = 0; a < n && ldist.pass; ++a)
    for (int b = 0; b < n && ldist.pass; ++b)
      for (int c = 0; c < n; ++c)
        if (s.product(a, s.sum(b, c)) != s.sum(s.product(a, b),
                                               s.product(a, c))) {
          ldist.pass = false;
          ldist.counterexample = {a, b, c};
          break;
        }
  report.checks.push_back(std::move(ldist));

  AxiomCheck rdist;
  rdist.axiom = "right-distributive";
  for (int a = 0; a < n && rdist.pass; ++a)
    for (int b = 0; b < n && rdist.pass; ++b)
      for (int c = 0; c < n; ++c)
        if (s.product(s.sum(b, c), a) != s.sum(s.product(b, a),
                                               s.product(c, a))) {
          rdist.pass = false;
          rdist.counterexample = {b, c, a};
          break;
        }
  report.checks.push_back(std::move(rdist));

  return report;
}

FiniteAlgebra restrict_algebra(const FiniteAlgebra& s,
                               std::span<const int> subset, std::string name) {
  if (auto v = subuniverse_violation(s, subset, s.has_inv())) {
    if (v->kind == SubuniverseViolation::Kind::product)
      throw Error(concat("subset of ", s.name, " is not closed: ",
                         s.elements[v->a], " * ", s.elements[v->b],
                         " = ", s.elements[v->result]));
    throw Error(concat("subset of ", s.name, " is not closed: inverse of ",
                       s.elements[v->a], " is ", s.elements[v->result]));
  }
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const int k = static_cast<int>(sorted.size());
  std::vector<int> where(s.size(), -1);
  for (int i = 0; i < k; ++i) where[sorted[i]] = i;

  FiniteAlgebra r;
  r.name = std::move(name);
  r.elements.reserve(k);
  for (int a : sorted) r.elements.push_back(s.elements[a]);
  r.mul.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      r.mul[i * k + j] = where[s.product(sorted[i], sorted[j])];
  if (s.has_inv()) {
    r.inv.resize(k);
    for (int i = 0; i < k; ++i) r.inv[i] = where[s.inverse(sorted[i])];
  }
  if (s.has_add()) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (where[s.sum(sorted[i], sorted[j])] == -1)
          throw Error(concat("subset of ", s.name,
                             " is not closed under addition"));
    r.add.resize(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        r.add[i * k + j] = where[s.sum(sorted[i], sorted[j])];
  }
  return r;
}

}  // namespace seminf
