#ifndef SEMINF_ALGEBRA_HPP
#define SEMINF_ALGEBRA_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seminf/errors.hpp"

namespace seminf {

/// A finite algebra given by tables: named elements, an associative n x n
/// multiplication table, an optional inverse map and an optional addition
/// table. Element identity is the table index; names are labels only.
/// Instances are immutable by convention once built and safe to share
/// across threads.
struct FiniteAlgebra {
  std::string name;
  std::vector<std::string> elements;
  std::vector<int> mul;  // row-major n*n, mul[a*n+b] = a.b
  std::vector<int> inv;  // length n, or empty when absent
  std::vector<int> add;  // row-major n*n, or empty when absent

  int size() const { return static_cast<int>(elements.size()); }
  bool has_inv() const { return !inv.empty(); }
  bool has_add() const { return !add.empty(); }

  int product(int a, int b) const { return mul[a * size() + b]; }
  int inverse(int a) const { return inv[a]; }
  int sum(int a, int b) const { return add[a * size() + b]; }

  /// a^k for k >= 1.
  int power(int a, int k) const {
    int r = a;
    for (int i = 1; i < k; ++i) r = product(r, a);
    return r;
  }

  /// Index of the named element, or -1.
  int element_index(std::string_view name) const;
};

/// Builds a FiniteAlgebra after checking that names are unique and nonempty,
/// all table entries are in range, and multiplication is associative.
/// Throws NonAssociativeError with the first violating triple in index order,
/// BadIndexError, or DuplicateNameError.
FiniteAlgebra validate_table(std::string name,
                             std::vector<std::string> elements,
                             std::vector<int> mul);

/// The unique-inverse map of an inverse semigroup: inv[a] is the only y with
/// a.y.a = a and y.a.y = y. Throws NoInverseError or NonUniqueInverseError.
std::vector<int> inverse_map(const FiniteAlgebra& s);

/// All a with a.a = a, ascending.
std::vector<int> idempotents(const FiniteAlgebra& s);

/// Smallest n >= 1 with x^n = x^{n+1} for all x. The search is capped at
/// n = |S|: a finite semigroup failing x^|S| = x^{|S|+1} contains a
/// nontrivial subgroup and no exponent can work. Throws NotAperiodicError.
int aperiodic_index(const FiniteAlgebra& s);

/// An addition table together with how it was obtained.
struct AiAdditionTable {
  enum class Provenance { derived_from_power, found_by_search };
  std::vector<int> table;  // row-major n*n
  Provenance provenance = Provenance::derived_from_power;
};

/// The term-defined addition a (+) b = (a.b^-1)^n . a. Requires an inverse
/// map (computed on the fly when absent) and x^n = x^{n+1}; throws
/// ExponentTooSmallError otherwise.
AiAdditionTable derive_addition(const FiniteAlgebra& s, int n);

/// All binary operations + on S making (S,+) a semilattice over which
/// multiplication distributes on both sides. Backtracking over the upper
/// triangle with distributivity propagation; commutativity and idempotency
/// are imposed structurally. Results in lexicographic order of the flattened
/// table. An empty result is valid.
std::vector<AiAdditionTable> find_all_ai_additions(const FiniteAlgebra& s);

/// First witness that `subset` is not closed under product (or inverse).
struct SubuniverseViolation {
  enum class Kind { product, inverse };
  Kind kind;
  int a, b;    // offending pair (b == a for inverse violations)
  int result;  // the element that escapes the subset
};

/// Checks closure of `subset` under multiplication, and under inversion when
/// `with_inverse` is set. Returns the first violation in index order, or
/// nullopt when the subset is a subuniverse.
std::optional<SubuniverseViolation> subuniverse_violation(
    const FiniteAlgebra& s, std::span<const int> subset, bool with_inverse);

bool is_subuniverse(const FiniteAlgebra& s, std::span<const int> subset,
                    bool with_inverse);

/// Per-axiom outcome of the ai-semiring check. A failed axiom carries the
/// lexicographically first violating tuple.
struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::vector<int> counterexample;  // empty when pass
};

struct AiSemiringReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  const AxiomCheck* find(std::string_view axiom) const;
};

/// Checks add-commutative, add-idempotent, add-associative, left-distributive
/// and right-distributive on an algebra with an addition table. Failures are
/// data, not errors.
AiSemiringReport verify_ai_semiring(const FiniteAlgebra& s);

/// The subalgebra on `subset` (indices into s), renumbered 0..k-1 in the
/// given order, carrying over inverse and addition tables when present.
/// Throws Error when the subset is not closed.
FiniteAlgebra restrict_algebra(const FiniteAlgebra& s,
                               std::span<const int> subset, std::string name);

}  // namespace seminf

#endif  // SEMINF_ALGEBRA_HPP
