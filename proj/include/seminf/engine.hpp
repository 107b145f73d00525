#ifndef SEMINF_ENGINE_HPP
#define SEMINF_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seminf/algebra.hpp"
#include "seminf/rook.hpp"
#include "seminf/term.hpp"

namespace seminf {

/// Operation subset for term enumeration: any of {mul, inv, add}.
struct TermSignature {
  bool mul = true;
  bool inv = false;
  bool add = false;

  /// Parses a comma list like "mul,inv". Throws Error on unknown names.
  static TermSignature parse(std::string_view text);
  std::string to_string() const;
};

/// A term flattened to a postorder program over variable slots; the hot
/// path for exhaustive evaluation.
class CompiledTerm {
public:
  CompiledTerm(const Term& t, std::span<const std::string> varlist);

  /// values[i] is the element assigned to varlist[i].
  int eval(const FiniteAlgebra& s, std::span<const int> values) const;

  bool uses_inv() const { return uses_inv_; }
  bool uses_add() const { return uses_add_; }

private:
  enum : std::int8_t { kLoad, kMul, kInv, kAdd };
  struct Op {
    std::int8_t code;
    int slot;  // for kLoad
  };
  std::vector<Op> ops_;
  int stack_need_ = 1;
  bool uses_inv_ = false, uses_add_ = false;
};

/// The value vector of a term over all |S|^v assignments, indexed with the
/// last variable fastest. Two terms over the same variable list satisfy
/// lhs = rhs in S iff their fingerprints are equal; the precomputed hash
/// makes grouping cheap, equality always confirms with the full vector.
class Fingerprint {
public:
  Fingerprint() = default;
  explicit Fingerprint(std::vector<int> values);

  std::span<const int> values() const { return values_; }
  std::size_t hash() const { return hash_; }

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.hash_ == b.hash_ && a.values_ == b.values_;
  }

private:
  std::vector<int> values_;
  std::size_t hash_ = 0;
};

Fingerprint fingerprint(const FiniteAlgebra& s, const Term& t,
                        std::span<const std::string> varlist, int jobs = 1);

/// Outcome of one exhaustive identity check.
struct CheckReport {
  bool holds = true;
  /// First violating assignment (variables in identity order); empty when
  /// the identity holds.
  std::vector<std::pair<std::string, int>> counterexample;
  /// Assignments examined up to the decision point: the counterexample's
  /// lexicographic rank plus one, or the full count. Independent of the
  /// degree of parallelism.
  std::uint64_t evaluations = 0;
  std::uint64_t total_assignments = 0;
};

/// Exhaustive check over all |S|^v assignments in lexicographic order (last
/// variable fastest); deterministic first counterexample. Throws
/// SignatureMismatchError when S lacks a required table.
CheckReport check_identity(const FiniteAlgebra& s, const Identity& id,
                           int jobs = 1);

/// Canonical variable names x1..xk used by the enumerators.
std::vector<std::string> canonical_varlist(int vars);

/// Structural order: Var < Inv < Mul < Add, children left to right,
/// variables by index. Returns <0, 0 or >0.
int term_compare(const Term& a, const Term& b);

/// All terms over the signature with at most `vars` variables (canonically
/// named, first occurrences in order x1, x2, ...) and size at most
/// `max_size`, ordered by size then by term_compare. Throws
/// BudgetExceededError past `budget` terms.
std::vector<TermPtr> enumerate_terms(int vars, int max_size,
                                     TermSignature signature,
                                     std::size_t budget = 1'000'000);

struct SpectrumOptions {
  int vars = 1;
  int max_size = 3;
  TermSignature signature;
  std::size_t term_budget = 1'000'000;
  int jobs = 1;
};

/// One fingerprint class; terms in enumeration order, the first is the
/// representative.
struct SpectrumClass {
  std::vector<TermPtr> terms;
  Fingerprint fp;
};

struct Spectrum {
  std::vector<std::string> varlist;
  std::vector<SpectrumClass> classes;  // ordered by representative
  std::size_t term_count = 0;
};

/// Groups all enumerated terms by their value vector over S. Every pair of
/// terms within a class is an identity of S.
Spectrum identity_spectrum(const FiniteAlgebra& s, const SpectrumOptions& opt);

/// The identities (representative = member) read off a spectrum, in
/// enumeration order of the member.
std::vector<Identity> spectrum_identities(const Spectrum& spectrum);

struct SeparationResult {
  Identity identity;
  /// Witness in B under which the two sides differ.
  std::vector<std::pair<std::string, int>> counterexample;
};

/// First pair (i, j) of enumerated terms, in lexicographic pair order, whose
/// fingerprints agree in A and differ in B. B-fingerprints are only taken
/// once A-equality is established.
std::optional<SeparationResult> find_separating_identity(
    const FiniteAlgebra& a, const FiniteAlgebra& b, const SpectrumOptions& opt);

/// Smallest k in 1..n such that neither c_k nor its inverse occurs among the
/// assigned values; nullopt when every k is blocked. `c` must carry its
/// generators (as produced by cn()).
std::optional<int> pigeonhole_witness(const GeneratedAlgebra& c,
                                      std::span<const int> values);

struct TransferProbeReport {
  int vars = 0, max_size = 0, n = 0;
  std::size_t spectrum_terms = 0;
  std::size_t spectrum_classes = 0;
  std::uint64_t identities_total = 0;
  std::uint64_t identities_checked = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t violations = 0;
  std::optional<Identity> first_violation;
  int first_violation_k = 0;
  std::vector<std::pair<std::string, int>> first_counterexample;
};

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::uint64_t kProbeSampleCap = 10'000;

/// Computes the identity spectrum of the inverse semigroup B21 over
/// {mul, inv} at the given bounds, then verifies every resulting identity on
/// every M_k(n). When more than kProbeSampleCap identities arise, verifies a
/// seeded uniform sample of that size instead.
TransferProbeReport identity_transfer_probe(int vars, int max_size, int n,
                                            std::uint64_t seed = kDefaultSeed,
                                            int jobs = 1,
                                            std::size_t term_budget = 1'000'000);

}  // namespace seminf

#endif  // SEMINF_ENGINE_HPP
