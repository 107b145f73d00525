#ifndef SEMINF_VERIFY_HPP
#define SEMINF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "seminf/engine.hpp"

namespace seminf {

struct SuiteLine {
  std::string label;
  bool pass = true;
  bool gating = true;  // informational lines never fail the suite
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteLine> lines;
  std::uint64_t seed = 0;

  bool all_pass() const;
};

struct VerifyOptions {
  int n = 2;
  int vars = 2;
  int max_size = 5;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = 1'000'000;
  int jobs = 1;
  /// Random evaluations per identity in the theorem-mechanics suite.
  int evaluations_per_identity = 1000;
};

/// Derived addition on B21 and C_n: all five ai-semiring axioms, agreement
/// with the natural-order infimum, order criteria and compatibility.
SuiteReport verify_lemma1(const VerifyOptions& opt);

/// C_n satisfies x^2 = x^3, every M_k(n) is an inverse subsemigroup of the
/// expected size; plus an informational bounded search for an identity
/// separating B21 from C_n.
SuiteReport verify_lemma2(const VerifyOptions& opt);

/// The rewriting/pigeonhole machinery end to end: the {mul,inv} spectrum of
/// B21 transfers to every M_k(n), the additive spectrum of (B21,+,.)
/// rewrites into inverse-semigroup identities that hold in B21, and seeded
/// random evaluations into C_n stay inside some M_k(n) and preserve the
/// identity.
SuiteReport verify_theorem_mechanics(const VerifyOptions& opt);

std::string format_suite(const SuiteReport& report);

}  // namespace seminf

#endif  // SEMINF_VERIFY_HPP
