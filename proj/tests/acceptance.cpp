// Acceptance suite: runs every shipping criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. The first argument is the
// path to the seminf CLI binary; CLI-facing criteria shell out to it.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "seminf/algebra_io.hpp"
#include "seminf/engine.hpp"
#include "seminf/order.hpp"
#include "seminf/rng.hpp"
#include "seminf/term.hpp"
#include "seminf/verify.hpp"

namespace fs = std::filesystem;
using namespace seminf;
using namespace seminf::testing;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
fs::path g_workdir;
int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const fs::path out_file = g_workdir / "cli_stdout.txt";
  const std::string command = g_cli + " " + args + " > " +
                              out_file.string() + " 2>/dev/null";
  const int raw = std::system(command.c_str());
  CliResult result;
  result.exit_code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.out = buf.str();
  return result;
}

void report(int criterion, const std::string& label, bool pass,
            const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << label;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

void criterion1_b21_construction() {
  const auto start = Clock::now();
  const CliResult cli = run_cli("gen b21");
  bool pass = cli.exit_code == 0;
  std::string detail;

  std::istringstream in(cli.out);
  try {
    const AlgebraFile file = read_algebra_file(in);
    const FiniteAlgebra& s = file.algebra;
    pass = pass && s.size() == 6;
    const int z = s.element_index("0"), e12 = s.element_index("E12"),
              e21 = s.element_index("E21");
    pass = pass && z >= 0 && e12 >= 0 && e21 >= 0;
    if (pass) {
      pass = pass && s.product(s.product(e12, e21), e12) == e12;
      pass = pass && s.product(s.product(e21, e12), e21) == e21;
      pass = pass && s.product(e12, e12) == z && s.product(e21, e21) == z;
      const std::vector<int> inv = inverse_map(s);
      int fixed = 0;
      for (int a = 0; a < 6; ++a) fixed += inv[a] == a;
      pass = pass && fixed == 4 && inv[e12] == e21 && inv[e21] == e12;
    }
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 1.0;
  if (detail.empty())
    detail = "6 elements, presentation holds, " + std::to_string(elapsed) +
             " s";
  report(1, "gen b21 builds the 6-element Brandt monoid", pass, detail);
}

void criterion2_lemma1_on_b21() {
  const auto start = Clock::now();
  FiniteAlgebra s = brandt_b21().base;
  const AiAdditionTable derived = derive_addition(s, 2);
  s.add = derived.table;
  bool pass = verify_ai_semiring(s).all_pass();
  const NaturalOrder order = natural_order(s);
  int agreeing = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      agreeing += order.infimum(a, b) == std::optional<int>(s.sum(a, b));
  pass = pass && agreeing == 36;
  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 1.0;
  report(2, "derived addition on b21 passes all axioms and is the infimum",
         pass, std::to_string(agreeing) + "/36 pairs, " +
                   std::to_string(elapsed) + " s");
}

void criterion3_uniqueness() {
  const auto start = Clock::now();
  const CliResult cli = run_cli("additions --algebra b21");
  bool pass = cli.exit_code == 0;
  pass = pass && cli.out.find("1 addition(s)") != std::string::npos;

  // The printed table must be the derived one.
  const FiniteAlgebra b21 = brandt_b21().base;
  const AiAdditionTable derived = derive_addition(b21, 2);
  std::ostringstream expected;
  for (int a = 0; a < 6; ++a) {
    expected.str("");
    expected << "  ";
    for (int b = 0; b < 6; ++b)
      expected << (b ? " " : "")
               << b21.elements[derived.table[a * 6 + b]];
    pass = pass && cli.out.find(expected.str()) != std::string::npos;
  }

  // Exhaustive-oracle cross-check on small algebras.
  const FiniteAlgebra zoo[] = {trivial_algebra(),    chain_semilattice(2),
                               chain_semilattice(4), left_zero(3),
                               cyclic_group(2),      cyclic_group(3),
                               null_semigroup(4)};
  for (const FiniteAlgebra& small : zoo) {
    const auto naive = naive_all_additions(small);
    const auto found = find_all_ai_additions(small);
    bool same = naive.size() == found.size();
    for (std::size_t i = 0; same && i < naive.size(); ++i)
      same = found[i].table == naive[i];
    pass = pass && same;
  }
  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 10.0;
  report(3, "b21 has exactly the derived addition; search matches the "
            "naive oracle up to size 4",
         pass, std::to_string(elapsed) + " s");
}

void criterion4_cn_construction() {
  bool pass = true;
  std::string detail;
  for (const auto& [n, expected] : {std::pair{2, 34}, std::pair{3, 62}}) {
    const CliResult cli =
        run_cli("gen cn --n " + std::to_string(n) + " --no-cache");
    pass = pass && cli.exit_code == 0;
    std::istringstream in(cli.out);
    const AlgebraFile file = read_algebra_file(in);
    const FiniteAlgebra& s = file.algebra;

    std::vector<MapInj> gens;
    for (int k = 1; k <= n; ++k) gens.push_back(map_ck(n, k));
    const std::size_t oracle_size = naive_closure(gens).size();
    pass = pass && static_cast<int>(oracle_size) == expected;
    pass = pass && s.size() == expected;

    try {
      inverse_map(s);
    } catch (const Error&) {
      pass = false;
    }
    for (int x = 0; x < s.size(); ++x)
      pass = pass && s.power(x, 2) == s.power(x, 3);
    detail += (detail.empty() ? "" : ", ") + std::string("|c") +
              std::to_string(n) + "| = " + std::to_string(s.size());
  }
  report(4, "gen cn matches the naive closure oracle and satisfies "
            "x^2 = x^3 with unique inverses",
         pass, detail);
}

void criterion5_mk_closure() {
  bool pass = true;
  for (int n : {2, 3}) {
    const GeneratedAlgebra c = cn(n);
    for (int k = 1; k <= n; ++k) {
      const std::vector<int> subset = mk_indices(c, k);
      pass = pass && static_cast<int>(subset.size()) == c.base.size() - 2;
      pass = pass && is_subuniverse(c.base, subset, true);
    }
  }
  report(5, "every M_k(n) for n in {2,3} has |C_n| - 2 elements and is "
            "closed under product and inverse",
         pass);
}

void criterion6_power_invariance() {
  bool pass = true;
  for (const FiniteAlgebra& plain : {brandt_b21().base, cn(2).base}) {
    FiniteAlgebra s = plain;
    if (!s.has_inv()) s.inv = inverse_map(s);
    const int index = aperiodic_index(s);
    const AiAdditionTable base_table = derive_addition(s, index);
    for (int m = index; m <= index + 3; ++m)
      pass = pass && derive_addition(s, m).table == base_table.table;
  }
  report(6, "derive_addition is invariant for powers index..index+3 on "
            "b21 and c2",
         pass);
}

void criterion7_elimination_soundness() {
  FiniteAlgebra semiring = brandt_b21().base;
  semiring.add = derive_addition(semiring, 2).table;
  const FiniteAlgebra& plain = brandt_b21().base;

  const std::vector<TermPtr> terms =
      enumerate_terms(2, 5, TermSignature{true, true, true});
  const std::vector<std::string> varlist = canonical_varlist(2);
  std::uint64_t mismatches = 0, compared = 0;
  for (const TermPtr& t : terms) {
    const TermPtr rewritten = eliminate_addition(t, 2);
    const Fingerprint a = fingerprint(semiring, *t, varlist);
    const Fingerprint b = fingerprint(plain, *rewritten, varlist);
    compared += a.values().size();
    if (!(a == b)) ++mismatches;
  }
  report(7, "eliminating + preserves every value over all terms with <= 2 "
            "vars and size <= 5",
         mismatches == 0,
         std::to_string(terms.size()) + " terms, " +
             std::to_string(compared) + " evaluations, " +
             std::to_string(mismatches) + " mismatches");
}

void criterion8_theorem_mechanics() {
  const auto start = Clock::now();
  const TransferProbeReport probe = identity_transfer_probe(2, 5, 3);
  bool pass = probe.violations == 0 && probe.identities_checked > 0;

  VerifyOptions opt;
  opt.n = 3;
  opt.vars = 2;
  opt.max_size = 5;
  opt.evaluations_per_identity = 1000;
  const SuiteReport suite = verify_theorem_mechanics(opt);
  pass = pass && suite.all_pass();
  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 300.0;
  report(8, "theorem mechanics end-to-end at n = 3", pass,
         std::to_string(probe.identities_checked) +
             " transferred identities, " + std::to_string(elapsed) + " s");
}

void criterion9_parser_round_trip() {
  Rng rng(2024);
  const std::vector<std::string> names = {"x", "y", "z", "w1", "v_a"};
  std::function<TermPtr(int)> random_term = [&](int depth) -> TermPtr {
    if (depth == 0 || rng.below(4) == 0)
      return Term::make_var(names[rng.below(names.size())]);
    switch (rng.below(3)) {
      case 0:
        return Term::make_mul(random_term(depth - 1), random_term(depth - 1));
      case 1:
        return Term::make_add(random_term(depth - 1), random_term(depth - 1));
      default:
        return Term::make_inv(random_term(depth - 1));
    }
  };
  std::uint64_t mismatches = 0;
  for (int round = 0; round < 10'000; ++round) {
    const TermPtr t = random_term(6);
    if (!parse_term(print_term(t))->equals(*t)) ++mismatches;
  }

  const char* malformed[] = {"",       "x*",    "(x",    ")",     "x$",
                             "3x",     "x++y",  "x = ",  "= x",   "x'y",
                             "x (y)",  "x*()",  "x =",   "(x))",  "x'' = "};
  bool errors_positioned = true;
  for (const char* text : malformed) {
    try {
      (void)parse(text);
      errors_positioned = false;  // every sample above is malformed
    } catch (const ParseError& e) {
      errors_positioned =
          errors_positioned && e.offset <= std::string(text).size() &&
          !e.expected.empty();
    } catch (...) {
      errors_positioned = false;
    }
  }
  report(9, "10^4 parser round-trips and positioned errors on malformed "
            "input",
         mismatches == 0 && errors_positioned,
         std::to_string(mismatches) + " mismatches");
}

void criterion10_determinism() {
  bool pass = true;
  const std::vector<std::string> pairs[] = {
      {"additions --algebra b21 --jobs 1", "additions --algebra b21 --jobs 8"},
      {"gen cn --n 2 --no-cache --jobs 1", "gen cn --n 2 --no-cache --jobs 8"},
      {"verify theorem-mechanics --n 3 --jobs 1",
       "verify theorem-mechanics --n 3 --jobs 8"},
  };
  for (const auto& pair : pairs) {
    const CliResult one = run_cli(pair[0]);
    const CliResult eight = run_cli(pair[1]);
    pass = pass && one.exit_code == eight.exit_code && one.out == eight.out &&
           !one.out.empty();
  }
  report(10, "additions, gen cn and theorem-mechanics reports are "
             "byte-identical at --jobs 1 and --jobs 8",
         pass);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: seminf_acceptance <path-to-seminf-cli>\n";
    return 2;
  }
  g_cli = argv[1];
  g_workdir = fs::temp_directory_path() / "seminf_acceptance";
  fs::create_directories(g_workdir);
  // Keep CLI runs hermetic: cache inside the scratch directory.
  setenv("SEMINF_CACHE_DIR", (g_workdir / "cache").string().c_str(), 1);

  criterion1_b21_construction();
  criterion2_lemma1_on_b21();
  criterion3_uniqueness();
  criterion4_cn_construction();
  criterion5_mk_closure();
  criterion6_power_invariance();
  criterion7_elimination_soundness();
  criterion8_theorem_mechanics();
  criterion9_parser_round_trip();
  criterion10_determinism();

  std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " +
                                      std::to_string(g_failures) +
                                      " criterion(s) failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
