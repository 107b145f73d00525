// seminf: build finite inverse-semigroup and semiring algebras from rook
// matrices, check identities exhaustively, search additions and separating
// identities, and run the bundled verification suites.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "seminf/algebra_io.hpp"
#include "seminf/engine.hpp"
#include "seminf/order.hpp"
#include "seminf/parallel.hpp"
#include "seminf/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace seminf;

namespace {

enum ExitCode { kOk = 0, kNegative = 1, kError = 2 };

struct GlobalOptions {
  int jobs = default_jobs();
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
};

void emit(const std::string& text, const std::optional<std::string>& out) {
  if (!out || *out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(*out, std::ios::binary);
  if (!file) throw IoError("cannot write " + *out);
  file << text;
}

fs::path cache_directory() {
  if (const char* env = std::getenv("SEMINF_CACHE_DIR")) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return fs::path(xdg) / "seminf";
  if (const char* home = std::getenv("HOME"))
    return fs::path(home) / ".cache" / "seminf";
  return fs::path(".seminf-cache");
}

/// Resolves --algebra arguments: an existing file wins, otherwise the
/// builtin names b21, cn<N> and mk<N>.<K> are constructed on the fly.
AlgebraFile resolve_algebra(const std::string& spec, std::size_t budget) {
  if (fs::exists(spec)) return load_algebra_file(spec);
  auto as_file = [](const GeneratedAlgebra& g) {
    AlgebraFile file;
    file.algebra = g.base;
    file.matrices = g.reps;
    file.generators = g.generators;
    return file;
  };
  if (spec == "b21") return as_file(brandt_b21());
  if (spec.starts_with("cn")) {
    try {
      return as_file(cn(std::stoi(spec.substr(2)), budget));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  if (spec.starts_with("mk")) {
    const std::size_t dot = spec.find('.');
    if (dot != std::string::npos) {
      try {
        const int n = std::stoi(spec.substr(2, dot - 2));
        const int k = std::stoi(spec.substr(dot + 1));
        AlgebraFile file;
        file.algebra = mk_algebra(cn(n, budget), k);
        return file;
      } catch (const std::invalid_argument&) {
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw IoError("no such file or builtin algebra: " + spec +
                " (builtins: b21, cn<N>, mk<N>.<K>)");
}

json counterexample_json(const FiniteAlgebra& s,
                         const std::vector<std::pair<std::string, int>>& cex) {
  if (cex.empty()) return nullptr;
  json out = json::object();
  for (const auto& [var, value] : cex) out[var] = s.elements[value];
  return out;
}

std::string counterexample_text(
    const FiniteAlgebra& s,
    const std::vector<std::pair<std::string, int>>& cex) {
  std::string out;
  for (const auto& [var, value] : cex) {
    if (!out.empty()) out += ", ";
    out += var + " = " + s.elements[value];
  }
  return out;
}

std::string table_row(const FiniteAlgebra& s, const std::vector<int>& table,
                      int row) {
  std::string out;
  for (int b = 0; b < s.size(); ++b) {
    if (b) out += ' ';
    out += s.elements[table[row * s.size() + b]];
  }
  return out;
}

json suite_json(const SuiteReport& report) {
  json lines = json::array();
  for (const auto& line : report.lines)
    lines.push_back({{"label", line.label},
                     {"pass", line.pass},
                     {"gating", line.gating},
                     {"detail", line.detail}});
  return json{{"verdict", report.all_pass() ? "pass" : "fail"},
              {"counterexample", nullptr},
              {"counts", {{"lines", report.lines.size()}}},
              {"seed", report.seed},
              {"suite", report.suite},
              {"lines", lines}};
}

int run(int argc, char** argv) {
  CLI::App app{"workbench for finite inverse semigroups and additively "
               "idempotent semirings"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--jobs,-j", global.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", global.format, "report format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--seed", global.seed, "seed for sampled searches");

  // ---- gen ------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "construct and export an algebra");
  gen->require_subcommand(1);

  std::optional<std::string> gen_out;
  auto* gen_b21 = gen->add_subcommand("b21", "the 6-element Brandt monoid");
  gen_b21->add_option("--out", gen_out, "output file (default stdout)");

  int cn_n = 2;
  std::size_t cn_budget = 1'000'000;
  bool no_cache = false;
  auto* gen_cn = gen->add_subcommand("cn", "the rook semigroup C_n");
  gen_cn->add_option("--n", cn_n, "index n >= 2")->required();
  gen_cn->add_option("--budget", cn_budget, "closure element budget");
  gen_cn->add_option("--out", gen_out, "output file (default stdout)");
  gen_cn->add_flag("--no-cache", no_cache, "bypass the generation cache");

  int mk_n = 2, mk_k = 1;
  auto* gen_mk = gen->add_subcommand("mk", "M_k(n), C_n without c_k, c_k^-1");
  gen_mk->add_option("--n", mk_n, "index n >= 2")->required();
  gen_mk->add_option("--k", mk_k, "dropped generator, 1..n")->required();
  gen_mk->add_option("--out", gen_out, "output file (default stdout)");

  // ---- derive-add ------------------------------------------------------
  std::string alg_spec;
  std::optional<int> power;
  std::optional<std::string> derive_out;
  auto* derive = app.add_subcommand(
      "derive-add", "attach the derived addition (x y^-1)^n x");
  derive->add_option("--algebra", alg_spec, "algebra file or builtin name")
      ->required();
  derive->add_option("--power", power, "exponent (default: aperiodic index)");
  derive->add_option("--out", derive_out, "output file (default stdout)");

  // ---- additions -------------------------------------------------------
  auto* additions =
      app.add_subcommand("additions", "search every ai-semiring addition");
  additions->add_option("--algebra", alg_spec, "algebra file or builtin name")
      ->required();

  // ---- order -----------------------------------------------------------
  std::optional<std::string> dot_out;
  auto* order_cmd =
      app.add_subcommand("order", "natural partial order and Hasse diagram");
  order_cmd->add_option("--algebra", alg_spec, "algebra file or builtin name")
      ->required();
  order_cmd->add_option("--dot", dot_out, "write the Hasse diagram here");

  // ---- check -----------------------------------------------------------
  std::string identity_text;
  std::optional<std::string> identities_file;
  auto* check = app.add_subcommand("check", "exhaustively check an identity");
  check->add_option("--algebra", alg_spec, "algebra file or builtin name")
      ->required();
  auto* check_arg = check->add_option("identity", identity_text,
                                      "identity, e.g. \"x*x = x*x*x\"");
  check->add_option("--identities", identities_file,
                    "file with one identity per line ('#' comments)")
      ->excludes(check_arg);

  // ---- spectrum ----------------------------------------------------------
  int vars = 1, max_size = 3;
  std::string signature = "mul";
  std::size_t term_budget = 1'000'000;
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "partition bounded terms into identity classes");
  spectrum_cmd->add_option("--algebra", alg_spec, "algebra file or builtin")
      ->required();
  spectrum_cmd->add_option("--vars", vars, "variable bound")->required();
  spectrum_cmd->add_option("--max-size", max_size, "term size bound")
      ->required();
  spectrum_cmd->add_option("--signature", signature,
                           "comma list from mul,inv,add")
      ->required();
  spectrum_cmd->add_option("--budget", term_budget, "term count budget");

  // ---- separate ----------------------------------------------------------
  std::string holds_spec, fails_spec;
  auto* separate = app.add_subcommand(
      "separate", "find an identity holding in one algebra, failing in "
                  "another");
  separate->add_option("--holds-in", holds_spec, "algebra file or builtin")
      ->required();
  separate->add_option("--fails-in", fails_spec, "algebra file or builtin")
      ->required();
  separate->add_option("--vars", vars, "variable bound")->required();
  separate->add_option("--max-size", max_size, "term size bound")->required();
  separate->add_option("--signature", signature,
                       "comma list from mul,inv,add")
      ->required();
  separate->add_option("--budget", term_budget, "term count budget");

  // ---- verify ------------------------------------------------------------
  std::string suite_name;
  int verify_n = 2;
  int verify_vars = 2, verify_max_size = 5;
  std::size_t verify_budget = 1'000'000;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_name, "lemma1, lemma2 or "
                                          "theorem-mechanics")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma2", "theorem-mechanics"}));
  verify->add_option("--n", verify_n, "index n >= 2")->required();
  verify->add_option("--vars", verify_vars,
                     "variable bound (theorem-mechanics)");
  verify->add_option("--max-size", verify_max_size,
                     "term size bound (theorem-mechanics)");
  verify->add_option("--budget", verify_budget, "element/term budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 prints its own message; fold every usage problem into code 2,
    // except the help pseudo-error.
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  const bool as_json = global.format == "json";

  if (gen_b21->parsed()) {
    emit(to_algebra_text(brandt_b21()), gen_out);
    return kOk;
  }

  if (gen_cn->parsed()) {
    const fs::path cache =
        cache_directory() /
        ("cn_" + std::to_string(cn_n) + "_" + std::to_string(cn_budget) +
         ".alg");
    if (!no_cache && fs::exists(cache)) {
      const AlgebraFile cached = load_algebra_file(cache);
      emit(to_algebra_text(to_generated(cached)), gen_out);
      return kOk;
    }
    const GeneratedAlgebra c = cn(cn_n, cn_budget);
    const std::string text = to_algebra_text(c);
    if (!no_cache) {
      std::error_code ec;
      fs::create_directories(cache.parent_path(), ec);
      if (!ec) {
        std::ofstream out(cache, std::ios::binary);
        out << text;
      }
    }
    emit(text, gen_out);
    return kOk;
  }

  if (gen_mk->parsed()) {
    emit(to_algebra_text(mk_algebra(cn(mk_n, cn_budget), mk_k)), gen_out);
    return kOk;
  }

  if (derive->parsed()) {
    AlgebraFile file = resolve_algebra(alg_spec, cn_budget);
    FiniteAlgebra& s = file.algebra;
    if (!s.has_inv()) s.inv = inverse_map(s);
    const int n = power ? *power : aperiodic_index(s);
    s.add = derive_addition(s, n).table;
    if (file.has_matrices()) {
      GeneratedAlgebra g = to_generated(file);
      emit(to_algebra_text(g), derive_out);
    } else {
      emit(to_algebra_text(s), derive_out);
    }
    return kOk;
  }

  if (additions->parsed()) {
    const AlgebraFile file = resolve_algebra(alg_spec, cn_budget);
    const FiniteAlgebra& s = file.algebra;
    const std::vector<AiAdditionTable> found = find_all_ai_additions(s);
    if (as_json) {
      json tables = json::array();
      for (const auto& t : found) {
        json rows = json::array();
        for (int a = 0; a < s.size(); ++a)
          rows.push_back(table_row(s, t.table, a));
        tables.push_back(rows);
      }
      json report{{"verdict", found.empty() ? "none" : "found"},
                  {"counterexample", nullptr},
                  {"counts", {{"additions", found.size()}}},
                  {"seed", global.seed},
                  {"algebra", s.name},
                  {"tables", tables}};
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << "algebra " << s.name << ": " << found.size()
                << " addition(s)\n";
      for (std::size_t i = 0; i < found.size(); ++i) {
        std::cout << "addition " << i + 1 << ":\n";
        for (int a = 0; a < s.size(); ++a)
          std::cout << "  " << table_row(s, found[i].table, a) << '\n';
      }
    }
    return found.empty() ? kNegative : kOk;
  }

  if (order_cmd->parsed()) {
    AlgebraFile file = resolve_algebra(alg_spec, cn_budget);
    FiniteAlgebra& s = file.algebra;
    if (!s.has_inv()) s.inv = inverse_map(s);
    const NaturalOrder order = natural_order(s);
    const std::string dot = hasse_dot(order);
    if (dot_out) emit(dot, dot_out);
    if (global.format == "dot") {
      if (!dot_out) std::cout << dot;
      return kOk;
    }
    const auto covers = order.covers();
    if (as_json) {
      json edges = json::array();
      for (const auto& [lo, hi] : covers)
        edges.push_back({s.elements[lo], s.elements[hi]});
      json report{{"verdict", "ok"},
                  {"counterexample", nullptr},
                  {"counts",
                   {{"elements", s.size()}, {"covers", covers.size()}}},
                  {"seed", global.seed},
                  {"algebra", s.name},
                  {"covers", edges}};
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << "algebra " << s.name << ": " << s.size()
                << " elements, " << covers.size() << " covering pair(s)\n";
      for (const auto& [lo, hi] : covers)
        std::cout << "  " << s.elements[lo] << " < " << s.elements[hi]
                  << '\n';
    }
    return kOk;
  }

  if (check->parsed()) {
    const AlgebraFile file = resolve_algebra(alg_spec, cn_budget);
    const FiniteAlgebra& s = file.algebra;
    if (identities_file) {
      std::ifstream in(*identities_file);
      if (!in) throw IoError("cannot open " + *identities_file);
      std::string line;
      std::size_t failures = 0, checked = 0;
      json results = json::array();
      while (std::getline(in, line)) {
        const std::size_t mark = line.find_first_not_of(" \t");
        if (mark == std::string::npos || line[mark] == '#') continue;
        const Identity id = parse_identity(line);
        const CheckReport report = check_identity(s, id, global.jobs);
        ++checked;
        if (!report.holds) ++failures;
        if (as_json)
          results.push_back(
              {{"identity", print_identity(id)},
               {"verdict", report.holds ? "holds" : "fails"},
               {"counterexample",
                counterexample_json(s, report.counterexample)}});
        else {
          std::cout << print_identity(id) << " "
                    << (report.holds ? "holds" : "fails") << '\n';
          if (!report.holds)
            std::cout << "  counterexample: "
                      << counterexample_text(s, report.counterexample)
                      << '\n';
        }
      }
      if (as_json) {
        json out{{"verdict", failures == 0 ? "holds" : "fails"},
                 {"counterexample", nullptr},
                 {"counts", {{"checked", checked}, {"failures", failures}}},
                 {"seed", global.seed},
                 {"algebra", s.name},
                 {"identities", results}};
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << checked << " identities, " << failures << " failure(s)\n";
      }
      return failures == 0 ? kOk : kNegative;
    }
    if (identity_text.empty())
      throw Error("check: give an identity or --identities FILE");
    const Identity id = parse_identity(identity_text);
    const CheckReport report = check_identity(s, id, global.jobs);
    if (as_json) {
      json out{{"verdict", report.holds ? "holds" : "fails"},
               {"counterexample", counterexample_json(s, report.counterexample)},
               {"counts",
                {{"evaluations", report.evaluations},
                 {"assignments", report.total_assignments}}},
               {"seed", global.seed},
               {"algebra", s.name},
               {"identity", print_identity(id)}};
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << print_identity(id) << " " << (report.holds ? "holds"
                                                              : "fails")
                << " in " << s.name << " (" << report.total_assignments
                << " assignments)\n";
      if (!report.holds)
        std::cout << "counterexample: "
                  << counterexample_text(s, report.counterexample) << '\n';
    }
    return report.holds ? kOk : kNegative;
  }

  if (spectrum_cmd->parsed()) {
    const AlgebraFile file = resolve_algebra(alg_spec, cn_budget);
    const FiniteAlgebra& s = file.algebra;
    SpectrumOptions opt;
    opt.vars = vars;
    opt.max_size = max_size;
    opt.signature = TermSignature::parse(signature);
    opt.term_budget = term_budget;
    opt.jobs = global.jobs;
    const Spectrum sp = identity_spectrum(s, opt);
    if (as_json) {
      json classes = json::array();
      for (const auto& cls : sp.classes) {
        json members = json::array();
        for (const auto& t : cls.terms) members.push_back(print_term(t));
        classes.push_back({{"representative", print_term(cls.terms.front())},
                           {"size", cls.terms.size()},
                           {"members", members}});
      }
      json report{{"verdict", "ok"},
                  {"counterexample", nullptr},
                  {"counts",
                   {{"terms", sp.term_count},
                    {"classes", sp.classes.size()}}},
                  {"seed", global.seed},
                  {"algebra", s.name},
                  {"classes", classes}};
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << "algebra " << s.name << ": " << sp.term_count
                << " terms in " << sp.classes.size() << " class(es)\n";
      for (std::size_t i = 0; i < sp.classes.size(); ++i)
        std::cout << "  class " << i + 1 << " (" << sp.classes[i].terms.size()
                  << " terms): " << print_term(sp.classes[i].terms.front())
                  << '\n';
    }
    return kOk;
  }

  if (separate->parsed()) {
    const AlgebraFile holds_file = resolve_algebra(holds_spec, cn_budget);
    const AlgebraFile fails_file = resolve_algebra(fails_spec, cn_budget);
    SpectrumOptions opt;
    opt.vars = vars;
    opt.max_size = max_size;
    opt.signature = TermSignature::parse(signature);
    opt.term_budget = term_budget;
    opt.jobs = global.jobs;
    const auto sep = find_separating_identity(holds_file.algebra,
                                              fails_file.algebra, opt);
    if (as_json) {
      json report{
          {"verdict", sep ? "found" : "none"},
          {"counterexample",
           sep ? counterexample_json(fails_file.algebra, sep->counterexample)
               : json(nullptr)},
          {"counts", {{"vars", vars}, {"max_size", max_size}}},
          {"seed", global.seed},
          {"identity", sep ? json(print_identity(sep->identity))
                           : json(nullptr)}};
      std::cout << report.dump(2) << '\n';
    } else if (sep) {
      std::cout << "separating identity: " << print_identity(sep->identity)
                << '\n'
                << "holds in " << holds_file.algebra.name << ", fails in "
                << fails_file.algebra.name << " at "
                << counterexample_text(fails_file.algebra,
                                       sep->counterexample)
                << '\n';
    } else {
      std::cout << "no separating identity within bounds\n";
    }
    return sep ? kOk : kNegative;
  }

  if (verify->parsed()) {
    VerifyOptions opt;
    opt.n = verify_n;
    opt.vars = verify_vars;
    opt.max_size = verify_max_size;
    opt.seed = global.seed;
    opt.budget = verify_budget;
    opt.jobs = global.jobs;
    SuiteReport report;
    if (suite_name == "lemma1")
      report = verify_lemma1(opt);
    else if (suite_name == "lemma2")
      report = verify_lemma2(opt);
    else
      report = verify_theorem_mechanics(opt);
    if (as_json)
      std::cout << suite_json(report).dump(2) << '\n';
    else
      std::cout << format_suite(report);
    return report.all_pass() ? kOk : kNegative;
  }

  return kError;  // unreachable: require_subcommand
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "seminf: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "seminf: " << e.what() << '\n';
    return kError;
  }
}
