#include "seminf/engine.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <unordered_map>
#include <utility>

#include "seminf/parallel.hpp"
#include "seminf/rng.hpp"
#include "strings.hpp"

namespace seminf {

TermSignature TermSignature::parse(std::string_view text) {
  TermSignature sig{false, false, false};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "mul")
      sig.mul = true;
    else if (item == "inv")
      sig.inv = true;
    else if (item == "add")
      sig.add = true;
    else if (!item.empty())
      throw Error(concat("unknown signature item '", std::string(item),
                         "' (expected mul, inv or add)"));
    pos = comma + 1;
  }
  if (!sig.mul && !sig.inv && !sig.add)
    throw Error("empty signature (expected a comma list of mul, inv, add)");
  return sig;
}

std::string TermSignature::to_string() const {
  std::string out;
  if (mul) out += "mul";
  if (inv) out += out.empty() ? "inv" : ",inv";
  if (add) out += out.empty() ? "add" : ",add";
  return out;
}

CompiledTerm::CompiledTerm(const Term& t,
                           std::span<const std::string> varlist) {
  auto emit = [&](auto&& self, const Term& node) -> void {
    switch (node.kind()) {
      case Term::Kind::var: {
        auto it =
            std::find(varlist.begin(), varlist.end(), node.var_name());
        if (it == varlist.end())
          throw MissingVariableError(
              node.var_name(), concat("variable ", node.var_name(),
                                      " is not in the variable list"));
        ops_.push_back(
            {kLoad, static_cast<int>(std::distance(varlist.begin(), it))});
        return;
      }
      case Term::Kind::inv:
        uses_inv_ = true;
        self(self, *node.left());
        ops_.push_back({kInv, 0});
        return;
      case Term::Kind::mul:
      case Term::Kind::add:
        if (node.kind() == Term::Kind::add) uses_add_ = true;
        self(self, *node.left());
        self(self, *node.right());
        ops_.push_back({node.kind() == Term::Kind::mul ? kMul : kAdd, 0});
        return;
    }
  };
  emit(emit, t);

  int depth = 0;
  stack_need_ = 1;
  for (const Op& op : ops_) {
    if (op.code == kLoad)
      ++depth;
    else if (op.code == kMul || op.code == kAdd)
      --depth;
    stack_need_ = std::max(stack_need_, depth);
  }
}

int CompiledTerm::eval(const FiniteAlgebra& s,
                       std::span<const int> values) const {
  std::array<int, 64> stack_buf;
  stack_buf[0] = 0;  // ops_ is never empty; this only settles the analyzer
  std::vector<int> heap;
  int* stack = stack_buf.data();
  if (stack_need_ > 64) {
    heap.resize(stack_need_);
    stack = heap.data();
  }
  int top = -1;
  for (const Op& op : ops_) {
    switch (op.code) {
      case kLoad:
        stack[++top] = values[op.slot];
        break;
      case kMul:
        --top;
        stack[top] = s.product(stack[top], stack[top + 1]);
        break;
      case kAdd:
        --top;
        stack[top] = s.sum(stack[top], stack[top + 1]);
        break;
      default:  // kInv
        stack[top] = s.inverse(stack[top]);
        break;
    }
  }
  return stack[0];
}

Fingerprint::Fingerprint(std::vector<int> values) : values_(std::move(values)) {
  std::size_t h = 1469598103934665603ULL;
  for (int v : values_) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ULL;
  }
  hash_ = h;
}

namespace {

constexpr std::uint64_t kMaxAssignments = 100'000'000;

std::uint64_t assignment_count(int algebra_size, std::size_t vars) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    if (total > kMaxAssignments)
      throw Error(concat("assignment space |S|^", vars, " is too large"));
    total *= static_cast<std::uint64_t>(algebra_size);
  }
  if (total > kMaxAssignments)
    throw Error(concat("assignment space |S|^", vars, " is too large"));
  return total;
}

/// Decodes a lexicographic assignment rank (last variable fastest).
void decode_assignment(std::uint64_t index, int algebra_size, int vars,
                       int* out) {
  for (int v = vars - 1; v >= 0; --v) {
    out[v] = static_cast<int>(index % algebra_size);
    index /= algebra_size;
  }
}

void require_tables(const FiniteAlgebra& s, bool needs_inv, bool needs_add) {
  if (needs_inv && !s.has_inv())
    throw SignatureMismatchError(
        concat("algebra ", s.name, " has no inverse map"));
  if (needs_add && !s.has_add())
    throw SignatureMismatchError(
        concat("algebra ", s.name, " has no addition table"));
}

}  // namespace

Fingerprint fingerprint(const FiniteAlgebra& s, const Term& t,
                        std::span<const std::string> varlist, int jobs) {
  if (varlist.size() > 31)
    throw Error("fingerprint: at most 31 variables");
  const CompiledTerm compiled(t, varlist);
  require_tables(s, compiled.uses_inv(), compiled.uses_add());
  const int vars = static_cast<int>(varlist.size());
  const std::uint64_t total = assignment_count(s.size(), varlist.size());
  std::vector<int> values(total);
  parallel_chunks(total, jobs,
                  [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
                    std::array<int, 32> assign{};
                    for (std::uint64_t i = begin; i < end; ++i) {
                      decode_assignment(i, s.size(), vars, assign.data());
                      values[i] =
                          compiled.eval(s, {assign.data(),
                                            static_cast<std::size_t>(vars)});
                    }
                  });
  return Fingerprint(std::move(values));
}

CheckReport check_identity(const FiniteAlgebra& s, const Identity& id,
                           int jobs) {
  const std::vector<std::string> vars = id.variables();
  if (vars.size() > 31)
    throw Error("identities with more than 31 variables are not supported");
  const CompiledTerm lhs(*id.lhs, vars);
  const CompiledTerm rhs(*id.rhs, vars);
  require_tables(s, lhs.uses_inv() || rhs.uses_inv(),
                 lhs.uses_add() || rhs.uses_add());

  const int v = static_cast<int>(vars.size());
  const std::uint64_t total = assignment_count(s.size(), vars.size());
  const std::uint64_t hit =
      parallel_find_first(total, jobs, [&](std::uint64_t i) {
        std::array<int, 32> assign{};
        decode_assignment(i, s.size(), v, assign.data());
        const std::span<const int> view{assign.data(),
                                        static_cast<std::size_t>(v)};
        return lhs.eval(s, view) != rhs.eval(s, view);
      });

  CheckReport report;
  report.total_assignments = total;
  if (hit == total) {
    report.holds = true;
    report.evaluations = total;
    return report;
  }
  report.holds = false;
  report.evaluations = hit + 1;
  std::array<int, 32> assign{};
  decode_assignment(hit, s.size(), v, assign.data());
  for (int i = 0; i < v; ++i)
    report.counterexample.emplace_back(vars[i], assign[i]);
  return report;
}

std::vector<std::string> canonical_varlist(int vars) {
  std::vector<std::string> out;
  out.reserve(vars);
  for (int i = 1; i <= vars; ++i) out.push_back(concat("x", i));
  return out;
}

namespace {

int kind_rank(Term::Kind k) {
  switch (k) {
    case Term::Kind::var: return 0;
    case Term::Kind::inv: return 1;
    case Term::Kind::mul: return 2;
    case Term::Kind::add: return 3;
  }
  return 4;
}

/// Numeric-aware variable comparison so that x2 < x10.
int var_name_compare(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1])))
      --cut;
    long long num = -1;
    if (cut < s.size() && s.size() - cut <= 18)
      num = std::stoll(s.substr(cut));
    return std::pair<std::string_view, long long>(
        std::string_view(s).substr(0, cut), num);
  };
  const auto [pa, na] = split(a);
  const auto [pb, nb] = split(b);
  if (int c = pa.compare(pb); c != 0) return c < 0 ? -1 : 1;
  if (na != nb) return na < nb ? -1 : 1;
  return a.compare(b);
}

}  // namespace

int term_compare(const Term& a, const Term& b) {
  if (int c = kind_rank(a.kind()) - kind_rank(b.kind()); c != 0) return c;
  switch (a.kind()) {
    case Term::Kind::var:
      return var_name_compare(a.var_name(), b.var_name());
    case Term::Kind::inv:
      return term_compare(*a.left(), *b.left());
    case Term::Kind::mul:
    case Term::Kind::add:
      if (int c = term_compare(*a.left(), *b.left()); c != 0) return c;
      return term_compare(*a.right(), *b.right());
  }
  return 0;
}

namespace {

/// Generates canonical terms of one exact size. `used` is the number of
/// distinct variables already introduced to the left; a leaf may reuse one
/// of them or introduce the next fresh variable. Memoized per (size, used).
class TermEnumerator {
public:
  TermEnumerator(int vars, TermSignature sig, std::size_t budget)
      : vars_(vars), sig_(sig), budget_(budget) {
    names_ = canonical_varlist(vars);
  }

  std::vector<TermPtr> all(int max_size) {
    std::vector<TermPtr> out;
    for (int s = 1; s <= max_size; ++s) {
      std::vector<TermPtr> level;
      for (const auto& [t, used] : exact(s, 0)) level.push_back(t);
      std::sort(level.begin(), level.end(),
                [](const TermPtr& a, const TermPtr& b) {
                  return term_compare(*a, *b) < 0;
                });
      for (auto& t : level) {
        if (out.size() >= budget_)
          throw BudgetExceededError(
              concat("term enumeration exceeds ", budget_, " terms"));
        out.push_back(std::move(t));
      }
    }
    return out;
  }

private:
  using Entry = std::pair<TermPtr, int>;  // term, variables used after it

  const std::vector<Entry>& exact(int size, int used) {
    const auto key = std::make_pair(size, used);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<Entry> out;
    if (size == 1) {
      const int fresh = std::min(used + 1, vars_);
      for (int i = 1; i <= fresh; ++i)
        out.emplace_back(Term::make_var(names_[i - 1]), std::max(used, i));
    } else {
      if (sig_.inv)
        for (const auto& [child, u] : exact(size - 1, used))
          out.emplace_back(Term::make_inv(child), u);
      if (sig_.mul)
        for (int sa = 1; sa < size; ++sa)
          for (const auto& [a, ua] : exact(sa, used))
            for (const auto& [b, ub] : exact(size - sa, ua))
              out.emplace_back(Term::make_mul(a, b), ub);
      if (sig_.add)
        for (int sa = 1; sa < size; ++sa)
          for (const auto& [a, ua] : exact(sa, used))
            for (const auto& [b, ub] : exact(size - sa, ua))
              out.emplace_back(Term::make_add(a, b), ub);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  int vars_;
  TermSignature sig_;
  std::size_t budget_;
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, std::vector<Entry>> memo_;
};

}  // namespace

std::vector<TermPtr> enumerate_terms(int vars, int max_size,
                                     TermSignature signature,
                                     std::size_t budget) {
  if (vars < 1) throw Error("enumerate_terms: vars must be >= 1");
  if (vars > 31) throw Error("enumerate_terms: at most 31 variables");
  if (max_size < 1) throw Error("enumerate_terms: max_size must be >= 1");
  return TermEnumerator(vars, signature, budget).all(max_size);
}

namespace {

std::vector<Fingerprint> fingerprint_all(const FiniteAlgebra& s,
                                         const std::vector<TermPtr>& terms,
                                         std::span<const std::string> varlist,
                                         int jobs) {
  // Errors must not escape from worker threads; check everything that can
  // throw upfront.
  bool needs_inv = false, needs_add = false;
  for (const auto& t : terms) {
    needs_inv = needs_inv || t->uses_inv();
    needs_add = needs_add || t->uses_add();
  }
  require_tables(s, needs_inv, needs_add);
  if (varlist.size() > 31) throw Error("fingerprint: at most 31 variables");
  (void)assignment_count(s.size(), varlist.size());

  std::vector<Fingerprint> prints(terms.size());
  parallel_chunks(terms.size(), jobs,
                  [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t i = begin; i < end; ++i)
                      prints[i] = fingerprint(s, *terms[i], varlist, 1);
                  });
  return prints;
}

}  // namespace

Spectrum identity_spectrum(const FiniteAlgebra& s, const SpectrumOptions& opt) {
  Spectrum spectrum;
  spectrum.varlist = canonical_varlist(opt.vars);
  const std::vector<TermPtr> terms =
      enumerate_terms(opt.vars, opt.max_size, opt.signature, opt.term_budget);
  spectrum.term_count = terms.size();
  const std::vector<Fingerprint> prints =
      fingerprint_all(s, terms, spectrum.varlist, opt.jobs);

  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto& bucket = by_hash[prints[i].hash()];
    bool placed = false;
    for (std::size_t cls : bucket)
      if (spectrum.classes[cls].fp == prints[i]) {
        spectrum.classes[cls].terms.push_back(terms[i]);
        placed = true;
        break;
      }
    if (!placed) {
      bucket.push_back(spectrum.classes.size());
      SpectrumClass cls;
      cls.terms.push_back(terms[i]);
      cls.fp = prints[i];
      spectrum.classes.push_back(std::move(cls));
    }
  }
  return spectrum;
}

std::vector<Identity> spectrum_identities(const Spectrum& spectrum) {
  std::vector<Identity> out;
  for (const auto& cls : spectrum.classes)
    for (std::size_t i = 1; i < cls.terms.size(); ++i)
      out.push_back(Identity{cls.terms.front(), cls.terms[i]});
  return out;
}

std::optional<SeparationResult> find_separating_identity(
    const FiniteAlgebra& a, const FiniteAlgebra& b,
    const SpectrumOptions& opt) {
  const std::vector<std::string> varlist = canonical_varlist(opt.vars);
  const std::vector<TermPtr> terms =
      enumerate_terms(opt.vars, opt.max_size, opt.signature, opt.term_budget);
  const std::vector<Fingerprint> a_prints =
      fingerprint_all(a, terms, varlist, opt.jobs);

  // Group indices by A-fingerprint, preserving enumeration order.
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto& bucket = by_hash[a_prints[i].hash()];
    bool placed = false;
    for (std::size_t g : bucket)
      if (a_prints[groups[g].front()] == a_prints[i]) {
        group_of[i] = g;
        groups[g].push_back(i);
        placed = true;
        break;
      }
    if (!placed) {
      bucket.push_back(groups.size());
      group_of[i] = groups.size();
      groups.push_back({i});
    }
  }

  std::vector<std::optional<Fingerprint>> b_prints(terms.size());
  auto b_print = [&](std::size_t i) -> const Fingerprint& {
    if (!b_prints[i])
      b_prints[i] = fingerprint(b, *terms[i], varlist, opt.jobs);
    return *b_prints[i];
  };

  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& group = groups[group_of[i]];
    for (std::size_t j : group) {
      if (j <= i) continue;
      if (b_print(i) == b_print(j)) continue;
      // First differing assignment is the counterexample.
      const auto vi = b_print(i).values(), vj = b_print(j).values();
      std::uint64_t diff = 0;
      while (vi[diff] == vj[diff]) ++diff;
      Identity id{terms[i], terms[j]};
      SeparationResult result{id, {}};
      std::array<int, 32> assign{};
      decode_assignment(diff, b.size(), opt.vars, assign.data());
      const std::vector<std::string> used = id.variables();
      for (int v = 0; v < opt.vars; ++v)
        if (std::find(used.begin(), used.end(), varlist[v]) != used.end())
          result.counterexample.emplace_back(varlist[v], assign[v]);
      return result;
    }
  }
  return std::nullopt;
}

std::optional<int> pigeonhole_witness(const GeneratedAlgebra& c,
                                      std::span<const int> values) {
  if (!c.base.has_inv())
    throw Error("pigeonhole_witness: algebra has no inverses");
  const int n = static_cast<int>(c.generators.size());
  for (int k = 1; k <= n; ++k) {
    const int ck = c.generators[k - 1];
    const int ck_inv = c.base.inverse(ck);
    bool blocked = false;
    for (int v : values)
      if (v == ck || v == ck_inv) {
        blocked = true;
        break;
      }
    if (!blocked) return k;
  }
  return std::nullopt;
}

TransferProbeReport identity_transfer_probe(int vars, int max_size, int n,
                                            std::uint64_t seed, int jobs,
                                            std::size_t term_budget) {
  TransferProbeReport report;
  report.vars = vars;
  report.max_size = max_size;
  report.n = n;
  report.seed = seed;

  const GeneratedAlgebra b21 = brandt_b21();
  SpectrumOptions opt;
  opt.vars = vars;
  opt.max_size = max_size;
  opt.signature = TermSignature{true, true, false};
  opt.term_budget = term_budget;
  opt.jobs = jobs;
  const Spectrum spectrum = identity_spectrum(b21.base, opt);
  report.spectrum_terms = spectrum.term_count;
  report.spectrum_classes = spectrum.classes.size();

  std::vector<Identity> identities = spectrum_identities(spectrum);
  report.identities_total = identities.size();

  std::vector<std::size_t> chosen(identities.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = i;
  if (identities.size() > kProbeSampleCap) {
    report.sampled = true;
    Rng rng(seed);
    // Partial Fisher-Yates: the first kProbeSampleCap slots become the
    // sample; sorted afterwards for deterministic scan order.
    for (std::size_t i = 0; i < kProbeSampleCap; ++i) {
      const std::size_t j = i + rng.below(chosen.size() - i);
      std::swap(chosen[i], chosen[j]);
    }
    chosen.resize(kProbeSampleCap);
    std::sort(chosen.begin(), chosen.end());
  }
  report.identities_checked = chosen.size();

  const GeneratedAlgebra c = cn(n);
  std::vector<FiniteAlgebra> mks;
  mks.reserve(n);
  for (int k = 1; k <= n; ++k) mks.push_back(mk_algebra(c, k));

  struct Hit {
    std::size_t identity;
    int k;
    std::vector<std::pair<std::string, int>> counterexample;
  };
  std::vector<std::uint64_t> chunk_violations(chunk_count(chosen.size(), jobs));
  std::vector<std::optional<Hit>> chunk_first(chunk_violations.size());

  parallel_chunks(
      chosen.size(), jobs,
      [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
          const Identity& id = identities[chosen[i]];
          for (int k = 1; k <= n; ++k) {
            const CheckReport check = check_identity(mks[k - 1], id, 1);
            if (check.holds) continue;
            ++chunk_violations[chunk];
            if (!chunk_first[chunk])
              chunk_first[chunk] =
                  Hit{chosen[i], k, check.counterexample};
          }
        }
      });

  for (std::size_t c2 = 0; c2 < chunk_violations.size(); ++c2) {
    report.violations += chunk_violations[c2];
    if (chunk_first[c2] && !report.first_violation) {
      report.first_violation = identities[chunk_first[c2]->identity];
      report.first_violation_k = chunk_first[c2]->k;
      report.first_counterexample = chunk_first[c2]->counterexample;
    }
  }
  return report;
}

}  // namespace seminf
