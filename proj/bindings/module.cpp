#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <sstream>

#include "seminf/algebra_io.hpp"
#include "seminf/engine.hpp"
#include "seminf/order.hpp"
#include "seminf/parallel.hpp"
#include "seminf/verify.hpp"

namespace py = pybind11;
using namespace seminf;

namespace {

/// Binding-side value wrapper: TermPtr is shared_ptr<const Term>, which is
/// not a pybind11 holder type.
struct PyTerm {
  TermPtr ptr;
};

std::vector<std::vector<int>> rows(const std::vector<int>& flat, int n) {
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < n; ++a)
    out[a] = std::vector<int>(flat.begin() + a * n, flat.begin() + (a + 1) * n);
  return out;
}

std::vector<int> flatten(const std::vector<std::vector<int>>& table) {
  std::vector<int> out;
  for (const auto& row : table) out.insert(out.end(), row.begin(), row.end());
  return out;
}

py::dict ai_report_dict(const AiSemiringReport& report) {
  py::dict out;
  for (const auto& check : report.checks) {
    py::dict entry;
    entry["pass"] = check.pass;
    entry["counterexample"] =
        check.pass ? py::object(py::none()) : py::cast(check.counterexample);
    out[py::str(check.axiom)] = entry;
  }
  return out;
}

py::dict suite_dict(const SuiteReport& report) {
  py::list lines;
  for (const auto& line : report.lines) {
    py::dict entry;
    entry["label"] = line.label;
    entry["pass"] = line.pass;
    entry["gating"] = line.gating;
    entry["detail"] = line.detail;
    lines.append(entry);
  }
  py::dict out;
  out["suite"] = report.suite;
  out["pass"] = report.all_pass();
  out["seed"] = report.seed;
  out["lines"] = lines;
  return out;
}

}  // namespace

PYBIND11_MODULE(_seminf, m) {
  m.doc() = "finite inverse semigroups, rook matrices and additively "
            "idempotent semirings";

  py::register_exception<Error>(m, "SeminfError", PyExc_ValueError);

  py::class_<FiniteAlgebra>(m, "FiniteAlgebra")
      .def(py::init([](std::string name, std::vector<std::string> elements,
                       std::vector<std::vector<int>> mul) {
             return validate_table(std::move(name), std::move(elements),
                                   flatten(mul));
           }),
           py::arg("name"), py::arg("elements"), py::arg("mul"))
      .def_readonly("name", &FiniteAlgebra::name)
      .def_readonly("elements", &FiniteAlgebra::elements)
      .def_property_readonly("size", &FiniteAlgebra::size)
      .def_property_readonly("has_inv", &FiniteAlgebra::has_inv)
      .def_property_readonly("has_add", &FiniteAlgebra::has_add)
      .def("mul", &FiniteAlgebra::product, py::arg("a"), py::arg("b"))
      .def("inv", &FiniteAlgebra::inverse, py::arg("a"))
      .def("add", &FiniteAlgebra::sum, py::arg("a"), py::arg("b"))
      .def("power", &FiniteAlgebra::power, py::arg("a"), py::arg("k"))
      .def("element_index", &FiniteAlgebra::element_index, py::arg("name"))
      .def_property_readonly(
          "mul_table",
          [](const FiniteAlgebra& s) { return rows(s.mul, s.size()); })
      .def_property_readonly(
          "add_table",
          [](const FiniteAlgebra& s) {
            return s.has_add() ? py::cast(rows(s.add, s.size()))
                               : py::object(py::none());
          })
      .def_property_readonly(
          "inv_map",
          [](const FiniteAlgebra& s) {
            return s.has_inv() ? py::cast(s.inv) : py::object(py::none());
          })
      .def("with_inverses",
           [](const FiniteAlgebra& s) {
             FiniteAlgebra out = s;
             if (!out.has_inv()) out.inv = inverse_map(out);
             return out;
           })
      .def("with_addition",
           [](const FiniteAlgebra& s, const std::vector<std::vector<int>>& t) {
             FiniteAlgebra out = s;
             out.add = flatten(t);
             return out;
           },
           py::arg("table"))
      .def("__len__", &FiniteAlgebra::size)
      .def("__repr__", [](const FiniteAlgebra& s) {
        std::ostringstream out;
        out << "FiniteAlgebra(" << s.name << ", " << s.size() << " elements"
            << (s.has_inv() ? ", inv" : "") << (s.has_add() ? ", add" : "")
            << ")";
        return out.str();
      });

  py::class_<PartialInjection>(m, "PartialInjection")
      .def(py::init([](const std::vector<int>& image) {
             return PartialInjection::from_map(image);
           }),
           py::arg("image"),
           "image[col] = row (0-based), -1 for undefined")
      .def_property_readonly("dimension", &PartialInjection::dimension)
      .def("pairs", &PartialInjection::pairs)
      .def("to_matrix", &PartialInjection::to_matrix)
      .def_static("identity", &PartialInjection::identity, py::arg("m"))
      .def_static("from_matrix", &PartialInjection::from_matrix)
      .def("__eq__", [](const PartialInjection& a,
                        const PartialInjection& b) { return a == b; })
      .def("__hash__", &PartialInjection::hash)
      .def("__repr__", [](const PartialInjection& p) {
        std::ostringstream out;
        out << "PartialInjection(m=" << p.dimension() << ",";
        for (const auto& [c, r] : p.pairs()) out << ' ' << c << "->" << r;
        out << ")";
        return out.str();
      });

  m.def("compose", &compose, py::arg("p"), py::arg("q"));
  m.def("transpose", &transpose, py::arg("p"));
  m.def("unite", &unite, py::arg("p"), py::arg("q"));
  m.def("matrix_unit", &matrix_unit, py::arg("m"), py::arg("i"), py::arg("j"));
  m.def("ck_generator", &ck_generator, py::arg("n"), py::arg("k"));

  py::class_<GeneratedAlgebra>(m, "GeneratedAlgebra")
      .def_readonly("algebra", &GeneratedAlgebra::base)
      .def_readonly("reps", &GeneratedAlgebra::reps)
      .def_readonly("generators", &GeneratedAlgebra::generators)
      .def("__repr__", [](const GeneratedAlgebra& g) {
        std::ostringstream out;
        out << "GeneratedAlgebra(" << g.base.name << ", " << g.base.size()
            << " elements)";
        return out.str();
      });

  m.def("brandt_b21", &brandt_b21);
  m.def("cn", &cn, py::arg("n"), py::arg("budget") = 1'000'000);
  m.def("mk_indices", &mk_indices, py::arg("c"), py::arg("k"));
  m.def("mk_algebra", &mk_algebra, py::arg("c"), py::arg("k"));
  m.def(
      "generate_closure",
      [](const std::vector<PartialInjection>& gens, bool with_inverses,
         bool adjoin_identity, std::size_t budget,
         std::vector<std::string> names, std::string name) {
        ClosureOptions opt;
        opt.with_inverses = with_inverses;
        opt.adjoin_identity = adjoin_identity;
        opt.budget = budget;
        opt.generator_names = std::move(names);
        opt.name = std::move(name);
        return generate_closure(gens, opt);
      },
      py::arg("generators"), py::arg("with_inverses") = true,
      py::arg("adjoin_identity") = false, py::arg("budget") = 1'000'000,
      py::arg("generator_names") = std::vector<std::string>{},
      py::arg("name") = "closure");

  m.def("validate_table",
        [](std::string name, std::vector<std::string> elements,
           std::vector<std::vector<int>> mul) {
          return validate_table(std::move(name), std::move(elements),
                                flatten(mul));
        });
  m.def("inverse_map", &inverse_map);
  m.def("idempotents", &idempotents);
  m.def("aperiodic_index", &aperiodic_index);
  m.def(
      "derive_addition",
      [](const FiniteAlgebra& s, int n) {
        return rows(derive_addition(s, n).table, s.size());
      },
      py::arg("algebra"), py::arg("n"));
  m.def(
      "find_all_ai_additions",
      [](const FiniteAlgebra& s) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& t : find_all_ai_additions(s))
          out.push_back(rows(t.table, s.size()));
        return out;
      },
      py::arg("algebra"));
  m.def(
      "verify_ai_semiring",
      [](const FiniteAlgebra& s) { return ai_report_dict(verify_ai_semiring(s)); },
      py::arg("algebra"));
  m.def(
      "is_subuniverse",
      [](const FiniteAlgebra& s, const std::vector<int>& subset,
         bool with_inverse) { return is_subuniverse(s, subset, with_inverse); },
      py::arg("algebra"), py::arg("subset"), py::arg("with_inverse") = false);
  m.def(
      "restrict_algebra",
      [](const FiniteAlgebra& s, const std::vector<int>& subset,
         std::string name) { return restrict_algebra(s, subset, name); },
      py::arg("algebra"), py::arg("subset"), py::arg("name"));

  py::class_<NaturalOrder>(m, "NaturalOrder")
      .def("leq", &NaturalOrder::leq, py::arg("a"), py::arg("b"))
      .def("infimum", &NaturalOrder::infimum, py::arg("a"), py::arg("b"))
      .def("covers", &NaturalOrder::covers)
      .def("to_dot", [](const NaturalOrder& o) { return hasse_dot(o); });
  m.def("natural_order", &natural_order, py::keep_alive<0, 1>(),
        py::arg("algebra"));

  py::class_<PyTerm>(m, "Term")
      .def("__str__", [](const PyTerm& t) { return print_term(t.ptr); })
      .def("__repr__",
           [](const PyTerm& t) { return "Term(" + print_term(t.ptr) + ")"; })
      .def_property_readonly("size",
                             [](const PyTerm& t) { return t.ptr->size(); })
      .def("variables",
           [](const PyTerm& t) { return t.ptr->variables(); });

  py::class_<Identity>(m, "Identity")
      .def_property_readonly("lhs",
                             [](const Identity& i) { return PyTerm{i.lhs}; })
      .def_property_readonly("rhs",
                             [](const Identity& i) { return PyTerm{i.rhs}; })
      .def("variables", &Identity::variables)
      .def("__str__", [](const Identity& i) { return print_identity(i); })
      .def("__repr__", [](const Identity& i) {
        return "Identity(" + print_identity(i) + ")";
      });

  m.def("parse_term",
        [](std::string_view text) { return PyTerm{parse_term(text)}; },
        py::arg("text"));
  m.def("parse_identity",
        [](std::string_view text) { return parse_identity(text); },
        py::arg("text"));
  m.def("print_term", [](const PyTerm& t) { return print_term(t.ptr); });
  m.def(
      "eliminate_addition",
      [](const PyTerm& t, int n) {
        return PyTerm{eliminate_addition(t.ptr, n)};
      },
      py::arg("term"), py::arg("n"));
  m.def(
      "evaluate",
      [](const PyTerm& t, const FiniteAlgebra& s,
         const std::map<std::string, int>& assignment) {
        return evaluate(*t.ptr, s, assignment);
      },
      py::arg("term"), py::arg("algebra"), py::arg("assignment"));

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("holds", &CheckReport::holds)
      .def_readonly("counterexample", &CheckReport::counterexample)
      .def_readonly("evaluations", &CheckReport::evaluations)
      .def_readonly("total_assignments", &CheckReport::total_assignments)
      .def("__bool__", [](const CheckReport& r) { return r.holds; })
      .def("__repr__", [](const CheckReport& r) {
        return std::string("CheckReport(") + (r.holds ? "holds" : "fails") +
               ")";
      });

  m.def(
      "check_identity",
      [](const FiniteAlgebra& s, const std::string& text, int jobs) {
        return check_identity(s, parse_identity(text), jobs);
      },
      py::arg("algebra"), py::arg("identity"), py::arg("jobs") = 1);
  m.def(
      "check_identity",
      [](const FiniteAlgebra& s, const Identity& id, int jobs) {
        return check_identity(s, id, jobs);
      },
      py::arg("algebra"), py::arg("identity"), py::arg("jobs") = 1);

  m.def(
      "identity_spectrum",
      [](const FiniteAlgebra& s, int vars, int max_size,
         const std::string& signature, std::size_t budget, int jobs) {
        SpectrumOptions opt;
        opt.vars = vars;
        opt.max_size = max_size;
        opt.signature = TermSignature::parse(signature);
        opt.term_budget = budget;
        opt.jobs = jobs;
        const Spectrum sp = identity_spectrum(s, opt);
        std::vector<std::vector<std::string>> out;
        for (const auto& cls : sp.classes) {
          std::vector<std::string> printed;
          for (const auto& t : cls.terms) printed.push_back(print_term(t));
          out.push_back(std::move(printed));
        }
        return out;
      },
      py::arg("algebra"), py::arg("vars"), py::arg("max_size"),
      py::arg("signature") = "mul", py::arg("budget") = 1'000'000,
      py::arg("jobs") = 1);

  m.def(
      "find_separating_identity",
      [](const FiniteAlgebra& a, const FiniteAlgebra& b, int vars,
         int max_size, const std::string& signature, std::size_t budget,
         int jobs) -> py::object {
        SpectrumOptions opt;
        opt.vars = vars;
        opt.max_size = max_size;
        opt.signature = TermSignature::parse(signature);
        opt.term_budget = budget;
        opt.jobs = jobs;
        const auto sep = find_separating_identity(a, b, opt);
        if (!sep) return py::none();
        py::dict out;
        out["identity"] = sep->identity;
        out["counterexample"] = sep->counterexample;
        return out;
      },
      py::arg("holds_in"), py::arg("fails_in"), py::arg("vars"),
      py::arg("max_size"), py::arg("signature") = "mul",
      py::arg("budget") = 1'000'000, py::arg("jobs") = 1);

  m.def(
      "pigeonhole_witness",
      [](const GeneratedAlgebra& c, const std::vector<int>& values) {
        return pigeonhole_witness(c, values);
      },
      py::arg("cn"), py::arg("values"));

  m.def(
      "identity_transfer_probe",
      [](int vars, int max_size, int n, std::uint64_t seed, int jobs) {
        const TransferProbeReport r =
            identity_transfer_probe(vars, max_size, n, seed, jobs);
        py::dict out;
        out["vars"] = r.vars;
        out["max_size"] = r.max_size;
        out["n"] = r.n;
        out["spectrum_terms"] = r.spectrum_terms;
        out["spectrum_classes"] = r.spectrum_classes;
        out["identities_total"] = r.identities_total;
        out["identities_checked"] = r.identities_checked;
        out["sampled"] = r.sampled;
        out["seed"] = r.seed;
        out["violations"] = r.violations;
        out["first_violation"] =
            r.first_violation ? py::cast(print_identity(*r.first_violation))
                              : py::object(py::none());
        return out;
      },
      py::arg("vars"), py::arg("max_size"), py::arg("n"),
      py::arg("seed") = kDefaultSeed, py::arg("jobs") = 1);

  auto verify_opts = [](int n, int vars, int max_size, std::uint64_t seed,
                        int jobs) {
    VerifyOptions opt;
    opt.n = n;
    opt.vars = vars;
    opt.max_size = max_size;
    opt.seed = seed;
    opt.jobs = jobs;
    return opt;
  };
  m.def(
      "verify_lemma1",
      [verify_opts](int n, int jobs) {
        return suite_dict(verify_lemma1(verify_opts(n, 2, 5, kDefaultSeed,
                                                    jobs)));
      },
      py::arg("n"), py::arg("jobs") = 1);
  m.def(
      "verify_lemma2",
      [verify_opts](int n, int jobs) {
        return suite_dict(verify_lemma2(verify_opts(n, 2, 5, kDefaultSeed,
                                                    jobs)));
      },
      py::arg("n"), py::arg("jobs") = 1);
  m.def(
      "verify_theorem_mechanics",
      [verify_opts](int n, int vars, int max_size, std::uint64_t seed,
                    int jobs) {
        return suite_dict(
            verify_theorem_mechanics(verify_opts(n, vars, max_size, seed,
                                                 jobs)));
      },
      py::arg("n"), py::arg("vars") = 2, py::arg("max_size") = 5,
      py::arg("seed") = kDefaultSeed, py::arg("jobs") = 1);

  m.def("to_algebra_text",
        [](const FiniteAlgebra& s) { return to_algebra_text(s); });
  m.def("to_algebra_text",
        [](const GeneratedAlgebra& g) { return to_algebra_text(g); });
  m.def(
      "load_algebra",
      [](const std::filesystem::path& path) {
        const AlgebraFile file = load_algebra_file(path);
        return file.algebra;
      },
      py::arg("path"));
  m.def(
      "load_generated",
      [](const std::filesystem::path& path) {
        return to_generated(load_algebra_file(path));
      },
      py::arg("path"));
  m.def(
      "save_algebra",
      [](const std::filesystem::path& path, const FiniteAlgebra& s) {
        save_algebra_file(path, s);
      },
      py::arg("path"), py::arg("algebra"));
  m.def(
      "save_algebra",
      [](const std::filesystem::path& path, const GeneratedAlgebra& g) {
        save_algebra_file(path, g);
      },
      py::arg("path"), py::arg("algebra"));

  m.def("default_jobs", &default_jobs);
  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
