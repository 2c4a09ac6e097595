#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperltl/checker.hpp"
#include "hyperltl/oracle.hpp"
#include "hyperltl/policies.hpp"

namespace py = pybind11;
using namespace hyperltl;

namespace {

struct PyVerdict {
  bool holds = false;
  bool dualized = false;
  bool fast_path = false;
  std::string hierarchy;
  std::optional<std::vector<py::dict>> countermodel;
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> stats;
};

std::vector<std::vector<std::string>> letter_names(const Vocabulary& vocab, const std::vector<Letter>& letters) {
  std::vector<std::vector<std::string>> out;
  for (const auto& l : letters) out.push_back(vocab.names_of(l.parts.at(0)));
  return out;
}

QuantifiedFormula as_formula(const py::object& f) {
  if (py::isinstance<py::str>(f)) return parse(f.cast<std::string>());
  return f.cast<QuantifiedFormula>();
}

PyVerdict run_check(const SystemModel& m, const py::object& formula, std::size_t complement_budget) {
  CheckOptions options;
  options.complement_budget = complement_budget;
  const Verdict v = check(m, as_formula(formula), options);
  PyVerdict out;
  out.holds = v.holds;
  out.dualized = v.dualized;
  out.fast_path = v.fast_path;
  out.hierarchy = v.fragment.hierarchy();
  if (v.countermodel) {
    std::vector<py::dict> paths;
    for (const auto& p : unzip(*v.countermodel)) {
      py::dict d;
      d["stem"] = letter_names(*m.vocabulary(), p.prefix);
      d["cycle"] = letter_names(*m.vocabulary(), p.cycle);
      paths.push_back(d);
    }
    out.countermodel = paths;
  }
  for (const auto& s : v.stats) out.stats.emplace_back(s.stage, s.states, s.transitions);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "HyperLTL model checking over finite Kripke structures";

  static py::exception<FragmentError> fragment_error(mod, "FragmentError", PyExc_ValueError);
  static py::exception<StateBudgetError> budget_error(mod, "BudgetError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const FragmentError& e) {
      fragment_error(e.what());
    } catch (const StateBudgetError& e) {
      budget_error(e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const SystemFormatError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<QuantifiedFormula>(mod, "QuantifiedFormula")
      .def_property_readonly("prefix", [](const QuantifiedFormula& q) { return q.prefix.str(); })
      .def_property_readonly("body", [](const QuantifiedFormula& q) { return to_string(q.body); })
      .def_property_readonly("hierarchy", [](const QuantifiedFormula& q) { return classify_fragment(q).hierarchy(); })
      .def_property_readonly("fragment", [](const QuantifiedFormula& q) { return to_string(classify_fragment(q).fragment); })
      .def("__str__", [](const QuantifiedFormula& q) { return to_string(q); })
      .def("__repr__", [](const QuantifiedFormula& q) { return "QuantifiedFormula('" + to_string(q) + "')"; });

  py::class_<SystemModel>(mod, "System")
      .def_property_readonly("num_states", &SystemModel::num_states)
      .def_property_readonly("state_names", [](const SystemModel& m) {
        std::vector<std::string> names;
        for (StateId s = 0; s < m.num_states(); ++s) names.push_back(m.name(s));
        return names;
      })
      .def_property_readonly("in_oracle_envelope", [](const SystemModel& m) { return in_oracle_envelope(m); });

  py::class_<PyVerdict>(mod, "Verdict")
      .def_readonly("holds", &PyVerdict::holds)
      .def_readonly("dualized", &PyVerdict::dualized)
      .def_readonly("fast_path", &PyVerdict::fast_path)
      .def_readonly("hierarchy", &PyVerdict::hierarchy)
      .def_readonly("countermodel", &PyVerdict::countermodel)
      .def_readonly("stats", &PyVerdict::stats)
      .def("__bool__", [](const PyVerdict& v) { return v.holds; })
      .def("__repr__", [](const PyVerdict& v) { return std::string("Verdict(") + (v.holds ? "HOLDS" : "FAILS") + ")"; });

  mod.def("parse", &parse, py::arg("text"), "Parse a quantified formula.");
  mod.def("load_system", &load_system, py::arg("text"), "Load a system from its text description.");
  mod.def("check", &run_check, py::arg("system"), py::arg("formula"),
          py::arg("complement_budget") = kDefaultComplementBudget,
          "Model check a formula (text or QuantifiedFormula) against a system.");
  mod.def(
      "oracle_holds", [](const SystemModel& m, const py::object& f) { return oracle_holds(m, as_formula(f)); },
      py::arg("system"), py::arg("formula"), "Evaluate by enumerating the system's lasso computations.");
  mod.def("policy", &instantiate_policy, py::arg("name"), py::arg("bindings") = std::map<std::string, std::string>{},
          "Instantiate a policy template.");
  mod.def("policy_names", []() {
    std::vector<std::string> names;
    for (const auto& p : policy_catalog()) names.push_back(p.name);
    return names;
  });
}
