#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "ideallab/atoms.hpp"
#include "ideallab/bounds.hpp"
#include "ideallab/json_io.hpp"
#include "ideallab/ops.hpp"
#include "ideallab/semigroup.hpp"
#include "ideallab/verify.hpp"
#include "ideallab/witnesses.hpp"

namespace py = pybind11;
using namespace ideallab;

namespace {

Word to_word(const Dfa& dfa, const py::object& obj) {
    std::vector<std::string> letters;
    if (py::isinstance<py::str>(obj)) {
        for (char ch : obj.cast<std::string>()) letters.emplace_back(1, ch);
    } else {
        letters = obj.cast<std::vector<std::string>>();
    }
    Word word;
    for (const auto& letter : letters) {
        const int index = dfa.letter_index(letter);
        if (index < 0) throw std::invalid_argument("unknown letter \"" + letter + "\"");
        word.push_back(index);
    }
    return word;
}

Dfa make_dfa(int states, std::vector<std::string> alphabet,
             const py::dict& transitions, int initial, std::vector<int> finals) {
    std::vector<Transformation> delta;
    for (const auto& letter : alphabet) {
        const py::str key(letter);
        if (!transitions.contains(key))
            throw std::invalid_argument("missing transitions for letter \"" + letter + "\"");
        delta.emplace_back(transitions[key].cast<std::vector<int>>());
    }
    return Dfa(states, std::move(alphabet), std::move(delta), initial, std::move(finals));
}

SetOp set_op_from_string(const std::string& name) {
    if (name == "union") return SetOp::Union;
    if (name == "intersection") return SetOp::Intersection;
    if (name == "difference") return SetOp::Difference;
    if (name == "symmetric_difference") return SetOp::SymmetricDifference;
    throw std::invalid_argument("unknown boolean operation \"" + name + "\"");
}

Dfa witness_by_name(const std::string& cls, int n) {
    if (cls == "regular") return regular_witness(n);
    return ideal_witness(ideal_kind_from_string(cls), n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Complexity laboratory for regular right, left and two-sided ideals";

    py::class_<Dfa>(m, "Dfa")
        .def(py::init(&make_dfa), py::arg("states"), py::arg("alphabet"),
             py::arg("transitions"), py::arg("initial"), py::arg("finals"))
        .def_property_readonly("states", &Dfa::state_count)
        .def_property_readonly("alphabet", &Dfa::alphabet)
        .def_property_readonly("initial", &Dfa::initial_state)
        .def_property_readonly("finals", &Dfa::final_states)
        .def_property_readonly("transitions",
                               [](const Dfa& dfa) {
                                   py::dict out;
                                   for (int c = 0; c < dfa.alphabet_size(); ++c)
                                       out[py::str(dfa.alphabet()[static_cast<std::size_t>(c)])] =
                                           dfa.transition(c).images();
                                   return out;
                               })
        .def("accepts",
             [](const Dfa& dfa, const py::object& word) {
                 return dfa.accepts(to_word(dfa, word));
             },
             py::arg("word"), "Accepts a word given as a string of one-character letters "
                              "or a list of letter names.")
        .def("to_json", &dfa_to_json_string)
        .def_static("from_json", &dfa_from_json_string, py::arg("text"))
        .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; })
        .def("__repr__", [](const Dfa& dfa) {
            return "Dfa(states=" + std::to_string(dfa.state_count()) +
                   ", letters=" + std::to_string(dfa.alphabet_size()) + ")";
        });

    m.def("witness", &witness_by_name, py::arg("cls"), py::arg("n"),
          "Witness DFA of a class: regular, right, left or two_sided.");
    m.def("apply_dialect",
          [](const Dfa& dfa, const std::string& dialect) {
              return apply_dialect(dfa, PartialPermutation::parse(dialect));
          },
          py::arg("dfa"), py::arg("dialect"),
          "Restrict/re-letter by a partial permutation like \"a,b,-,d\".");
    m.def("check_ideal",
          [](const Dfa& dfa, const std::string& cls) {
              return check_ideal(dfa, ideal_kind_from_string(cls));
          },
          py::arg("dfa"), py::arg("cls"));

    m.def("minimize", &minimize, py::arg("dfa"));
    m.def("complexity", &complexity, py::arg("dfa"));
    m.def("quotient_complexities", &quotient_complexities, py::arg("dfa"));
    m.def("reverse", &reverse, py::arg("dfa"));
    m.def("star", &star, py::arg("dfa"));
    m.def("concat", &concat_epsilon, py::arg("a"), py::arg("b"));
    m.def("concat_redirect", &concat_ideal_redirect, py::arg("a"), py::arg("b"));
    m.def("boolean",
          [](const Dfa& a, const Dfa& b, const std::string& op) {
              return boolean_product(a, b, set_op_from_string(op));
          },
          py::arg("a"), py::arg("b"), py::arg("op"));
    m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"));
    m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));
    m.def("sort_alphabet", &sort_alphabet, py::arg("dfa"));

    m.def("syntactic_semigroup_size", &syntactic_semigroup_size, py::arg("dfa"),
          py::arg("cap") = 0);
    m.def("atom_count", &atom_count, py::arg("dfa"));
    m.def("enumerate_atoms",
          [](const Dfa& dfa) {
              std::vector<std::pair<std::vector<int>, int>> out;
              for (auto& atom : enumerate_atoms(dfa))
                  out.emplace_back(std::move(atom.states), atom.complexity);
              return out;
          },
          py::arg("min_dfa"), "Pairs (subset, complexity) of the non-empty atoms.");
    m.def("atom_dfa", &atom_dfa, py::arg("min_dfa"), py::arg("s"));

    m.def("expected_value",
          [](const std::string& cls, const std::string& measure, int m, int n) {
              const IdealKind kind = ideal_kind_from_string(cls);
              switch (measure_from_string(measure)) {
                  case Measure::Semigroup: return expected_syntactic_semigroup(kind, n);
                  case Measure::AtomCount: return expected_atom_count(kind, n);
                  case Measure::Reversal: return expected_reversal(kind, n);
                  case Measure::Star: return expected_star(kind, n);
                  case Measure::Product: return expected_product(kind, m, n);
                  case Measure::Union: return expected_boolean(kind, SetOp::Union, m, n);
                  case Measure::Intersection:
                      return expected_boolean(kind, SetOp::Intersection, m, n);
                  case Measure::Difference:
                      return expected_boolean(kind, SetOp::Difference, m, n);
                  case Measure::SymmetricDifference:
                      return expected_boolean(kind, SetOp::SymmetricDifference, m, n);
                  default:
                      throw std::invalid_argument("no scalar bound for measure \"" + measure +
                                                  "\"");
              }
          },
          py::arg("cls"), py::arg("measure"), py::arg("m"), py::arg("n"),
          "Closed-form bound for a class and measure; m is ignored for unary measures.");

    m.def("verify_report",
          [](const std::string& cls, int n_lo, int n_hi, int mn_lo, int mn_hi, int jobs) {
              VerifyOptions options;
              options.kind = ideal_kind_from_string(cls);
              options.n_lo = n_lo;
              options.n_hi = n_hi;
              options.mn_lo = mn_lo;
              options.mn_hi = mn_hi;
              options.jobs = jobs;
              return run_verification(options).to_json().dump(2);
          },
          py::arg("cls"), py::arg("n_lo") = 0, py::arg("n_hi") = 0, py::arg("mn_lo") = 0,
          py::arg("mn_hi") = 0, py::arg("jobs") = 1,
          "Full verification grid as a JSON report string.");
}
