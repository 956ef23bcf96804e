#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vbq/algebra.hpp"
#include "vbq/braid.hpp"
#include "vbq/coloring.hpp"
#include "vbq/enumeration.hpp"
#include "vbq/gauss.hpp"
#include "vbq/gauss_code.hpp"
#include "vbq/structure_io.hpp"
#include "vbq/terms.hpp"

namespace py = pybind11;
using namespace vbq;

namespace {

RepKind to_rep(const std::string& s) {
    if (s == "phi") return RepKind::Phi;
    if (s == "psi") return RepKind::Psi;
    throw ParameterError("rep must be 'phi' or 'psi'");
}

py::dict result_dict(const ColoringResult& r) {
    py::dict d;
    d["count"] = r.count;
    d["witnesses"] = r.witnesses ? py::cast(*r.witnesses) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite virtual biquandles, braid actions and coloring counts";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const StructureError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ParameterError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<AxiomFailure>(m, "AxiomFailure", PyExc_ValueError);

    py::class_<OperatorTable>(m, "OperatorTable")
        .def(py::init<int, Table, Table>(), py::arg("n"), py::arg("r1"), py::arg("r2"))
        .def_static("from_rows", &OperatorTable::from_rows, py::arg("r1_rows"), py::arg("r2_rows"))
        .def_property_readonly("size", &OperatorTable::size)
        .def_property_readonly("r1_table", &OperatorTable::r1_table)
        .def_property_readonly("r2_table", &OperatorTable::r2_table)
        .def("__call__", &OperatorTable::apply, py::arg("x"), py::arg("y"))
        .def("relabeled", [](const OperatorTable& op, const Permutation& p) { return op.relabeled(p); })
        .def(py::self == py::self)
        .def("__repr__", [](const OperatorTable& op) { return "<OperatorTable size " + std::to_string(op.size()) + ">"; });

    py::class_<VirtualBiquandle>(m, "VirtualBiquandle")
        .def(py::init([](const OperatorTable& op, std::optional<Permutation> f) {
                 return f ? VirtualBiquandle::from(op, *f) : VirtualBiquandle::plain(op);
             }),
             py::arg("op"), py::arg("f") = py::none())
        .def_property_readonly("size", &VirtualBiquandle::size)
        .def_property_readonly("op", &VirtualBiquandle::op)
        .def_property_readonly("f", py::overload_cast<>(&VirtualBiquandle::f, py::const_));

    m.def("swap_operator", &swap_operator, py::arg("n"));
    m.def("linear_biquandle", &linear_biquandle, py::arg("n"), py::arg("alpha"), py::arg("beta"));
    m.def("wada_cyclic", [](int n) { return wada_from_group(cyclic_group(n)); }, py::arg("n"),
          "Wada operator of the cyclic group of order n");
    m.def("wada_symmetric", [](int k) { return wada_from_group(symmetric_group(k)); }, py::arg("k"),
          "Wada operator of the symmetric group on k letters");

    m.def("validate", [](const OperatorTable& op, std::optional<Permutation> f) {
              auto report = f ? validate_virtual(op, *f) : validate_biquandle(op);
              return py::make_tuple(report.ok(), report.to_string());
          },
          py::arg("op"), py::arg("f") = py::none(), "Returns (ok, report text)");
    m.def("is_biquandle", &is_biquandle, py::arg("op"));
    m.def("is_automorphism", [](const OperatorTable& op, const Permutation& f) { return is_automorphism(op, f); },
          py::arg("op"), py::arg("f"));
    m.def("derive_vr", &derive_vr, py::arg("vbq"));

    m.def("parse_structure", [](const std::string& text) {
              auto file = parse_structure(text);
              return py::make_tuple(file.op, file.f ? py::cast(*file.f) : py::none());
          },
          py::arg("text"), "Returns (op, f or None)");
    m.def("format_structure", &format_structure, py::arg("op"), py::arg("f") = py::none());

    m.def("normalize_braid", [](const std::string& text, std::optional<int> strands) {
              return format_braid(parse_braid(text, strands));
          },
          py::arg("braid"), py::arg("strands") = py::none());
    m.def("random_braid", [](int strands, int length, std::uint64_t seed) {
              return format_braid(random_braid(strands, length, seed));
          },
          py::arg("strands"), py::arg("length"), py::arg("seed"));
    m.def("braid_to_gauss", [](const std::string& text, std::optional<int> strands) {
              return format_gauss(braid_to_gauss(parse_braid(text, strands)));
          },
          py::arg("braid"), py::arg("strands") = py::none());
    m.def("closure_components", [](const std::string& text, std::optional<int> strands) {
              return closure_permutation(parse_braid(text, strands)).components;
          },
          py::arg("braid"), py::arg("strands") = py::none());

    m.def("act", [](const VirtualBiquandle& v, const std::string& text, const StrandTuple& t, const std::string& rep) {
              auto b = parse_braid(text, static_cast<int>(t.size()));
              return act_braid(v, b, to_rep(rep), t);
          },
          py::arg("vbq"), py::arg("braid"), py::arg("tuple"), py::arg("rep") = "phi");
    m.def("count_colorings",
          [](const VirtualBiquandle& v, const std::string& text, std::optional<int> strands, const std::string& rep,
             bool witnesses, std::uint64_t budget, int workers) {
              auto b = parse_braid(text, strands);
              ColoringResult r;
              {
                  py::gil_scoped_release release;
                  r = count_colorings(v, b, to_rep(rep), {witnesses, budget, workers});
              }
              return result_dict(r);
          },
          py::arg("vbq"), py::arg("braid"), py::arg("strands") = py::none(), py::arg("rep") = "phi",
          py::arg("witnesses") = false, py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
    m.def("color_gauss",
          [](const VirtualBiquandle& v, const std::string& code, bool witnesses, std::uint64_t budget) {
              return result_dict(color_gauss(v, parse_gauss(code), {witnesses, budget}));
          },
          py::arg("vbq"), py::arg("gauss"), py::arg("witnesses") = false, py::arg("budget") = kDefaultBudget);
    m.def("verify_bridge",
          [](const VirtualBiquandle& v, const std::string& text, std::optional<int> strands) {
              auto r = verify_bridge(v, parse_braid(text, strands));
              py::dict d;
              d["phi"] = r.phi_count;
              d["psi"] = r.psi_count;
              d["vr"] = r.vr_count;
              d["ok"] = r.ok();
              return d;
          },
          py::arg("vbq"), py::arg("braid"), py::arg("strands") = py::none());
    m.def("check_representation",
          [](const VirtualBiquandle& v, int strands, const std::string& rep) {
              return check_representation(v, strands, to_rep(rep)).ok();
          },
          py::arg("vbq"), py::arg("strands"), py::arg("rep") = "phi");

    m.def("present_braid", [](const std::string& text, std::optional<int> strands, const std::string& rep) {
              return make_presentation(parse_braid(text, strands), to_rep(rep)).to_string();
          },
          py::arg("braid"), py::arg("strands") = py::none(), py::arg("rep") = "phi");
    m.def("present_gauss", [](const std::string& code) { return gauss_presentation(parse_gauss(code)).to_string(); },
          py::arg("gauss"));
    m.def("count_homs",
          [](const VirtualBiquandle& v, const std::string& text, std::optional<int> strands, const std::string& rep,
             bool theta) {
              auto p = make_presentation(parse_braid(text, strands), to_rep(rep));
              if (theta) p = theta_substitute(p);
              return count_homs(p, v).count;
          },
          py::arg("vbq"), py::arg("braid"), py::arg("strands") = py::none(), py::arg("rep") = "phi",
          py::arg("theta") = false);

    m.def("enumerate_biquandles",
          [](int n, bool iso, bool allow_large, int workers) {
              py::gil_scoped_release release;
              return enumerate_biquandles(n, {iso, allow_large, workers});
          },
          py::arg("n"), py::arg("iso") = false, py::arg("allow_large") = false, py::arg("workers") = 1);
    m.def("enumerate_virtual",
          [](int n, bool iso, int workers) {
              std::vector<VirtualStructure> out;
              {
                  py::gil_scoped_release release;
                  out = enumerate_virtual(n, {iso, false, workers});
              }
              py::list l;
              for (auto& s : out) l.append(py::make_tuple(s.op, s.f));
              return l;
          },
          py::arg("n"), py::arg("iso") = false, py::arg("workers") = 1);
    m.def("canonical_key",
          [](const OperatorTable& op, std::optional<Permutation> f) { return f ? canonical_key(op, *f) : canonical_key(op); },
          py::arg("op"), py::arg("f") = py::none());
}
