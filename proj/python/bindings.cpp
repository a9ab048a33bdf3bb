#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pws/combinatorics.hpp"
#include "pws/filters.hpp"
#include "pws/quotient.hpp"
#include "pws/setexpr.hpp"
#include "pws/vdw.hpp"

namespace py = pybind11;
using namespace pws;

namespace {

std::string bits(const BitWord& w) { return bits_to_string(w); }

BitWord word(const std::string& s) {
  BitWord out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw ParseError("expected 0 or 1", i);
    out.push_back(s[i] == '1');
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(pwsets, m) {
  m.doc() = "Eventually periodic subsets of the naturals: predicates, staged filters, AP_k";

  auto base = py::register_exception<Error>(m, "PwsError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<HorizonError>(m, "HorizonError", base.ptr());
  py::register_exception<NotInAlgebraError>(m, "NotInAlgebraError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<EpSet>(m, "EpSet")
      .def(py::init([](const std::string& pre, const std::string& per) { return EpSet(word(pre), word(per)); }),
           py::arg("preperiod"), py::arg("period"))
      .def_static("parse", [](const std::string& text) { return eval_expr(text); },
                  "Evaluate a set expression such as 'res(0,3) | set{1,2}'")
      .def_static("empty", &EpSet::empty)
      .def_static("naturals", &EpSet::naturals)
      .def_static("residue", &EpSet::residue, py::arg("r"), py::arg("m"))
      .def_static("finite", [](std::vector<Nat> xs) { return EpSet::finite(std::span<const Nat>(xs)); })
      .def_static("interval", &EpSet::interval)
      .def_property_readonly("preperiod", [](const EpSet& s) { return bits(s.preperiod()); })
      .def_property_readonly("period", [](const EpSet& s) { return bits(s.period()); })
      .def("__contains__", &EpSet::contains)
      .def("prefix", [](const EpSet& s, std::size_t h) { return bits(s.prefix(h)); })
      .def("__or__", [](const EpSet& a, const EpSet& b) { return unite(a, b); })
      .def("__and__", [](const EpSet& a, const EpSet& b) { return intersect(a, b); })
      .def("__sub__", [](const EpSet& a, const EpSet& b) { return difference(a, b); })
      .def("__invert__", [](const EpSet& a) { return complement(a); })
      .def("__rshift__", [](const EpSet& a, Nat n) { return shift_left(a, n); }, "A - n = {m : m + n in A}")
      .def("shift", [](const EpSet& a, Nat n) { return shift_left(a, n); })
      .def("__le__", [](const EpSet& a, const EpSet& b) { return is_subset(a, b); })
      .def(py::self == py::self)
      .def("__hash__", [](const EpSet& s) { return std::hash<std::string>{}(to_string(s)); })
      .def("__str__", [](const EpSet& s) { return to_string(s); })
      .def("__repr__", [](const EpSet& s) { return "EpSet.parse('" + to_string(s) + "')"; });

  m.def("is_empty", &is_empty);
  m.def("is_finite", &is_finite);
  m.def("is_cofinite", &is_cofinite);
  m.def("is_thick", &is_thick);
  m.def("is_syndetic", &is_syndetic);
  m.def("is_piecewise_syndetic", &is_piecewise_syndetic);
  m.def("gap_bound", &gap_bound);
  m.def("pws_witness", &pws_witness);
  m.def("syndetic_cover", &syndetic_cover);
  m.def("elements", &elements);

  py::class_<Progression>(m, "Progression")
      .def_readonly("start", &Progression::start)
      .def_readonly("gap", &Progression::gap)
      .def_readonly("length", &Progression::length)
      .def("terms", &Progression::terms);

  m.def("ap_k", &ap_k, py::arg("a"), py::arg("k"));

  py::class_<FipCertificate>(m, "FipCertificate")
      .def_readonly("has_fip", &FipCertificate::has_fip)
      .def_readonly("core", &FipCertificate::core)
      .def("verify", &counterexample_is_empty)
      .def("__str__", &describe);
  m.def("fip", [](std::vector<EpSet> roots, std::vector<EpSet> singles) {
    return fip(FipFamily{std::move(roots), std::move(singles)});
  }, py::arg("shift_roots"), py::arg("singles") = std::vector<EpSet>{});

  py::class_<SetAlgebra, std::shared_ptr<SetAlgebra>>(m, "SetAlgebra")
      .def(py::init<std::vector<EpSet>>(), py::arg("roots"))
      .def("element", &SetAlgebra::element)
      .def("__contains__", &SetAlgebra::contains)
      .def_property_readonly("atoms", &SetAlgebra::atoms);

  py::class_<StagedFilter, std::shared_ptr<StagedFilter>>(m, "StagedFilter")
      .def("__contains__", &StagedFilter::member)
      .def_property_readonly("core", &StagedFilter::core)
      .def_property_readonly("accepted", [](const StagedFilter& f) {
        std::vector<EpSet> out;
        for (const auto& s : f.stages())
          if (s.accepted) out.push_back(s.set);
        return out;
      });
  m.def("build_ultrafilter", [](std::shared_ptr<SetAlgebra> alg, std::vector<EpSet> roots, Nat stages) {
    return std::make_shared<StagedFilter>(build_ultrafilter(alg, {std::move(roots), {}}, stages));
  }, py::arg("algebra"), py::arg("shift_roots"), py::arg("stages"));
  m.def("build_maximal_tif", [](std::shared_ptr<SetAlgebra> alg, std::vector<EpSet> roots, Nat stages) {
    return std::make_shared<StagedFilter>(build_maximal_tif(alg, {std::move(roots), {}}, stages));
  }, py::arg("algebra"), py::arg("shift_roots"), py::arg("stages"));

  py::class_<TheoremEvidence>(m, "TheoremEvidence")
      .def_readonly("witness", &TheoremEvidence::witness)
      .def_readonly("chosen_shift", &TheoremEvidence::chosen_shift)
      .def_readonly("apk", &TheoremEvidence::apk)
      .def_readonly("apk_pws", &TheoremEvidence::apk_pws)
      .def_property_readonly("progression", [](const TheoremEvidence& e) { return e.claim.progression; })
      .def_property_readonly("verdict", &TheoremEvidence::verdict);
  m.def("theorem_main", [](const EpSet& a, Nat k, Nat stages) {
    return theorem_main(a, k, TheoremOptions{stages, 0});
  }, py::arg("a"), py::arg("k"), py::arg("stages") = 200);

  m.def("has_monochromatic_ap", [](std::vector<int> c, std::size_t terms) {
    return has_monochromatic_ap(c, terms);
  });
  m.def("van_der_waerden_number", &van_der_waerden_number, py::arg("colors"), py::arg("terms"),
        py::arg("limit"));

  m.def("quotient_correspondence", [](std::size_t p) { return check_correspondence(p).passed(); },
        py::arg("modulus"));
}
