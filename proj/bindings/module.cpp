#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "szb/bounds.hpp"
#include "szb/detrep.hpp"
#include "szb/errors.hpp"
#include "szb/io.hpp"
#include "szb/poly.hpp"
#include "szb/stability.hpp"
#include "szb/verify.hpp"

namespace py = pybind11;

using szb::Complex;
using szb::MultiPoly;

namespace {

std::vector<std::pair<szb::Exponent, Complex>> term_list(const MultiPoly& p) {
  std::vector<std::pair<szb::Exponent, Complex>> out;
  out.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) out.emplace_back(e, c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Szasz-type exponential bounds for stable polynomials";

  py::register_exception<szb::hypothesis_error>(m, "HypothesisError");

  py::class_<MultiPoly>(m, "MultiPoly")
      .def(py::init<int>(), py::arg("nvars"))
      .def_static("constant", &MultiPoly::constant)
      .def_static("variable", &MultiPoly::variable)
      .def_static("monomial", &MultiPoly::monomial)
      .def_property_readonly("nvars", &MultiPoly::nvars)
      .def("is_zero", &MultiPoly::is_zero)
      .def("total_degree", &MultiPoly::total_degree)
      .def("degree_in", &MultiPoly::degree_in)
      .def("coeff", &MultiPoly::coeff)
      .def("add_term", &MultiPoly::add_term)
      .def("terms", &term_list)
      .def("__add__", [](const MultiPoly& a, const MultiPoly& b) { return a + b; })
      .def("__sub__", [](const MultiPoly& a, const MultiPoly& b) { return a - b; })
      .def("__mul__", [](const MultiPoly& a, const MultiPoly& b) { return a * b; })
      .def("__mul__", [](const MultiPoly& a, Complex s) { return a * s; })
      .def("__rmul__", [](const MultiPoly& a, Complex s) { return a * s; })
      .def("__eq__", [](const MultiPoly& a, const MultiPoly& b) { return a == b; })
      .def("__call__",
           [](const MultiPoly& p, const std::vector<Complex>& z) { return szb::evaluate(p, z); })
      .def("to_json", [](const MultiPoly& p) { return szb::poly_to_json(p).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return szb::poly_from_json(szb::Json::parse(text));
                  })
      .def("__repr__", [](const MultiPoly& p) {
        return "<MultiPoly nvars=" + std::to_string(p.nvars()) +
               " terms=" + std::to_string(p.term_count()) + ">";
      });

  m.def("evaluate",
        [](const MultiPoly& p, const std::vector<Complex>& z) { return szb::evaluate(p, z); });
  m.def("partial_derivative", &szb::partial_derivative);
  m.def("gradient_at_zero", &szb::gradient_at_zero);
  m.def("hessian_at_zero", &szb::hessian_at_zero);
  m.def("restrict_to_plane",
        [](const MultiPoly& p, const std::vector<Complex>& u, const std::vector<Complex>& v) {
          return szb::restrict_to_plane(p, u, v);
        });
  m.def("cayley_substitute",
        py::overload_cast<const MultiPoly&, int, int, bool>(&szb::cayley_substitute),
        py::arg("p"), py::arg("n"), py::arg("m"), py::arg("allow_padded_bidegree") = false);
  m.def("inverse_cayley_substitute", &szb::inverse_cayley_substitute);

  py::class_<szb::HomogeneousExpansion>(m, "HomogeneousExpansion")
      .def_readonly("nvars", &szb::HomogeneousExpansion::nvars)
      .def_readonly("vanishing_order", &szb::HomogeneousExpansion::vanishing_order)
      .def_property_readonly("parts", [](const szb::HomogeneousExpansion& h) {
        return h.parts;
      });
  m.def("homogeneous_parts", &szb::homogeneous_parts, py::arg("p"), py::arg("zero_tol") = 1e-9);
  m.def("homog_data_at_ones", &szb::homog_data_at_ones);

  py::enum_<szb::Stability>(m, "Stability")
      .value("Stable", szb::Stability::Stable)
      .value("Unstable", szb::Stability::Unstable)
      .value("Unknown", szb::Stability::Unknown);

  py::class_<szb::StabilityVerdict>(m, "StabilityVerdict")
      .def_readonly("status", &szb::StabilityVerdict::status)
      .def_readonly("witness", &szb::StabilityVerdict::witness)
      .def_readonly("roots", &szb::StabilityVerdict::roots);

  m.def("roots_1d", &szb::roots_1d);
  m.def("is_stable_1d", &szb::is_stable_1d, py::arg("p"), py::arg("tol") = 1e-9);
  m.def("generate_stable_product", &szb::generate_stable_product);
  m.def("generate_stable_factored_1d", &szb::generate_stable_factored_1d, py::arg("degree"),
        py::arg("seed"), py::arg("real_roots") = false);
  m.def("generate_stable_detrep", &szb::generate_stable_detrep);
  m.def("refute_stability", &szb::refute_stability, py::arg("p"), py::arg("radius"),
        py::arg("samples"), py::arg("seed"), py::arg("tol") = 1e-8);
  m.def("check_reflection", [](const MultiPoly& p, const std::vector<Complex>& z) {
    return szb::check_reflection(p, z);
  });
  m.def("check_y_monotonicity",
        [](const MultiPoly& p, const std::vector<double>& x, const std::vector<double>& y,
           const std::vector<double>& yt) { return szb::check_y_monotonicity(p, x, y, yt); });

  py::class_<szb::DetRep>(m, "DetRep")
      .def(py::init<>())
      .def_readwrite("c", &szb::DetRep::c)
      .def_readwrite("A", &szb::DetRep::A)
      .def_readwrite("B", &szb::DetRep::B)
      .def_property_readonly("dim", &szb::DetRep::dim)
      .def_property_readonly("nvars", &szb::DetRep::nvars);

  py::class_<szb::BidiskRep>(m, "BidiskRep")
      .def(py::init<>())
      .def_readwrite("c", &szb::BidiskRep::c)
      .def_readwrite("D", &szb::BidiskRep::D)
      .def_readwrite("n", &szb::BidiskRep::n)
      .def_readwrite("m", &szb::BidiskRep::m);

  py::class_<szb::DetRepCheck>(m, "DetRepCheck")
      .def_readonly("im_a_min_eig", &szb::DetRepCheck::im_a_min_eig)
      .def_readonly("b_min_eig", &szb::DetRepCheck::b_min_eig)
      .def_readonly("sum_b_deviation", &szb::DetRepCheck::sum_b_deviation)
      .def_readonly("eps", &szb::DetRepCheck::eps)
      .def_readonly("passed", &szb::DetRepCheck::pass);

  py::class_<szb::FixedSpaceSplit>(m, "FixedSpaceSplit")
      .def_readonly("U", &szb::FixedSpaceSplit::U)
      .def_readonly("K", &szb::FixedSpaceSplit::K)
      .def_readonly("fixed_dim", &szb::FixedSpaceSplit::fixed_dim);

  py::class_<szb::KernelSplit>(m, "KernelSplit")
      .def_readonly("U", &szb::KernelSplit::U)
      .def_readonly("C", &szb::KernelSplit::C)
      .def_readonly("kernel_dim", &szb::KernelSplit::kernel_dim);

  py::class_<szb::TraceIdentities>(m, "TraceIdentities")
      .def_readonly("gradient", &szb::TraceIdentities::gradient)
      .def_readonly("hessian", &szb::TraceIdentities::hessian);

  m.def("eval_detrep", [](const szb::DetRep& rep, const std::vector<Complex>& z) {
    return szb::eval_detrep(rep, z);
  });
  m.def("check_detrep", &szb::check_detrep, py::arg("rep"), py::arg("eps") = 1e-8);
  m.def("fixed_space_split", &szb::fixed_space_split, py::arg("D"), py::arg("tol") = 1e-8);
  m.def("bidisk_to_halfplane", &szb::bidisk_to_halfplane, py::arg("brep"),
        py::arg("tol") = 1e-8);
  m.def("kernel_split_psd_imag", &szb::kernel_split_psd_imag, py::arg("A"),
        py::arg("tol") = 1e-8);
  m.def("detrep_to_poly", &szb::detrep_to_poly);
  m.def("trace_identities", &szb::trace_identities);

  py::enum_<szb::NormKind>(m, "NormKind")
      .value("SupNorm", szb::NormKind::SupNorm)
      .value("EuclidNorm", szb::NormKind::EuclidNorm);
  py::enum_<szb::BoundDomain>(m, "BoundDomain")
      .value("AllComplex", szb::BoundDomain::AllComplex)
      .value("RealPointsOnly", szb::BoundDomain::RealPointsOnly);

  py::class_<szb::ExpBound>(m, "ExpBound")
      .def(py::init<>())
      .def_readwrite("lead_degree", &szb::ExpBound::lead_degree)
      .def_readwrite("log_prefactor", &szb::ExpBound::log_prefactor)
      .def_readwrite("linear_complex", &szb::ExpBound::linear_complex)
      .def_readwrite("linear_abs", &szb::ExpBound::linear_abs)
      .def_readwrite("quad", &szb::ExpBound::quad)
      .def_readwrite("norm", &szb::ExpBound::norm)
      .def_readwrite("domain", &szb::ExpBound::domain)
      .def("to_json", [](const szb::ExpBound& b) { return szb::bound_to_json(b).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return szb::bound_from_json(szb::Json::parse(text));
      });

  m.def("szasz_original", &szb::szasz_original);
  m.def("szasz_improved", &szb::szasz_improved);
  m.def("szasz_1d_vanishing", &szb::szasz_1d_vanishing);
  m.def("bb_bound", &szb::bb_bound);
  m.def("det_bound", &szb::det_bound);
  m.def("two_var_coeff_bound", &szb::two_var_coeff_bound);
  m.def("nvar_coeff_bound", &szb::nvar_coeff_bound);
  m.def("msz_bound", &szb::msz_bound);
  m.def("real_axis_bound", &szb::real_axis_bound);
  m.def("bisz2_bound", &szb::bisz2_bound);
  m.def("msz2_bound", &szb::msz2_bound);
  m.def("evaluate_log", [](const szb::ExpBound& b, const std::vector<Complex>& z) {
    return szb::evaluate_log(b, z);
  });

  py::class_<szb::Region>(m, "Region")
      .def(py::init<>())
      .def(py::init([](double radius, bool upper_half, bool real_only) {
             return szb::Region{radius, upper_half, real_only};
           }),
           py::arg("radius") = 2.0, py::arg("upper_half") = false,
           py::arg("real_only") = false)
      .def_readwrite("radius", &szb::Region::radius)
      .def_readwrite("upper_half", &szb::Region::upper_half)
      .def_readwrite("real_only", &szb::Region::real_only);

  py::class_<szb::Witness>(m, "Witness")
      .def_readonly("z", &szb::Witness::z)
      .def_readonly("abs_p", &szb::Witness::abs_p)
      .def_readonly("bound_log", &szb::Witness::bound_log);

  py::class_<szb::VerifyReport>(m, "VerifyReport")
      .def_readonly("trials", &szb::VerifyReport::trials)
      .def_readonly("violations", &szb::VerifyReport::violations)
      .def_readonly("worst_log_margin", &szb::VerifyReport::worst_log_margin)
      .def_readonly("witness", &szb::VerifyReport::witness)
      .def_readonly("seed", &szb::VerifyReport::seed)
      .def_readonly("elapsed_seconds", &szb::VerifyReport::elapsed_seconds);

  m.def("verify_bound", &szb::verify_bound, py::arg("p"), py::arg("b"), py::arg("region"),
        py::arg("samples"), py::arg("seed"), py::arg("tol") = 1e-9);

  py::class_<szb::SharpnessRow>(m, "SharpnessRow")
      .def_readonly("n", &szb::SharpnessRow::n)
      .def_readonly("y", &szb::SharpnessRow::y)
      .def_readonly("abs_pn", &szb::SharpnessRow::abs_pn)
      .def_readonly("target", &szb::SharpnessRow::target)
      .def_readonly("ratio", &szb::SharpnessRow::ratio);

  m.def("sharpness_run", [](double c1, double c2, const std::vector<int>& n_list,
                            const std::vector<double>& y_grid) {
    return szb::sharpness_run(c1, c2, n_list, y_grid);
  });

  py::enum_<szb::LemmaSuite>(m, "LemmaSuite")
      .value("Squares", szb::LemmaSuite::Squares)
      .value("Log", szb::LemmaSuite::Log)
      .value("TracePM", szb::LemmaSuite::TracePM)
      .value("SumB", szb::LemmaSuite::SumB)
      .value("ImTrace", szb::LemmaSuite::ImTrace)
      .value("BBsz", szb::LemmaSuite::BBsz);

  m.def("lemma_trials", &szb::lemma_trials, py::arg("which"), py::arg("trials"),
        py::arg("seed"), py::arg("dim_max"), py::arg("inject_violation") = false);
}
