#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "gl3twist/arith.hpp"
#include "gl3twist/diophantine.hpp"
#include "gl3twist/error.hpp"
#include "gl3twist/forms.hpp"
#include "gl3twist/phase.hpp"
#include "gl3twist/sums.hpp"
#include "gl3twist/transform.hpp"
#include "gl3twist/window.hpp"

namespace py = pybind11;
using namespace gl3twist;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Twisted GL(3) sums: coefficients, transforms, Voronoi checks";
  m.attr("__version__") = GL3TWIST_VERSION;

  // Translators run newest first, so the base class goes in before the rest.
  auto& error = py::register_exception<Error>(m, "Error");
  py::register_exception<InsufficientData>(m, "InsufficientData", error);
  py::register_exception<ToleranceError>(m, "ToleranceError", error);
  py::register_exception<RegimeError>(m, "RegimeError", error);
  py::register_exception<PhaseSingularity>(m, "PhaseSingularity", error);
  py::register_exception<GammaPole>(m, "GammaPole", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<NotInvertible>(m, "NotInvertible", error);

  // forms
  py::class_<LanglandsParams>(m, "LanglandsParams")
      .def(py::init(&LanglandsParams::from), py::arg("a1"), py::arg("a2"), py::arg("a3"))
      .def_readonly("a1", &LanglandsParams::a1)
      .def_readonly("a2", &LanglandsParams::a2)
      .def_readonly("a3", &LanglandsParams::a3)
      .def("values", &LanglandsParams::values)
      .def("__repr__", [](const LanglandsParams& p) {
        return "LanglandsParams(" + std::to_string(p.a1) + ", " + std::to_string(p.a2) + ", " +
               std::to_string(p.a3) + ")";
      });
  m.def("analytic_conductor", &analytic_conductor);
  m.def("sym_square_satake", [](double lambda_p) { return sym_square_satake(lambda_p).beta; }, py::arg("lambda_p"));

  py::class_<GL2EigenvalueTable>(m, "GL2EigenvalueTable")
      .def_readonly("r", &GL2EigenvalueTable::r)
      .def_readonly("lambda_", &GL2EigenvalueTable::lambda)
      .def_readonly("warnings", &GL2EigenvalueTable::warnings)
      .def("prime_bound", &GL2EigenvalueTable::prime_bound);
  m.def("ingest_gl2_table",
        py::overload_cast<const std::filesystem::path&>(&ingest_gl2_table), py::arg("path"));

  py::class_<FormSpec>(m, "FormSpec")
      .def_static("eisenstein", &FormSpec::eisenstein)
      .def_static("sym_square", &FormSpec::sym_square)
      .def_property_readonly("params", &FormSpec::params)
      .def_property_readonly("conductor", &FormSpec::conductor)
      .def_property_readonly("cuspidal", &FormSpec::cuspidal)
      .def("__repr__", &FormSpec::describe);

  py::class_<CoefficientProvider>(m, "CoefficientProvider")
      .def(py::init<FormSpec, std::int64_t>(), py::arg("spec"), py::arg("cache_bound"))
      .def("coeff", &CoefficientProvider::coeff, py::arg("m"), py::arg("n"))
      .def("a1n", &CoefficientProvider::a1n)
      .def_property_readonly("spec", &CoefficientProvider::spec);
  m.def("coeff", py::overload_cast<const FormSpec&, std::int64_t, std::int64_t>(&coeff));
  m.def("rankin_selberg_partial", &rankin_selberg_partial);
  m.def(
      "short_sum_ratio",
      [](const CoefficientProvider& p, double a, double b, double eps) {
        const auto r = short_sum_ratio(p, a, b, eps);
        return py::dict(py::arg("value") = r.value, py::arg("envelope_half") = r.envelope_half,
                        py::arg("envelope_one") = r.envelope_one, py::arg("epsilon") = r.epsilon);
      },
      py::arg("provider"), py::arg("A"), py::arg("B"), py::arg("epsilon") = 0.1);

  // diophantine, arith
  py::class_<RationalApproximation>(m, "RationalApproximation")
      .def_readonly("a", &RationalApproximation::a)
      .def_readonly("q", &RationalApproximation::q)
      .def_readonly("theta", &RationalApproximation::theta)
      .def_readonly("Q", &RationalApproximation::Q)
      .def("bound", &RationalApproximation::bound);
  m.def("dirichlet_approx", &dirichlet_approx, py::arg("alpha"), py::arg("Q"));
  m.def("choose_Q", &choose_Q, py::arg("N"), py::arg("conductor"));
  m.def("mod_inverse", &mod_inverse);
  m.def("kloosterman", &kloosterman, py::arg("a"), py::arg("b"), py::arg("c"));

  // window
  py::class_<ModulatedWindow>(m, "ModulatedWindow")
      .def(py::init([](double N, double theta, double sigma) { return ModulatedWindow{N, theta, sigma}; }),
           py::arg("N"), py::arg("theta") = 0.0, py::arg("sigma") = 0.0)
      .def_readwrite("N", &ModulatedWindow::N)
      .def_readwrite("theta", &ModulatedWindow::theta)
      .def_readwrite("sigma", &ModulatedWindow::sigma);
  m.def("window_eval", &window_eval, py::arg("N"), py::arg("y"));
  m.def("mellin_psi", &mellin_psi, py::arg("win"), py::arg("s"), py::arg("tol") = 1e-12,
        py::arg("max_evaluations") = 4'000'000);
  m.def("direct_I", &direct_I, py::arg("win"), py::arg("tau"));
  m.def(
      "saddle_I",
      [](const ModulatedWindow& w, double tau, double eps) {
        const auto r = saddle_I(w, tau, eps);
        return py::make_tuple(r.main, r.errorEstimate, to_string(r.regime));
      },
      py::arg("win"), py::arg("tau"), py::arg("epsilon") = 0.2);

  // phase
  py::class_<PhaseContext>(m, "PhaseContext")
      .def(py::init<double, double, double, const LanglandsParams&>(), py::arg("x"), py::arg("N"),
           py::arg("theta"), py::arg("params"));
  m.def("C_poly", &C_poly);
  m.def("f_eval", &f_eval);
  m.def("f_prime", &f_prime);
  m.def("f_second", &f_second);
  m.def("delta", &delta);
  m.def("stationary_points", &stationary_points);

  // transform
  py::class_<GammaQuotientSpec>(m, "GammaQuotientSpec")
      .def(py::init([](int k, const LanglandsParams& p) { return GammaQuotientSpec{k, p}; }),
           py::arg("k"), py::arg("params"));
  m.def("gamma_quotient_G", &gamma_quotient_G);
  m.def("script_G", &script_G);
  m.def("envelope_U", &envelope_U);
  py::class_<TransformResult>(m, "TransformResult")
      .def_readonly("value", &TransformResult::value)
      .def_readonly("quadratureError", &TransformResult::quadratureError)
      .def_readonly("contourSigma", &TransformResult::contourSigma)
      .def_readonly("truncationTau", &TransformResult::truncationTau)
      .def_readonly("converged", &TransformResult::converged)
      .def_property_readonly("regime", [](const TransformResult& r) { return to_string(r.regime); });
  m.def("psi_k_contour", &psi_k_contour, py::arg("x"), py::arg("spec"), py::arg("win"),
        py::arg("sigma") = 0.0, py::arg("tol") = 1e-8, py::call_guard<py::gil_scoped_release>());
  m.def("psi_pm", &psi_pm, py::arg("x"), py::arg("spec0"), py::arg("spec1"), py::arg("win"),
        py::arg("sigma") = 0.0, py::arg("tol") = 1e-8, py::call_guard<py::gil_scoped_release>());
  m.def("asymptotic_psi", &asymptotic_psi, py::arg("x"), py::arg("spec"), py::arg("win"));

  // sums
  py::enum_<SumMode>(m, "SumMode").value("Smooth", SumMode::Smooth).value("Sharp", SumMode::Sharp);
  py::class_<SumExperiment>(m, "SumExperiment")
      .def_static("make", &SumExperiment::make, py::arg("spec"), py::arg("N"), py::arg("alpha"),
                  py::arg("Q") = 0.0, py::arg("mode") = SumMode::Smooth)
      .def_readonly("N", &SumExperiment::N)
      .def_readonly("alpha", &SumExperiment::alpha)
      .def_readonly("Q", &SumExperiment::Q)
      .def_readonly("approx", &SumExperiment::approx);
  m.def("direct_sum", &direct_sum);
  py::class_<VoronoiReport>(m, "VoronoiReport")
      .def_readonly("direct", &VoronoiReport::direct)
      .def_readonly("dualPlus", &VoronoiReport::dualPlus)
      .def_readonly("dualMinus", &VoronoiReport::dualMinus)
      .def_readonly("residual", &VoronoiReport::residual)
      .def_readonly("dualTermsUsed", &VoronoiReport::dualTermsUsed)
      .def_readonly("warnings", &VoronoiReport::warnings);
  m.def(
      "dual_sum",
      [](const CoefficientProvider& p, const SumExperiment& e, double tol, double cutoff_factor) {
        DualSumOptions o;
        o.cutoff_factor = cutoff_factor;
        py::gil_scoped_release release;
        return dual_sum(p, e, tol, o);
      },
      py::arg("provider"), py::arg("experiment"), py::arg("tol") = 1e-8,
      py::arg("cutoff_factor") = 1.0);
  m.def(
      "predicted_bound",
      [](double N, double c, double Q, double thetaN) {
        const auto b = predicted_bound(N, c, Q, thetaN);
        return py::dict(py::arg("value") = b.value, py::arg("ramanujan") = b.ramanujan,
                        py::arg("unconditional") = b.unconditional, py::arg("regime") = b.regime);
      },
      py::arg("N"), py::arg("conductor"), py::arg("Q"), py::arg("thetaN"));
  m.def(
      "exponent_fit",
      [](const CoefficientProvider& p, const std::vector<double>& Ns, const std::vector<double>& alphas,
         SumMode mode) {
        py::gil_scoped_release release;
        const auto f = exponent_fit(p, Ns, alphas, mode);
        return std::make_tuple(f.slope, f.intercept, f.maxima);
      },
      py::arg("provider"), py::arg("N_list"), py::arg("alphas"), py::arg("mode") = SumMode::Sharp);
  m.def("mixed_alpha_preset", &mixed_alpha_preset, py::arg("seed") = 20240917);
}
