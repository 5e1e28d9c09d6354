#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "divbound/binary.hpp"
#include "divbound/bounds.hpp"
#include "divbound/inequalities.hpp"
#include "divbound/oracle.hpp"
#include "divbound/thermo.hpp"
#include "divbound/verify.hpp"

namespace py = pybind11;
using namespace divbound;

PYBIND11_MODULE(_divbound, m) {
  m.doc() = "Tight lower bounds for symmetric f-divergences via binary divergences";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<AlignmentError>(m, "AlignmentError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SearchError>(m, "SearchError", PyExc_RuntimeError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);
  py::register_exception<ConditionError>(m, "ConditionError", PyExc_RuntimeError);

  py::class_<FGenerator>(m, "FGenerator")
      .def_readonly("name", &FGenerator::name)
      .def_readonly("f_at_0", &FGenerator::f_at_0)
      .def_readonly("slope_at_inf", &FGenerator::slope_at_inf)
      .def("f", [](const FGenerator& g, double t) { return g.f(t); }, py::arg("t"))
      .def("f1", [](const FGenerator& g, double t) { return g.f1(t); }, py::arg("t"))
      .def("f2", [](const FGenerator& g, double t) { return g.f2(t); }, py::arg("t"))
      .def("__repr__", [](const FGenerator& g) { return "<FGenerator " + g.name + ">"; });

  py::class_<DiscreteDist>(m, "DiscreteDist")
      .def(py::init<std::vector<double>, std::vector<double>>(),
           py::arg("support"), py::arg("mass"))
      .def_readonly("support", &DiscreteDist::support)
      .def_readonly("mass", &DiscreteDist::mass)
      .def("__len__", &DiscreteDist::size);

  py::class_<Moments>(m, "Moments")
      .def_readonly("mean", &Moments::mean)
      .def_readonly("variance", &Moments::variance);

  m.def("catalog", &catalog);
  m.def("catalog_generator", &catalog_generator, py::arg("name"));
  m.def("f_divergence", &f_divergence, py::arg("gen"), py::arg("p"), py::arg("q"));
  m.def("symmetrized_divergence", &symmetrized_divergence, py::arg("gen"),
        py::arg("p"), py::arg("q"));
  m.def("moments", &moments, py::arg("dist"));
  m.def("align_supports", &align_supports, py::arg("p"), py::arg("q"));
  m.def("binary_pair", &binary_pair, py::arg("t"), py::arg("x_lo") = 0.0,
        py::arg("x_hi") = 1.0);
  m.def("triangular_discrimination", &triangular_discrimination, py::arg("p"),
        py::arg("q"));
  m.def("total_variation", &total_variation, py::arg("p"), py::arg("q"));
  m.def("bhattacharyya_coefficient", &bhattacharyya_coefficient, py::arg("p"),
        py::arg("q"));

  py::class_<ConditionCertificate>(m, "ConditionCertificate")
      .def_readonly("satisfied", &ConditionCertificate::satisfied)
      .def_readonly("grid", &ConditionCertificate::grid)
      .def_readonly("min_margin", &ConditionCertificate::min_margin)
      .def_readonly("witness", &ConditionCertificate::witness)
      .def_readonly("tol", &ConditionCertificate::tol)
      .def_readonly("monotone_ok", &ConditionCertificate::monotone_ok);

  py::class_<BinaryDivergence>(m, "BinaryDivergence")
      .def_static("from_generator", &BinaryDivergence::from_generator, py::arg("gen"))
      .def_static("from_scalar", &BinaryDivergence::from_scalar, py::arg("name"),
                  py::arg("g"), py::arg("g1") = nullptr, py::arg("g2") = nullptr,
                  py::arg("g_at_1") = 0.0)
      .def("g", &BinaryDivergence::g, py::arg("t"))
      .def("g1", &BinaryDivergence::g1, py::arg("t"))
      .def("g2", &BinaryDivergence::g2, py::arg("t"))
      .def_property_readonly("g_at_1", &BinaryDivergence::g_at_1)
      .def_property_readonly("name", &BinaryDivergence::name);

  m.def("make_binary", &make_binary, py::arg("gen"));
  m.def("make_binary",
        [](const std::string& name) { return make_binary(catalog_generator(name)); },
        py::arg("name"));
  m.def("inverse_G", &inverse_G, py::arg("bd"), py::arg("T"));
  m.def("check_condition", &check_condition, py::arg("bd"), py::arg("grid_size"),
        py::arg("tol_cond") = 1e-9);
  m.def("concavity_check_G_squared", &concavity_check_G_squared, py::arg("bd"),
        py::arg("pairs"), py::arg("seed") = acceptance::kDefaultSeed);

  py::class_<MomentSpec>(m, "MomentSpec")
      .def(py::init([](double m_p, double sigma_p, double m_q, double sigma_q) {
             MomentSpec spec{m_p, sigma_p, m_q, sigma_q};
             validate(spec);
             return spec;
           }),
           py::arg("m_p"), py::arg("sigma_p"), py::arg("m_q"), py::arg("sigma_q"))
      .def_readonly("m_p", &MomentSpec::m_p)
      .def_readonly("sigma_p", &MomentSpec::sigma_p)
      .def_readonly("m_q", &MomentSpec::m_q)
      .def_readonly("sigma_q", &MomentSpec::sigma_q)
      .def_property_readonly("a", &MomentSpec::a);

  py::class_<BoundResult>(m, "BoundResult")
      .def_readonly("bound_value", &BoundResult::bound_value)
      .def_readonly("argument", &BoundResult::argument)
      .def_readonly("tight", &BoundResult::tight)
      .def_readonly("attained_pair", &BoundResult::attained_pair)
      .def_readonly("basis", &BoundResult::basis);

  m.def("theorem1_bound", &theorem1_bound, py::arg("bd"), py::arg("d"),
        py::arg("condition_grid") = 512);
  m.def("tv_bound", &tv_bound, py::arg("bd"), py::arg("tv"));
  m.def("theorem2_s", &theorem2_s, py::arg("spec"));
  m.def("theorem2_bound", &theorem2_bound, py::arg("bd"), py::arg("spec"),
        py::arg("condition_grid") = 512);
  m.def("lemma3_pair", &lemma3_pair, py::arg("spec"));

  py::class_<IneqReport>(m, "IneqReport")
      .def_readonly("lhs", &IneqReport::lhs)
      .def_readonly("rhs", &IneqReport::rhs)
      .def_readonly("slack", &IneqReport::slack)
      .def_readonly("prior_rhs", &IneqReport::prior_rhs)
      .def_readonly("improvement", &IneqReport::improvement);

  m.def("binary_entropy", &binary_entropy, py::arg("t"));
  m.def("hellinger_td_bound", &hellinger_td_bound, py::arg("p"), py::arg("q"));
  m.def("bhattacharyya_relation", &bhattacharyya_relation, py::arg("p"), py::arg("q"));
  m.def("js_td_bound", &js_td_bound, py::arg("p"), py::arg("q"));
  m.def("js_linear_minorant_check", &js_linear_minorant_check, py::arg("grid_size"));

  py::class_<OracleOptions>(m, "OracleOptions")
      .def(py::init<>())
      .def_readwrite("feas_tol", &OracleOptions::feas_tol)
      .def_readwrite("penalty", &OracleOptions::penalty)
      .def_readwrite("top_k", &OracleOptions::top_k)
      .def_readwrite("refine", &OracleOptions::refine)
      .def_readwrite("min_step", &OracleOptions::min_step);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("value", &OracleResult::value)
      .def_readonly("delta", &OracleResult::delta)
      .def_readonly("best_p", &OracleResult::best_p)
      .def_readonly("best_q", &OracleResult::best_q);

  m.def("min_symmetrized_given_td", &min_symmetrized_given_td, py::arg("gen"),
        py::arg("d"), py::arg("support_size"), py::arg("resolution"),
        py::arg("options") = OracleOptions{});
  m.def("min_symmetrized_given_moments", &min_symmetrized_given_moments,
        py::arg("gen"), py::arg("spec"), py::arg("support_size"),
        py::arg("resolution"), py::arg("options") = OracleOptions{});
  m.def("sedrakyan_check",
        [](const std::vector<double>& u, const std::vector<double>& v) {
          auto res = sedrakyan_check(u, v);
          return py::make_tuple(res.holds, res.equality);
        },
        py::arg("u"), py::arg("v"));

  py::class_<TwoPointAttainment>(m, "TwoPointAttainment")
      .def_readonly("delta", &TwoPointAttainment::delta)
      .def_readonly("s_squared", &TwoPointAttainment::s_squared)
      .def_readonly("matches_s_squared", &TwoPointAttainment::matches_s_squared)
      .def_readonly("sedrakyan_equality", &TwoPointAttainment::sedrakyan_equality)
      .def_readonly("p", &TwoPointAttainment::p)
      .def_readonly("q", &TwoPointAttainment::q);

  m.def("td_two_point_attainment", &td_two_point_attainment, py::arg("spec"));

  py::class_<MarkovSystem>(m, "MarkovSystem")
      .def(py::init([](int n_states, std::vector<double> rates,
                       std::vector<double> p0, double tau, double dt) {
             MarkovSystem sys{n_states, std::move(rates), std::move(p0), tau, dt};
             validate(sys);
             return sys;
           }),
           py::arg("n_states"), py::arg("rates"), py::arg("p0"), py::arg("tau"),
           py::arg("dt"))
      .def_readonly("n_states", &MarkovSystem::n_states)
      .def_readonly("rates", &MarkovSystem::rates)
      .def_readonly("p0", &MarkovSystem::p0)
      .def_readonly("tau", &MarkovSystem::tau)
      .def_readonly("dt", &MarkovSystem::dt);

  py::class_<ThermoReport>(m, "ThermoReport")
      .def_readonly("sigma", &ThermoReport::sigma)
      .def_readonly("sigma_ps", &ThermoReport::sigma_ps)
      .def_readonly("activity", &ThermoReport::activity)
      .def_readonly("kl_identity_gap", &ThermoReport::kl_identity_gap)
      .def_readonly("td_identity_gap", &ThermoReport::td_identity_gap)
      .def_readonly("bound_rhs", &ThermoReport::bound_rhs)
      .def_readonly("bound_slack", &ThermoReport::bound_slack);

  m.def("evolve", &evolve, py::arg("sys"));
  m.def("thermo_report",
        [](const MarkovSystem& sys) { return thermo_report(sys); },
        py::arg("sys"));
  m.def("tku_bound", &tku_bound, py::arg("sigma_ps"), py::arg("activity"));

  m.def("verify", [](std::uint64_t seed) {
          std::ostringstream out;
          bool ok = acceptance::run_all(out, seed);
          return py::make_tuple(ok, out.str());
        },
        py::arg("seed") = acceptance::kDefaultSeed);
}
