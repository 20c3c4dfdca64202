#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qaoa/analytic.hpp"
#include "qaoa/ising.hpp"
#include "qaoa/json_io.hpp"
#include "qaoa/optimize.hpp"
#include "qaoa/parallel.hpp"
#include "qaoa/rqaoa.hpp"
#include "qaoa/statevector.hpp"

namespace py = pybind11;
using namespace qaoa;

namespace {

std::vector<WeightedEdge> edges_from_sequence(const py::sequence& seq) {
    std::vector<WeightedEdge> edges;
    for (const auto& item : seq) {
        const auto tup = item.cast<py::sequence>();
        if (tup.size() != 2 && tup.size() != 3)
            throw py::value_error("edge must be (i, j) or (i, j, weight)");
        WeightedEdge e;
        e.u = tup[0].cast<int>();
        e.v = tup[1].cast<int>();
        e.weight = tup.size() == 3 ? tup[2].cast<double>() : 1.0;
        edges.push_back(e);
    }
    return edges;
}

}  // namespace

PYBIND11_MODULE(qaoa_maxcut, m) {
    m.doc() = "QAOA and recursive QAOA for MAX-CUT on weighted Ising models";

    // Exception hierarchy. Derived types are registered after the base so
    // their translators run first.
    static py::exception<Error> base_error(m, "Error");
    py::register_exception<InvalidModelError>(m, "InvalidModelError",
                                              base_error);
    py::register_exception<IncompleteAssignmentError>(
        m, "IncompleteAssignmentError", base_error);
    py::register_exception<SizeLimitError>(m, "SizeLimitError", base_error);
    py::register_exception<ParseError>(m, "ParseError", base_error);
    py::register_exception<InconsistentStackError>(m, "InconsistentStackError",
                                                   base_error);
    py::register_exception<RegistrationError>(m, "RegistrationError",
                                              base_error);
    py::register_exception<DomainError>(m, "DomainError", base_error);
    py::register_exception<DegenerateCorrelationError>(
        m, "DegenerateCorrelationError", base_error);
    py::register_exception<NothingToContractError>(m, "NothingToContractError",
                                                   base_error);

    // --- graph / Ising core --------------------------------------------------
    py::class_<IsingModel>(m, "IsingModel")
        .def(py::init<>())
        .def(py::init<std::vector<int>, const std::map<VertexPair, double>&,
                      double>(),
             py::arg("vertices"), py::arg("couplings"), py::arg("offset"))
        .def_property_readonly("vertices", &IsingModel::vertices)
        .def_property_readonly("couplings", &IsingModel::couplings)
        .def_property_readonly("offset", &IsingModel::offset)
        .def("coupling", &IsingModel::coupling, py::arg("i"), py::arg("j"))
        .def("has_vertex", &IsingModel::has_vertex)
        .def("num_vertices", &IsingModel::num_vertices)
        .def("non_isolated", &IsingModel::non_isolated)
        .def(py::self == py::self)
        .def("__repr__", [](const IsingModel& model) {
            return "<IsingModel " + std::to_string(model.num_vertices()) +
                   " vertices, " + std::to_string(model.couplings().size()) +
                   " couplings>";
        });

    py::class_<ConstraintRecord>(m, "ConstraintRecord")
        .def(py::init([](int eliminated, int surviving, int sign) {
                 return ConstraintRecord{eliminated, surviving, sign};
             }),
             py::arg("eliminated"), py::arg("surviving"), py::arg("sign"))
        .def_readonly("eliminated", &ConstraintRecord::eliminated)
        .def_readonly("surviving", &ConstraintRecord::surviving)
        .def_readonly("sign", &ConstraintRecord::sign)
        .def(py::self == py::self);

    py::class_<ConstraintStack>(m, "ConstraintStack")
        .def(py::init<>())
        .def(py::init<const std::vector<ConstraintRecord>&>())
        .def("push", &ConstraintStack::push)
        .def("chain", &ConstraintStack::chain)
        .def_property_readonly("records", &ConstraintStack::records)
        .def("__len__", &ConstraintStack::size);

    m.def(
        "maxcut_model",
        [](const py::sequence& edges) {
            return maxcut_model(edges_from_sequence(edges));
        },
        py::arg("edges"), "MAX-CUT model from (i, j[, weight]) edge tuples");
    m.def("complete_model", &complete_model, py::arg("m"));
    m.def("energy", &energy, py::arg("model"), py::arg("assignment"));
    m.def("brute_force_max", &brute_force_max, py::arg("model"),
          py::arg("cap") = kDefaultBruteForceCap);
    m.def("contract", &contract, py::arg("model"), py::arg("k"), py::arg("l"),
          py::arg("sign"));
    m.def("reconstruct", &reconstruct, py::arg("stack"), py::arg("base"));
    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("serialize_model", &serialize_model, py::arg("model"));
    m.def("model_to_json", &model_to_json, py::arg("model"));
    m.def("model_from_json", &model_from_json, py::arg("text"));

    // --- statevector simulation ------------------------------------------------
    py::class_<ParameterSchedule>(m, "ParameterSchedule")
        .def(py::init([](int level, std::vector<double> gammas,
                         std::vector<double> betas) {
                 return ParameterSchedule{level, std::move(gammas),
                                          std::move(betas)};
             }),
             py::arg("level"), py::arg("gammas"), py::arg("betas"))
        .def_readwrite("level", &ParameterSchedule::level)
        .def_readwrite("gammas", &ParameterSchedule::gammas)
        .def_readwrite("betas", &ParameterSchedule::betas)
        .def(py::self == py::self);

    py::class_<Statevector>(m, "Statevector")
        .def_readonly("amplitudes", &Statevector::amplitudes)
        .def_readonly("qubit_order", &Statevector::qubit_order)
        .def("num_qubits", &Statevector::num_qubits)
        .def("norm", &Statevector::norm);

    m.def("plus_state", py::overload_cast<int>(&plus_state), py::arg("n"));
    m.def("plus_state", py::overload_cast<const std::vector<int>&>(&plus_state),
          py::arg("vertices"));
    m.def("apply_phase_layer", &apply_phase_layer, py::arg("state"),
          py::arg("model"), py::arg("gamma"));
    m.def("apply_mixer_layer", &apply_mixer_layer, py::arg("state"),
          py::arg("beta"));
    m.def("qaoa_state", &qaoa_state, py::arg("model"), py::arg("schedule"));
    m.def("expectation_energy", &expectation_energy, py::arg("state"),
          py::arg("model"));
    m.def("correlation", &correlation, py::arg("state"), py::arg("i"),
          py::arg("j"));
    m.def("set_max_threads", &set_max_threads, py::arg("n"));

    // --- variational optimization ----------------------------------------------
    py::class_<OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init<>())
        .def_readwrite("grid_gamma", &OptimizerConfig::grid_gamma)
        .def_readwrite("grid_beta", &OptimizerConfig::grid_beta)
        .def_readwrite("gamma_period", &OptimizerConfig::gamma_period)
        .def_readwrite("beta_period", &OptimizerConfig::beta_period)
        .def_readwrite("refine_tolerance", &OptimizerConfig::refine_tolerance)
        .def_readwrite("max_refine_sweeps", &OptimizerConfig::max_refine_sweeps)
        .def_readwrite("multistarts", &OptimizerConfig::multistarts)
        .def_readwrite("seed", &OptimizerConfig::seed)
        .def_readwrite("simplex_max_iters",
                       &OptimizerConfig::simplex_max_iters);

    py::class_<OptimizationReport>(m, "OptimizationReport")
        .def_readonly("best_schedule", &OptimizationReport::best_schedule)
        .def_readonly("best_value", &OptimizationReport::best_value)
        .def_readonly("evaluations", &OptimizationReport::evaluations)
        .def_readonly("strategy", &OptimizationReport::strategy);

    m.def("optimize_schedule", &optimize_schedule, py::arg("model"),
          py::arg("p"), py::arg("config") = OptimizerConfig{});

    // --- closed forms for complete graphs ----------------------------------------
    m.def("expected_edge_cost", &expected_edge_cost, py::arg("n"),
          py::arg("gamma"), py::arg("beta"));
    m.def("edge_correlation", &edge_correlation, py::arg("n"), py::arg("gamma"),
          py::arg("beta"));
    m.def("edge_cost_gain", &edge_cost_gain, py::arg("n"), py::arg("gamma"),
          py::arg("beta"));
    m.def("arctan_argument", &arctan_argument, py::arg("n"), py::arg("gamma"));
    m.def("optimal_beta", &optimal_beta, py::arg("n"), py::arg("gamma"));
    m.def("f_reduced", &f_reduced, py::arg("n"), py::arg("gamma"));

    py::class_<GammaProfile>(m, "GammaProfile")
        .def_readonly("gamma", &GammaProfile::gamma)
        .def_readonly("beta_star", &GammaProfile::beta_star)
        .def_readonly("f_value", &GammaProfile::f_value)
        .def_readonly("x_value", &GammaProfile::x_value);

    m.def("maximize_f", &maximize_f, py::arg("n"));
    m.def("qaoa1_ratio", &qaoa1_ratio, py::arg("n"));
    m.def("g_function", &g_function, py::arg("n"), py::arg("t"));
    m.def("g_derivative", &g_derivative, py::arg("n"), py::arg("t"));

    py::class_<GCriticalPoint>(m, "GCriticalPoint")
        .def_readonly("t", &GCriticalPoint::t)
        .def_readonly("g_value", &GCriticalPoint::g_value);

    py::class_<GPositivityReport>(m, "GPositivityReport")
        .def_readonly("n", &GPositivityReport::n)
        .def_readonly("grid_step", &GPositivityReport::grid_step)
        .def_readonly("min_value", &GPositivityReport::min_value)
        .def_readonly("argmin", &GPositivityReport::argmin)
        .def_readonly("critical_points", &GPositivityReport::critical_points)
        .def_readonly("critical_bound", &GPositivityReport::critical_bound)
        .def_readonly("all_critical_above_bound",
                      &GPositivityReport::all_critical_above_bound)
        .def_readonly("positive", &GPositivityReport::positive);

    m.def("verify_g_positivity", &verify_g_positivity, py::arg("n"),
          py::arg("grid_step") = 1e-4);

    // --- recursive engine ---------------------------------------------------------
    py::enum_<CorrelationSource>(m, "CorrelationSource")
        .value("statevector", CorrelationSource::statevector)
        .value("analytic", CorrelationSource::analytic)
        .value("auto_select", CorrelationSource::auto_select);

    py::enum_<TieBreak>(m, "TieBreak")
        .value("lexicographic", TieBreak::lexicographic)
        .value("seeded_random", TieBreak::seeded_random);

    py::class_<RqaoaConfig>(m, "RqaoaConfig")
        .def(py::init<>())
        .def_readwrite("level", &RqaoaConfig::level)
        .def_readwrite("threshold", &RqaoaConfig::threshold)
        .def_readwrite("correlations", &RqaoaConfig::correlations)
        .def_readwrite("tie_break", &RqaoaConfig::tie_break)
        .def_readwrite("seed", &RqaoaConfig::seed)
        .def_readwrite("degenerate_tolerance",
                       &RqaoaConfig::degenerate_tolerance)
        .def_readwrite("tie_tolerance", &RqaoaConfig::tie_tolerance)
        .def_readwrite("brute_force_cap", &RqaoaConfig::brute_force_cap)
        .def_readwrite("optimizer", &RqaoaConfig::optimizer)
        .def_readwrite("forced_schedule", &RqaoaConfig::forced_schedule);

    py::class_<RoundTrace>(m, "RoundTrace")
        .def_readonly("round", &RoundTrace::round)
        .def_readonly("eliminated", &RoundTrace::eliminated)
        .def_readonly("surviving", &RoundTrace::surviving)
        .def_readonly("correlation", &RoundTrace::correlation)
        .def_readonly("sign", &RoundTrace::sign)
        .def_readonly("active_before", &RoundTrace::active_before)
        .def_readonly("active_after", &RoundTrace::active_after)
        .def_readonly("schedule", &RoundTrace::schedule)
        .def_readonly("expectation", &RoundTrace::expectation)
        .def_readonly("provider", &RoundTrace::provider);

    py::class_<RqaoaSolution>(m, "RqaoaSolution")
        .def_readonly("assignment", &RqaoaSolution::assignment)
        .def_readonly("value", &RqaoaSolution::value)
        .def_readonly("optimum", &RqaoaSolution::optimum)
        .def_readonly("ratio", &RqaoaSolution::ratio)
        .def_readonly("traces", &RqaoaSolution::traces)
        .def_readonly("stack", &RqaoaSolution::stack);

    m.def("is_uniform_complete", &is_uniform_complete, py::arg("model"));
    m.def("rqaoa_round", &rqaoa_round, py::arg("model"),
          py::arg("config") = RqaoaConfig{}, py::arg("round_index") = 0);
    m.def("run_rqaoa", &run_rqaoa, py::arg("model"),
          py::arg("config") = RqaoaConfig{});
}
