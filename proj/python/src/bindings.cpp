#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "auxmean/acceptance.hpp"
#include "auxmean/aux_eval.hpp"
#include "auxmean/errors.hpp"
#include "auxmean/laplace.hpp"
#include "auxmean/lemma_oracles.hpp"
#include "auxmean/mean_value.hpp"
#include "auxmean/predictors.hpp"
#include "auxmean/report.hpp"
#include "auxmean/special_functions.hpp"

namespace py = pybind11;
using namespace auxmean;

namespace {

RunConfig make_config(int threads, double t_switch) {
    RunConfig c;
    c.thread_budget = threads;
    c.t_switch = t_switch;
    return c;
}

}  // namespace

PYBIND11_MODULE(_auxmean, m) {
    m.doc() = "Auxiliary function R(s), its mean values and the Laplace check";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<PoleError>(m, "PoleError", base);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
    py::register_exception<BudgetError>(m, "BudgetError", base);
    py::register_exception<ConfigError>(m, "ConfigError", base);
    py::register_exception<CacheIntegrityError>(m, "CacheIntegrityError", base);

    m.def("zeta", [](cplx s) { return complex_zeta(s).value; }, py::arg("s"));
    m.def("theta", [](double t) { return riemann_siegel_theta(t).value; }, py::arg("t"));

    m.def(
        "eval_aux",
        [](double sigma, double t, int threads, double t_switch) {
            const AuxEval r = eval_aux(cplx(sigma, t), make_config(threads, t_switch));
            return py::make_tuple(r.value, std::string(method_name(r.method)), r.error_bound);
        },
        py::arg("sigma"), py::arg("t"), py::arg("threads") = 1, py::arg("t_switch") = 500.0,
        "(value, method, error_bound) for R(sigma + it)");
    m.def("main_sum", &main_sum, py::arg("sigma"), py::arg("t"));

    m.def(
        "mean_value",
        [](double sigma, std::vector<double> T_grid, bool weighted, int threads, double t_switch) {
            py::list out;
            for (const MeanValueSample& s : integrate_mean(sigma, T_grid, weighted, make_config(threads, t_switch))) {
                py::dict d;
                d["sigma"] = s.sigma;
                d["T"] = s.T;
                d["weighted"] = s.weighted;
                d["value"] = s.value;
                d["quad_error"] = s.quad_error;
                d["n_evals"] = s.n_evals;
                out.append(d);
            }
            return out;
        },
        py::arg("sigma"), py::arg("T_grid"), py::arg("weighted") = true, py::arg("threads") = 1,
        py::arg("t_switch") = 500.0);

    m.def(
        "predict",
        [](double sigma, double T, bool weighted, const std::string& constant) {
            const HalfLineConstant c = constant == "stated" ? HalfLineConstant::Stated : HalfLineConstant::Derived;
            const Prediction p = predict(sigma, weighted, c);
            return py::make_tuple(p.evaluate(T), p.error_exponent, regime_label(p.regime));
        },
        py::arg("sigma"), py::arg("T"), py::arg("weighted") = true, py::arg("constant") = "derived",
        "(main term, error exponent, regime label)");
    m.def("predict_laplace_weighted", &predict_laplace_weighted, py::arg("sigma"), py::arg("epsilon"));
    m.def("predict_laplace_unweighted", &predict_laplace_unweighted, py::arg("sigma"), py::arg("epsilon"));
    m.def("exp_poly_integral", &exp_poly_integral, py::arg("a"), py::arg("epsilon"));

    m.def(
        "laplace_scan",
        [](double sigma, std::vector<double> eps, bool weighted, int threads) {
            py::list out;
            const LaplaceTarget target = weighted ? LaplaceTarget::Weighted : LaplaceTarget::Unweighted;
            for (const LaplaceScanRow& r : laplace_ratio_scan(sigma, eps, make_config(threads, 500.0), target)) {
                out.append(py::make_tuple(r.epsilon, r.numeric, r.predicted, r.ratio, r.tail_bound));
            }
            return out;
        },
        py::arg("sigma"), py::arg("epsilon_grid"), py::arg("weighted") = true, py::arg("threads") = 1,
        "rows (epsilon, numeric, predicted, ratio, tail_bound)");

    m.def("osc_integral", &osc_integral, py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("beta"));
    m.def(
        "lemma1_max_ratio",
        [](std::uint64_t seed, long count) {
            double worst = 0.0;
            for (const BoundCheck& c : lemma1_sweep(seed, count)) {
                worst = std::max(worst, c.ratio);
            }
            return worst;
        },
        py::arg("seed"), py::arg("count"));
    m.def("euler_scaled_residual", &euler_scaled_residual, py::arg("x"), py::arg("sigma"));

    m.def(
        "parse_config",
        [](const std::string& text) { return config_json(parse_config(text)); }, py::arg("text"),
        "parsed config echoed as JSON text");
    m.def(
        "run_criterion",
        [](int id, int threads) {
            RunConfig c;
            c.thread_budget = threads;
            const CriterionResult r = run_criterion(id, c);
            return py::make_tuple(r.passed, r.name, r.detail);
        },
        py::arg("id"), py::arg("threads") = 1);
}
