#include "pathrisk/errors.hpp"
#include "pathrisk/montecarlo.hpp"
#include "pathrisk/pathmetrics.hpp"
#include "pathrisk/riskfunc.hpp"
#include "pathrisk/series.hpp"
#include "pathrisk/temporal.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pathrisk;
using Values = std::vector<double>;

namespace {

std::vector<PathProcess> to_paths(const std::vector<Values>& paths) {
    std::vector<PathProcess> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.emplace_back(p);
    return out;
}

py::dict axiom_result(const AxiomResult& r) {
    py::dict d;
    d["holds"] = r.holds;
    if (r.counterexample) {
        py::dict cx;
        cx["fixture"] = r.counterexample->fixture;
        cx["parameter"] = r.counterexample->parameter;
        cx["expected"] = r.counterexample->expected;
        cx["observed"] = r.counterexample->observed;
        d["counterexample"] = cx;
    } else {
        d["counterexample"] = py::none();
    }
    return d;
}

PathFunctional named_transform(const std::string& name, std::int64_t threshold) {
    if (name == "max_duration") return TemporalTransform::max_duration();
    if (name == "episode_duration") return TemporalTransform::episode_duration();
    if (name == "lst") return TemporalTransform::liquidation_stopping_time(threshold);
    if (name == "max_drawdown") return [](std::span<const double> x) { return max_drawdown(x); };
    throw py::value_error("unknown transform '" + name + "'");
}

py::dict report_dict(const RiskReport& r) {
    py::dict d;
    d["volatility"] = r.volatility;
    d["expected_shortfall"] = r.expected_shortfall;
    d["ced"] = r.ced;
    d["mean_max_duration"] = r.mean_max_duration;
    d["duration_deviation"] = r.duration_deviation;
    d["duration_quantile"] = r.duration_quantile;
    d["conditional_expected_duration"] = r.conditional_expected_duration;
    d["alpha"] = r.alpha;
    d["window"] = r.window;
    d["periods_per_year"] = r.periods_per_year;
    d["return_count"] = r.return_count;
    d["path_sample"] = r.path_sample;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Drawdown, duration and temporal risk analytics";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
    static py::exception<SizeError> size_error(m, "SizeError", PyExc_ValueError);
    static py::exception<DegenerateInputError> degenerate_error(m, "DegenerateInputError", PyExc_ValueError);
    static py::exception<ConfigError> config_error(m, "ConfigError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const DomainError& e) {
            py::set_error(domain_error, e.what());
        } catch (const SizeError& e) {
            py::set_error(size_error, e.what());
        } catch (const DegenerateInputError& e) {
            py::set_error(degenerate_error, e.what());
        } catch (const ConfigError& e) {
            py::set_error(config_error, e.what());
        }
    });

    // series ---------------------------------------------------------------

    py::class_<ReturnSeries>(m, "ReturnSeries")
        .def(py::init<Values, std::vector<std::string>, int>(), py::arg("values"),
             py::arg("labels") = std::vector<std::string>{}, py::arg("periods_per_year") = 252)
        .def_property_readonly("values", [](const ReturnSeries& r) { return Values(r.values().begin(), r.values().end()); })
        .def_property_readonly("labels", &ReturnSeries::labels)
        .def_property_readonly("periods_per_year", &ReturnSeries::periods_per_year)
        .def("log_returns", &ReturnSeries::log_returns)
        .def("slice", &ReturnSeries::slice, py::arg("first"), py::arg("count"))
        .def("__len__", &ReturnSeries::size);

    py::class_<WindowSpec>(m, "WindowSpec")
        .def_static("rolling", &WindowSpec::rolling, py::arg("length"), py::arg("stride") = 1)
        .def_static("full", &WindowSpec::full)
        .def_readonly("length", &WindowSpec::length)
        .def_readonly("stride", &WindowSpec::stride)
        .def_readonly("whole_history", &WindowSpec::whole_history)
        .def("window_count", &WindowSpec::window_count)
        .def("__repr__", [](const WindowSpec& w) {
            return w.whole_history ? std::string("WindowSpec.full()")
                                   : "WindowSpec.rolling(" + std::to_string(w.length) + ", " +
                                         std::to_string(w.stride) + ")";
        });

    m.def("parse_returns_csv", [](const std::string& text, int ppy) { return parse_returns_csv(text, ppy); },
          py::arg("text"), py::arg("periods_per_year") = 252);
    m.def("path_from_returns", [](const ReturnSeries& r) {
        const auto p = path_from_returns(r);
        return Values(p.values().begin(), p.values().end());
    });
    m.def("rolling_windows", [](const ReturnSeries& r, const WindowSpec& w) {
        std::vector<Values> out;
        for (const auto& p : rolling_windows(r, w)) out.emplace_back(p.values().begin(), p.values().end());
        return out;
    });

    // pathmetrics ----------------------------------------------------------

    py::class_<DrawdownEpisode>(m, "DrawdownEpisode")
        .def_readonly("peak", &DrawdownEpisode::peak)
        .def_readonly("bottom", &DrawdownEpisode::bottom)
        .def_readonly("recovery", &DrawdownEpisode::recovery)
        .def_readonly("duration", &DrawdownEpisode::duration)
        .def_readonly("censored", &DrawdownEpisode::censored)
        .def_readonly("magnitude", &DrawdownEpisode::magnitude);

    m.def("running_max", [](const Values& x) { return running_max(x); });
    m.def("drawdown", [](const Values& x) { return drawdown(x); });
    m.def("max_drawdown", [](const Values& x) { return max_drawdown(x); });
    m.def("peak_time", [](const Values& x, double tol) { return peak_time(x, tol); }, py::arg("path"),
          py::arg("eq_tol") = 0.0);
    m.def("duration", [](const Values& x, double tol) { return duration(x, tol); }, py::arg("path"),
          py::arg("eq_tol") = 0.0);
    m.def("max_duration", [](const Values& x, double tol) { return max_duration(x, tol); }, py::arg("path"),
          py::arg("eq_tol") = 0.0);
    m.def("max_drawdown_episode", [](const Values& x, double tol) { return max_drawdown_episode(x, tol); },
          py::arg("path"), py::arg("eq_tol") = 0.0);
    m.def("liquidation_stopping_time",
          [](const Values& x, std::int64_t l, double tol) { return liquidation_stopping_time(x, l, tol); },
          py::arg("path"), py::arg("threshold"), py::arg("eq_tol") = 0.0);

    // riskfunc -------------------------------------------------------------

    m.def("quantile", [](const Values& v, double a) { return quantile(EmpiricalSample(v), a); }, py::arg("sample"),
          py::arg("alpha"));
    m.def("tail_mean", [](const Values& v, double a) { return tail_mean(EmpiricalSample(v), a); }, py::arg("sample"),
          py::arg("alpha"));
    m.def("deviation", [](const Values& v) { return deviation(EmpiricalSample(v)); });
    m.def("skewness", [](const Values& v) { return skewness(EmpiricalSample(v)); });
    m.def("pearson", [](const Values& a, const Values& b) { return pearson(EmpiricalSample(a), EmpiricalSample(b)); });
    m.def("volatility", &volatility);
    m.def("expected_shortfall", &expected_shortfall, py::arg("returns"), py::arg("alpha"));

    // temporal -------------------------------------------------------------

    const auto window = py::arg("window") = WindowSpec::rolling(180);
    m.def("ced", py::overload_cast<const ReturnSeries&, const WindowSpec&, double>(&ced), py::arg("returns"), window,
          py::arg("alpha") = 0.9);
    m.def("conditional_expected_duration",
          py::overload_cast<const ReturnSeries&, const WindowSpec&, double>(&conditional_expected_duration),
          py::arg("returns"), window, py::arg("alpha") = 0.9);
    m.def("duration_deviation", py::overload_cast<const ReturnSeries&, const WindowSpec&>(&duration_deviation),
          py::arg("returns"), window);
    m.def("duration_quantile",
          py::overload_cast<const ReturnSeries&, const WindowSpec&, double>(&duration_quantile), py::arg("returns"),
          window, py::arg("alpha") = 0.9);
    m.def("risk_report",
          [](const ReturnSeries& r, const WindowSpec& w, double a) { return report_dict(risk_report(r, w, a)); },
          py::arg("returns"), window, py::arg("alpha") = 0.9);

    m.def(
        "check_temporal_axioms",
        [](py::object transform, const std::vector<Values>& fixtures, const Values& shifts, const Values& scales,
           double tolerance, std::int64_t threshold) {
            PathFunctional fn;
            if (py::isinstance<py::str>(transform)) {
                fn = named_transform(transform.cast<std::string>(), threshold);
            } else {
                auto callable = transform.cast<std::function<double(Values)>>();
                fn = [callable](std::span<const double> x) { return callable(Values(x.begin(), x.end())); };
            }
            const auto paths = to_paths(fixtures);
            const auto rep = check_temporal_axioms(fn, paths, shifts, scales, tolerance);
            py::dict d;
            d["normalization"] = axiom_result(rep.normalization);
            d["shift_invariance"] = axiom_result(rep.shift_invariance);
            d["scaling_invariance"] = axiom_result(rep.scaling_invariance);
            return d;
        },
        py::arg("transform"), py::arg("fixtures"), py::arg("shifts") = Values{-2.5, 0.7, 10.0},
        py::arg("scales") = Values{0.5, 2.0, 10.0}, py::arg("tolerance") = 0.0, py::arg("threshold") = 1,
        "transform is one of 'max_duration', 'episode_duration', 'lst', 'max_drawdown' or a callable "
        "mapping a list of path values to a float");

    m.def(
        "homogeneity_witness",
        [](const std::string& measure, const std::vector<Values>& paths, double lambda, double alpha) {
            TemporalRiskMeasure rm;
            if (measure == "conditional_expected_duration") rm = conditional_expected_duration_measure(alpha);
            else if (measure == "duration_quantile") rm = duration_quantile_measure(alpha);
            else if (measure == "duration_deviation") rm = duration_deviation_measure();
            else throw py::value_error("unknown measure '" + measure + "'");
            const auto w = homogeneity_witness(rm, to_paths(paths), lambda);
            py::dict d;
            d["value"] = w.value;
            d["scaled_value"] = w.scaled_value;
            d["lambda_times_value"] = w.lambda_times_value;
            d["inconclusive"] = w.inconclusive;
            d["homogeneity_fails"] = w.homogeneity_fails();
            return d;
        },
        py::arg("measure"), py::arg("paths"), py::arg("lam"), py::arg("alpha") = 0.9);

    // montecarlo -----------------------------------------------------------

    m.def(
        "simulate_ar1",
        [](double kappa, std::size_t n, std::uint64_t seed, double sigma_eps) {
            return simulate_ar1({kappa, sigma_eps}, n, Seed{seed});
        },
        py::arg("kappa"), py::arg("n"), py::arg("seed"), py::arg("sigma_eps") = 0.1);
    m.def("fit_ar1", py::overload_cast<const ReturnSeries&>(&fit_ar1), py::arg("returns"));
    m.def("fit_ar1_values", [](const Values& v) { return fit_ar1(v); }, py::arg("values"));
    m.def(
        "kappa_table",
        [](const Values& kappas, std::size_t n, std::uint64_t seed, double alpha, const WindowSpec& w,
           double sigma_eps) {
            py::list rows;
            for (const auto& r : kappa_table(kappas, n, Seed{seed}, alpha, w, sigma_eps)) {
                py::dict d;
                d["kappa"] = r.kappa;
                d["volatility"] = r.volatility;
                d["expected_shortfall"] = r.expected_shortfall;
                d["ced"] = r.ced;
                d["conditional_expected_duration"] = r.conditional_expected_duration;
                d["alpha"] = r.alpha;
                d["n"] = r.n;
                rows.append(d);
            }
            return rows;
        },
        py::arg("kappas"), py::arg("n"), py::arg("seed"), py::arg("alpha") = 0.9, window,
        py::arg("sigma_eps") = 0.1);
    m.def(
        "kappa_correlation_experiment",
        [](const Values& kappas, std::size_t regime_length, std::size_t repeats, std::uint64_t seed,
           std::size_t metric_window, std::size_t sub_path, double alpha, double sigma_eps) {
            KappaCorrelationConfig c;
            for (double k : kappas) c.regimes.push_back({k, regime_length});
            c.repeats = repeats;
            c.seed = Seed{seed};
            c.metric_window = metric_window;
            c.sub_path = sub_path;
            c.alpha = alpha;
            c.sigma_eps = sigma_eps;
            const auto r = kappa_correlation_experiment(c);
            py::dict d;
            d["volatility"] = r.volatility;
            d["expected_shortfall"] = r.expected_shortfall;
            d["ced"] = r.ced;
            d["conditional_expected_duration"] = r.conditional_expected_duration;
            d["windows"] = r.windows;
            return d;
        },
        py::arg("kappas"), py::arg("regime_length") = 2000, py::arg("repeats") = 5, py::arg("seed") = 1,
        py::arg("metric_window") = 126, py::arg("sub_path") = 21, py::arg("alpha") = 0.9, py::arg("sigma_eps") = 0.1);
}
