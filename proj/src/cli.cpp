#include "pathrisk/cli.hpp"

#include "pathrisk/errors.hpp"
#include "pathrisk/montecarlo.hpp"
#include "pathrisk/pathmetrics.hpp"
#include "pathrisk/riskfunc.hpp"
#include "pathrisk/series.hpp"
#include "pathrisk/temporal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace pathrisk::cli {

std::string format_number(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Tabular output
// ---------------------------------------------------------------------------

struct Column {
    std::string name;
    std::string null_text;  // CSV rendering of a missing value
};

/// A report is a list of named columns and rows of JSON cells. CSV prints a
/// header plus one line per row. JSON prints a single object: scalars for a
/// single record, one array per column otherwise.
struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<json>> rows;
    bool single_record = false;
};

json rounded(const json& v) {
    if (v.is_number_float()) return json(std::stod(format_number(v.get<double>())));
    return v;
}

std::string cell_text(const json& v, const Column& c) {
    if (v.is_null()) return c.null_text;
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number_float()) return format_number(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void write_csv(const Table& t, std::ostream& os) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c].name;
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << cell_text(row[c], t.columns[c]);
        os << '\n';
    }
}

void write_json(const Table& t, std::ostream& os) {
    json doc = json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (t.single_record) {
            doc[t.columns[c].name] = t.rows.empty() ? json() : rounded(t.rows.front()[c]);
        } else {
            json col = json::array();
            for (const auto& row : t.rows) col.push_back(rounded(row[c]));
            doc[t.columns[c].name] = std::move(col);
        }
    }
    os << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

struct Config {
    std::string command;
    std::string input;
    std::string output;
    double alpha = 0.9;
    std::string window = "180";
    std::size_t stride = 1;
    std::int64_t threshold = 0;
    std::uint64_t seed = 1;
    std::vector<double> kappas;
    std::size_t n = 10000;
    std::string format = "csv";
    bool percent = false;
    double sigma_eps = 0.1;
    int periods_per_year = ReturnSeries::kDefaultPeriodsPerYear;
    std::string transform = "max_duration";
    std::size_t regime_length = 2000;
    std::size_t repeats = 5;
    std::size_t metric_window = 126;
    std::size_t sub_path = 21;
    std::size_t metric_stride = 1;
};

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw UsageError("--alpha must lie in [0, 1)");
}

WindowSpec parse_window(const Config& cfg) {
    if (cfg.window == "full") return WindowSpec::full();
    std::size_t len = 0;
    std::size_t pos = 0;
    try {
        len = std::stoul(cfg.window, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != cfg.window.size() || len < 2) {
        throw UsageError("--window must be an integer >= 2 or 'full', got '" + cfg.window + "'");
    }
    if (cfg.stride < 1) throw UsageError("--stride must be >= 1");
    return WindowSpec::rolling(len, cfg.stride);
}

json window_value(const WindowSpec& w) { return w.whole_history ? json("full") : json(w.length); }

double to_percent(double log_drop) { return -std::expm1(-log_drop); }

ReturnSeries load_input(const Config& cfg) {
    if (cfg.input.empty()) throw UsageError("--input is required for '" + cfg.command + "'");
    std::string text;
    if (cfg.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(cfg.input, std::ios::binary);
        if (!in) throw std::runtime_error(cfg.input + ": cannot open file");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return parse_returns_csv(text, cfg.periods_per_year);
    } catch (const pathrisk::ParseError& e) {
        throw std::runtime_error(cfg.input + ": " + e.what());
    } catch (const DomainError& e) {
        throw std::runtime_error(cfg.input + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

Table cmd_paths(const Config& cfg) {
    const ReturnSeries r = load_input(cfg);
    const PathProcess p = path_from_returns(r);
    const auto x = p.values();
    const auto high = running_max(x);
    const auto dd = drawdown(x);
    const auto g = peak_time(x);
    const auto d = duration(x);

    Table t;
    t.columns = {{"date", ""}, {"path", ""}, {"running_max", ""}, {"drawdown", ""}, {"peak_time", ""}, {"duration", ""}};
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::string date = (i == 0 || !r.has_labels()) ? std::string{} : r.labels()[i - 1];
        t.rows.push_back({date, x[i], high[i], cfg.percent ? to_percent(dd[i]) : dd[i], g[i], d[i]});
    }
    return t;
}

Table cmd_risk(const Config& cfg) {
    check_alpha(cfg.alpha);
    const WindowSpec w = parse_window(cfg);
    const ReturnSeries r = load_input(cfg);
    const RiskReport rep = risk_report(r, w, cfg.alpha);

    Table t;
    t.single_record = true;
    for (const char* name : {"volatility", "expected_shortfall", "ced", "mean_max_duration", "duration_deviation",
                             "duration_quantile", "conditional_expected_duration", "alpha", "window", "stride",
                             "periods_per_year", "return_count", "path_sample"}) {
        t.columns.push_back({name, ""});
    }
    t.rows.push_back({rep.volatility, rep.expected_shortfall, cfg.percent ? to_percent(rep.ced) : rep.ced,
                      rep.mean_max_duration, rep.duration_deviation, rep.duration_quantile,
                      rep.conditional_expected_duration, rep.alpha, window_value(w), w.stride, rep.periods_per_year,
                      rep.return_count, rep.path_sample});
    return t;
}

Table cmd_episode(const Config& cfg) {
    const ReturnSeries r = load_input(cfg);
    const PathProcess p = path_from_returns(r);
    if (max_drawdown(p.values()) == 0.0) {
        throw std::runtime_error("series never falls below its running maximum; there is no drawdown episode");
    }
    const DrawdownEpisode ep = max_drawdown_episode(p.values());

    Table t;
    t.single_record = true;
    t.columns = {{"peak", ""}, {"bottom", ""}, {"recovery", "CENSORED"}, {"duration", ""}, {"censored", ""},
                 {"magnitude", ""}};
    t.rows.push_back({ep.peak, ep.bottom, ep.recovery ? json(*ep.recovery) : json(), ep.duration, ep.censored,
                      cfg.percent ? to_percent(ep.magnitude) : ep.magnitude});
    return t;
}

Table cmd_lst(const Config& cfg) {
    if (cfg.threshold < 1) throw UsageError("--threshold must be >= 1 period");
    const ReturnSeries r = load_input(cfg);
    const PathProcess p = path_from_returns(r);
    const auto hit = liquidation_stopping_time(p.values(), cfg.threshold);

    Table t;
    t.single_record = true;
    t.columns = {{"threshold", ""}, {"stopping_time", "NONE"}};
    t.rows.push_back({cfg.threshold, hit ? json(*hit) : json()});
    return t;
}

// Built-in fixtures: seeded Gaussian random walks of varying length plus one constant path.
std::vector<PathProcess> axiom_fixtures(Seed seed) {
    std::vector<PathProcess> fixtures;
    GaussianStream g(seed);
    for (std::size_t i = 0; i < 100; ++i) {
        const std::size_t len = 10 + (i * 37) % 191;
        std::vector<double> v(len + 1, 0.0);
        for (std::size_t t = 1; t <= len; ++t) v[t] = v[t - 1] + 0.01 * g.next();
        fixtures.emplace_back(std::move(v));
    }
    fixtures.emplace_back(std::vector<double>(50, 0.0));
    return fixtures;
}

Table cmd_axioms(const Config& cfg) {
    PathFunctional fn;
    std::string name = cfg.transform;
    double tolerance = 0.0;
    if (cfg.transform == "max_duration") {
        fn = TemporalTransform::max_duration();
    } else if (cfg.transform == "episode_duration") {
        fn = TemporalTransform::episode_duration();
    } else if (cfg.transform == "lst") {
        if (cfg.threshold < 1) throw UsageError("--threshold must be >= 1 period for the lst transform");
        const auto tr = TemporalTransform::liquidation_stopping_time(cfg.threshold);
        fn = tr;
        name = tr.name();
    } else if (cfg.transform == "max_drawdown") {
        fn = [](std::span<const double> x) { return max_drawdown(x); };
        tolerance = 1e-12;
    } else {
        throw UsageError("--transform must be one of max_duration, episode_duration, lst, max_drawdown");
    }

    const auto fixtures = axiom_fixtures(Seed{cfg.seed});
    const std::vector<double> shifts{-2.5, 0.7, 10.0};
    const std::vector<double> scales{0.5, 2.0, 10.0};
    const AxiomReport rep = check_temporal_axioms(fn, fixtures, shifts, scales, tolerance);

    Table t;
    t.columns = {{"transform", ""}, {"axiom", ""}, {"result", ""}, {"fixture", ""}, {"parameter", ""},
                 {"expected", ""}, {"observed", ""}};
    const auto add = [&](const char* axiom, const AxiomResult& a) {
        std::vector<json> row{name, axiom, a.holds ? "PASS" : "FAIL"};
        if (a.counterexample) {
            row.insert(row.end(), {a.counterexample->fixture, a.counterexample->parameter,
                                   a.counterexample->expected, a.counterexample->observed});
        } else {
            row.insert(row.end(), {json(), json(), json(), json()});
        }
        t.rows.push_back(std::move(row));
    };
    add("normalization", rep.normalization);
    add("shift_invariance", rep.shift_invariance);
    add("scaling_invariance", rep.scaling_invariance);
    return t;
}

Ar1Params single_kappa(const Config& cfg) {
    if (cfg.kappas.size() != 1) throw UsageError("--kappa takes exactly one value for '" + cfg.command + "'");
    const Ar1Params p{cfg.kappas.front(), cfg.sigma_eps};
    if (!(std::fabs(p.kappa) < 1.0)) throw UsageError("--kappa must satisfy |kappa| < 1");
    if (!(p.sigma_eps >= 0.0)) throw UsageError("--sigma-eps must be >= 0");
    return p;
}

Table cmd_simulate(const Config& cfg) {
    const Ar1Params p = single_kappa(cfg);
    if (cfg.n < 1) throw UsageError("--n must be >= 1");
    const ReturnSeries r = simulate_ar1(p, cfg.n, Seed{cfg.seed});

    Table t;
    t.columns = {{"date", ""}, {"return", ""}};
    for (std::size_t i = 0; i < r.size(); ++i) t.rows.push_back({std::to_string(i + 1), r.values()[i]});
    return t;
}

Table cmd_fit(const Config& cfg) {
    const ReturnSeries r = load_input(cfg);
    if (r.size() < 3) {
        throw UsageError("fit needs at least 3 returns, " + cfg.input + " has " + std::to_string(r.size()));
    }
    Table t;
    t.single_record = true;
    t.columns = {{"kappa_hat", ""}, {"n", ""}};
    t.rows.push_back({fit_ar1(r), r.size()});
    return t;
}

std::vector<double> kappas_or_default(const Config& cfg, std::vector<double> fallback) {
    std::vector<double> k = cfg.kappas.empty() ? std::move(fallback) : cfg.kappas;
    for (double v : k) {
        if (!(std::fabs(v) < 1.0)) throw UsageError("every kappa must satisfy |kappa| < 1");
    }
    return k;
}

Table cmd_kappa_table(const Config& cfg) {
    check_alpha(cfg.alpha);
    const WindowSpec w = parse_window(cfg);
    const auto kappas = kappas_or_default(cfg, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
    if (!(cfg.sigma_eps >= 0.0)) throw UsageError("--sigma-eps must be >= 0");
    if (w.whole_history ? cfg.n < 1 : cfg.n < w.length) {
        throw UsageError("--n must be at least the window length");
    }
    const auto rows = kappa_table(kappas, cfg.n, Seed{cfg.seed}, cfg.alpha, w, cfg.sigma_eps);

    Table t;
    for (const char* name : {"kappa", "volatility", "expected_shortfall", "ced", "conditional_expected_duration",
                             "alpha", "window", "n"}) {
        t.columns.push_back({name, ""});
    }
    for (const auto& r : rows) {
        t.rows.push_back({r.kappa, r.volatility, r.expected_shortfall, cfg.percent ? to_percent(r.ced) : r.ced,
                          r.conditional_expected_duration, r.alpha, window_value(r.window), r.n});
    }
    return t;
}

Table cmd_kappa_corr(const Config& cfg) {
    check_alpha(cfg.alpha);
    KappaCorrelationConfig kc;
    for (double k : kappas_or_default(cfg, {0.1, 0.8})) kc.regimes.push_back({k, cfg.regime_length});
    kc.repeats = cfg.repeats;
    kc.sigma_eps = cfg.sigma_eps;
    kc.metric_window = cfg.metric_window;
    kc.sub_path = cfg.sub_path;
    kc.metric_stride = cfg.metric_stride;
    kc.alpha = cfg.alpha;
    kc.seed = Seed{cfg.seed};
    try {
        kc.validate();
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }
    const KappaCorrelation res = kappa_correlation_experiment(kc);

    Table t;
    t.columns = {{"measure", ""}, {"correlation", ""}, {"windows", ""}};
    t.rows.push_back({"volatility", res.volatility, res.windows});
    t.rows.push_back({"expected_shortfall", res.expected_shortfall, res.windows});
    t.rows.push_back({"ced", res.ced, res.windows});
    t.rows.push_back({"conditional_expected_duration", res.conditional_expected_duration, res.windows});
    return t;
}

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

void add_input(CLI::App* sub, Config& cfg) {
    sub->add_option("-i,--input", cfg.input, "Input CSV with header 'date,return' ('-' for stdin)")->required();
    sub->add_option("--periods-per-year", cfg.periods_per_year, "Periods per year for annualisation")
        ->capture_default_str();
}

void add_window(CLI::App* sub, Config& cfg) {
    sub->add_option("--alpha", cfg.alpha, "Confidence level in [0, 1)")->capture_default_str();
    sub->add_option("--window", cfg.window, "Rolling window length in periods, or 'full'")->capture_default_str();
    sub->add_option("--stride", cfg.stride, "Window stride in periods")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Path-dependent drawdown and duration risk analytics", "pathrisk"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("-o,--output", cfg.output, "Write the report to this file instead of stdout");
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* paths = app.add_subcommand("paths", "Per-period path, running max, drawdown, peak time and duration");
    add_input(paths, cfg);
    paths->add_flag("--percent", cfg.percent, "Report drawdown as 1 - exp(-D)");

    auto* risk = app.add_subcommand("risk", "Single-period and path-dependent risk report");
    add_input(risk, cfg);
    add_window(risk, cfg);
    risk->add_flag("--percent", cfg.percent, "Report CED as 1 - exp(-CED)");

    auto* episode = app.add_subcommand("episode", "Peak, bottom and recovery of the maximum drawdown");
    add_input(episode, cfg);
    episode->add_flag("--percent", cfg.percent, "Report the magnitude as 1 - exp(-D)");

    auto* lst = app.add_subcommand("lst", "Liquidation stopping time for a duration threshold");
    add_input(lst, cfg);
    lst->add_option("--threshold", cfg.threshold, "Duration threshold in periods")->required();

    auto* axioms = app.add_subcommand("axioms", "Check the temporal-transformation axioms on built-in fixtures");
    axioms->add_option("--transform", cfg.transform, "max_duration | episode_duration | lst | max_drawdown")
        ->capture_default_str();
    axioms->add_option("--threshold", cfg.threshold, "Threshold for the lst transform");
    axioms->add_option("--seed", cfg.seed, "Fixture seed")->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "Simulate an AR(1) return series");
    simulate->add_option("--kappa", cfg.kappas, "Autoregressive coefficient")->required()->expected(1);
    simulate->add_option("--sigma-eps", cfg.sigma_eps, "Innovation standard deviation")->capture_default_str();
    simulate->add_option("--n", cfg.n, "Number of periods")->capture_default_str();
    simulate->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

    auto* fit = app.add_subcommand("fit", "Fit an AR(1) coefficient to the log returns of a series");
    add_input(fit, cfg);

    auto* table = app.add_subcommand("kappa-table", "Risk measures of simulated AR(1) series across kappa");
    add_window(table, cfg);
    table->add_option("--kappa,--kappas", cfg.kappas, "Autoregressive coefficients")->delimiter(',');
    table->add_option("--sigma-eps", cfg.sigma_eps, "Innovation standard deviation")->capture_default_str();
    table->add_option("--n", cfg.n, "Periods per simulated series")->capture_default_str();
    table->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
    table->add_flag("--percent", cfg.percent, "Report CED as 1 - exp(-CED)");

    auto* corr = app.add_subcommand("kappa-corr", "Correlation of rolling kappa estimates with rolling risk measures");
    corr->add_option("--alpha", cfg.alpha, "Confidence level in [0, 1)")->capture_default_str();
    corr->add_option("--kappa,--kappas", cfg.kappas, "Regime coefficients, played in order")->delimiter(',');
    corr->add_option("--regime-length", cfg.regime_length, "Periods per regime")->capture_default_str();
    corr->add_option("--repeats", cfg.repeats, "Times the regime schedule is played")->capture_default_str();
    corr->add_option("--metric-window", cfg.metric_window, "Metric window length")->capture_default_str();
    corr->add_option("--sub-path", cfg.sub_path, "Sub-path length for drawdown and duration")->capture_default_str();
    corr->add_option("--metric-stride", cfg.metric_stride, "Metric window stride")->capture_default_str();
    corr->add_option("--sigma-eps", cfg.sigma_eps, "Innovation standard deviation")->capture_default_str();
    corr->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();

    try {
        Table t;
        if (cfg.command == "paths") t = cmd_paths(cfg);
        else if (cfg.command == "risk") t = cmd_risk(cfg);
        else if (cfg.command == "episode") t = cmd_episode(cfg);
        else if (cfg.command == "lst") t = cmd_lst(cfg);
        else if (cfg.command == "axioms") t = cmd_axioms(cfg);
        else if (cfg.command == "simulate") t = cmd_simulate(cfg);
        else if (cfg.command == "fit") t = cmd_fit(cfg);
        else if (cfg.command == "kappa-table") t = cmd_kappa_table(cfg);
        else if (cfg.command == "kappa-corr") t = cmd_kappa_corr(cfg);

        std::ostringstream buf;
        if (cfg.format == "json") write_json(t, buf);
        else write_csv(t, buf);

        if (cfg.output.empty()) {
            out << buf.str();
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file) throw std::runtime_error(cfg.output + ": cannot open for writing");
            file << buf.str();
            if (!file) throw std::runtime_error(cfg.output + ": write failed");
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "pathrisk " << cfg.command << ": usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "pathrisk " << cfg.command << ": error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace pathrisk::cli
