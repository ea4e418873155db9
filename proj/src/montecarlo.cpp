#include "pathrisk/montecarlo.hpp"

#include "pathrisk/errors.hpp"
#include "pathrisk/pathmetrics.hpp"
#include "pathrisk/riskfunc.hpp"
#include "pathrisk/temporal.hpp"

#include <cmath>
#include <string>

namespace pathrisk {

namespace {

void check_kappa(double kappa) {
    if (!std::isfinite(kappa) || std::fabs(kappa) >= 1.0) {
        throw DomainError("autoregressive coefficient must satisfy |kappa| < 1, got " + std::to_string(kappa));
    }
}

ReturnSeries to_simple_returns(const std::vector<double>& log_returns, int periods_per_year) {
    std::vector<double> simple(log_returns.size());
    for (std::size_t i = 0; i < log_returns.size(); ++i) simple[i] = std::expm1(log_returns[i]);
    return ReturnSeries(std::move(simple), {}, periods_per_year);
}

double tail_mean_of(std::span<const double> v, double alpha) {
    return tail_mean(EmpiricalSample(std::vector<double>(v.begin(), v.end())), alpha);
}

}  // namespace

void Ar1Params::validate() const {
    check_kappa(kappa);
    if (!std::isfinite(sigma_eps) || sigma_eps < 0.0) {
        throw DomainError("innovation scale must be finite and >= 0, got " + std::to_string(sigma_eps));
    }
}

std::vector<double> simulate_ar1_values(const Ar1Params& params, std::size_t n, Seed seed) {
    params.validate();
    if (n < 1) throw DomainError("simulation length must be >= 1");

    GaussianStream gauss(seed);
    std::vector<double> x(n);
    x[0] = std::sqrt(params.stationary_variance()) * gauss.next();
    for (std::size_t t = 1; t < n; ++t) x[t] = params.kappa * x[t - 1] + params.sigma_eps * gauss.next();
    return x;
}

ReturnSeries simulate_ar1(const Ar1Params& params, std::size_t n, Seed seed, int periods_per_year) {
    return to_simple_returns(simulate_ar1_values(params, n, seed), periods_per_year);
}

double fit_ar1(std::span<const double> values) {
    if (values.size() < 3) {
        throw SizeError("AR(1) fit needs at least 3 observations, got " + std::to_string(values.size()));
    }
    double cross = 0.0;
    double lagged = 0.0;
    for (std::size_t t = 1; t < values.size(); ++t) {
        cross += values[t] * values[t - 1];
        lagged += values[t - 1] * values[t - 1];
    }
    if (lagged == 0.0) throw DegenerateInputError("AR(1) fit: lagged values are all zero");
    return cross / lagged;
}

double fit_ar1(const ReturnSeries& returns) { return fit_ar1(returns.log_returns()); }

std::vector<KappaTableRow> kappa_table(std::span<const double> kappas, std::size_t n, Seed seed, double alpha,
                                       const WindowSpec& spec, double sigma_eps) {
    for (double k : kappas) check_kappa(k);

    std::vector<KappaTableRow> rows;
    rows.reserve(kappas.size());
    for (std::size_t i = 0; i < kappas.size(); ++i) {
        const ReturnSeries r = simulate_ar1({kappas[i], sigma_eps}, n, derive_seed(seed, i));
        KappaTableRow row;
        row.kappa = kappas[i];
        row.volatility = volatility(r);
        row.expected_shortfall = expected_shortfall(r, alpha);
        row.ced = ced(r, spec, alpha);
        row.conditional_expected_duration = conditional_expected_duration(r, spec, alpha);
        row.alpha = alpha;
        row.window = spec;
        row.n = n;
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Regime-switching experiment
// ---------------------------------------------------------------------------

std::size_t KappaCorrelationConfig::series_length() const {
    std::size_t total = 0;
    for (const auto& r : regimes) total += r.length;
    return total * repeats;
}

void KappaCorrelationConfig::validate() const {
    if (regimes.empty()) throw ConfigError("regime schedule is empty");
    for (const auto& r : regimes) {
        if (!std::isfinite(r.kappa) || std::fabs(r.kappa) >= 1.0) {
            throw ConfigError("regime kappa must satisfy |kappa| < 1, got " + std::to_string(r.kappa));
        }
        if (r.length < 1) throw ConfigError("regime length must be >= 1");
    }
    if (repeats < 1) throw ConfigError("repeats must be >= 1");
    if (!std::isfinite(sigma_eps) || sigma_eps < 0.0) throw ConfigError("sigma_eps must be finite and >= 0");
    if (sub_path < 2) throw ConfigError("sub-path length must be >= 2");
    if (metric_window < 3) throw ConfigError("metric window must be >= 3 for the AR(1) fit");
    if (metric_window < sub_path) {
        throw ConfigError("metric window (" + std::to_string(metric_window) + ") is shorter than the sub-path length (" +
                          std::to_string(sub_path) + ")");
    }
    if (metric_stride < 1) throw ConfigError("metric stride must be >= 1");
    if (!(alpha >= 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in [0, 1)");
    const std::size_t n = series_length();
    if (n < metric_window + metric_stride) {
        throw ConfigError("schedule yields " + std::to_string(n) + " periods; at least " +
                          std::to_string(metric_window + metric_stride) +
                          " are needed for two metric windows of length " + std::to_string(metric_window));
    }
}

ReturnSeries simulate_regime_switching(const KappaCorrelationConfig& config) {
    config.validate();
    std::vector<double> x;
    x.reserve(config.series_length());

    std::uint64_t segment = 0;
    for (std::size_t rep = 0; rep < config.repeats; ++rep) {
        for (const auto& regime : config.regimes) {
            GaussianStream gauss(derive_seed(config.seed, segment));
            for (std::size_t i = 0; i < regime.length; ++i) {
                if (x.empty()) {
                    const Ar1Params p{regime.kappa, config.sigma_eps};
                    x.push_back(std::sqrt(p.stationary_variance()) * gauss.next());
                } else {
                    x.push_back(regime.kappa * x.back() + config.sigma_eps * gauss.next());
                }
            }
            ++segment;
        }
    }
    return to_simple_returns(x, ReturnSeries::kDefaultPeriodsPerYear);
}

KappaCorrelation kappa_correlation_experiment(const KappaCorrelationConfig& config) {
    const ReturnSeries series = simulate_regime_switching(config);
    const std::vector<double> logs = series.log_returns();
    const std::size_t n = series.size();
    const std::size_t m = config.metric_window;
    const std::size_t l = config.sub_path;

    // per sub-path statistics, indexed by sub-path start
    std::vector<double> sub_dd;
    std::vector<double> sub_dur;
    sub_dd.reserve(n - l + 1);
    sub_dur.reserve(n - l + 1);
    visit_windows(series, WindowSpec::rolling(l, 1), [&](std::size_t, std::span<const double> path) {
        sub_dd.push_back(max_drawdown(path));
        sub_dur.push_back(static_cast<double>(max_duration(path)));
    });

    KappaCorrelation out;
    out.series_length = n;
    const std::size_t subs_per_window = m - l + 1;
    for (std::size_t start = 0; start + m <= n; start += config.metric_stride) {
        const ReturnSeries window = series.slice(start, m);
        out.kappa_hat.push_back(fit_ar1(std::span<const double>(logs).subspan(start, m)));
        out.volatility_series.push_back(volatility(window));
        out.expected_shortfall_series.push_back(expected_shortfall(window, config.alpha));
        out.ced_series.push_back(tail_mean_of(std::span<const double>(sub_dd).subspan(start, subs_per_window), config.alpha));
        out.ced_duration_series.push_back(
            tail_mean_of(std::span<const double>(sub_dur).subspan(start, subs_per_window), config.alpha));
    }
    out.windows = out.kappa_hat.size();

    const EmpiricalSample k(out.kappa_hat);
    out.volatility = pearson(k, EmpiricalSample(out.volatility_series));
    out.expected_shortfall = pearson(k, EmpiricalSample(out.expected_shortfall_series));
    out.ced = pearson(k, EmpiricalSample(out.ced_series));
    out.conditional_expected_duration = pearson(k, EmpiricalSample(out.ced_duration_series));
    return out;
}

}  // namespace pathrisk
