/**
 * @file montecarlo.hpp
 * @brief Seeded AR(1) simulation, AR(1) fitting and the serial-correlation experiments.
 *
 * The AR(1) recursion x_t = kappa * x_{t-1} + eps_t drives the per-period
 * log returns, so the cumulative path is exactly the running sum of the
 * simulated values. The returned ReturnSeries stores the matching simple
 * returns exp(x_t) - 1, which are always > -1.
 *
 * Reproducibility: a (params, n, seed) triple always yields the same series.
 * Experiments that need several independent streams derive them with
 * derive_seed(base, index), so results do not depend on evaluation order.
 */
#pragma once

#include "pathrisk/rng.hpp"
#include "pathrisk/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pathrisk {

struct Ar1Params {
    double kappa = 0.0;
    double sigma_eps = 0.1;

    /// Throws DomainError unless |kappa| < 1 and sigma_eps >= 0 (both finite).
    void validate() const;
    double stationary_variance() const { return sigma_eps * sigma_eps / (1.0 - kappa * kappa); }
};

/// Raw AR(1) values x_0..x_{n-1}, x_0 drawn from the stationary law N(0, sigma^2 / (1 - kappa^2)).
std::vector<double> simulate_ar1_values(const Ar1Params& params, std::size_t n, Seed seed);

/// Return series whose log returns are simulate_ar1_values(params, n, seed).
ReturnSeries simulate_ar1(const Ar1Params& params, std::size_t n, Seed seed,
                          int periods_per_year = ReturnSeries::kDefaultPeriodsPerYear);

/// Conditional Gaussian MLE without intercept:
///   kappa_hat = sum x_t x_{t-1} / sum x_{t-1}^2.
/// SizeError for fewer than 3 values, DegenerateInputError for an all-zero lag vector.
double fit_ar1(std::span<const double> values);

/// fit_ar1 applied to the log returns of the series.
double fit_ar1(const ReturnSeries& returns);

struct KappaTableRow {
    double kappa = 0.0;
    double volatility = 0.0;
    double expected_shortfall = 0.0;
    double ced = 0.0;
    double conditional_expected_duration = 0.0;
    double alpha = 0.9;
    WindowSpec window;
    std::size_t n = 0;
};

/// One row per kappa. Row i is simulated from derive_seed(seed, i).
std::vector<KappaTableRow> kappa_table(std::span<const double> kappas, std::size_t n, Seed seed, double alpha,
                                       const WindowSpec& spec, double sigma_eps = 0.1);

struct Regime {
    double kappa = 0.0;
    std::size_t length = 0;  ///< periods
};

struct KappaCorrelationConfig {
    std::vector<Regime> regimes;     ///< played in order, `repeats` times
    std::size_t repeats = 1;
    double sigma_eps = 0.1;
    std::size_t metric_window = 126; ///< window for kappa_hat, volatility and ES
    std::size_t sub_path = 21;       ///< path length for the drawdown / duration samples
    std::size_t metric_stride = 1;
    double alpha = 0.9;
    Seed seed{};

    std::size_t series_length() const;
    /// Throws ConfigError on an empty schedule, an invalid kappa, or window
    /// lengths that do not fit the series.
    void validate() const;
};

/// Series with a regime-switching autoregressive coefficient. Segment j (the
/// j-th regime played) draws its innovations from derive_seed(seed, j).
ReturnSeries simulate_regime_switching(const KappaCorrelationConfig& config);

struct KappaCorrelation {
    double volatility = 0.0;
    double expected_shortfall = 0.0;
    double ced = 0.0;
    double conditional_expected_duration = 0.0;
    std::size_t windows = 0;
    std::size_t series_length = 0;

    // per-window series the correlations are computed from
    std::vector<double> kappa_hat;
    std::vector<double> volatility_series;
    std::vector<double> expected_shortfall_series;
    std::vector<double> ced_series;
    std::vector<double> ced_duration_series;
};

/**
 * Rolls a metric window over a regime-switching series. In every window it
 * fits kappa_hat and computes volatility and ES on the window's returns; CED
 * and the conditional expected duration are tail means over all sub-paths
 * of length `sub_path` that lie inside the window. Returns the Pearson
 * correlation of kappa_hat with each of the four measure series.
 */
KappaCorrelation kappa_correlation_experiment(const KappaCorrelationConfig& config);

}  // namespace pathrisk
