/**
 * @file temporal.hpp
 * @brief Temporal transformations, temporal risk measures and their property checks.
 *
 * A temporal transformation maps a path to a time (in periods) and must be
 * unaffected by constant shifts and positive scalings of the path, and send
 * constant paths to 0. A temporal risk measure applies a risk functional to
 * the sample of such times over a set of paths.
 *
 * The per-series measures (ced, conditional_expected_duration, ...) build
 * their sample from the rolling windows of a return series. With a
 * whole-history WindowSpec the sample is instead the per-step drawdown or
 * duration values of the single full-history path.
 */
#pragma once

#include "pathrisk/pathmetrics.hpp"
#include "pathrisk/riskfunc.hpp"
#include "pathrisk/series.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pathrisk {

/// Any scalar statistic of a path; used by the axiom checker.
using PathFunctional = std::function<double(std::span<const double>)>;

class TemporalTransform {
public:
    enum class Kind { max_duration, episode_duration, liquidation_stopping_time };

    static TemporalTransform max_duration();
    /// Duration of the maximum-drawdown episode; 0 for a path without drawdown.
    static TemporalTransform episode_duration();
    /// First time the duration reaches `threshold`; 0 when liquidation never triggers.
    static TemporalTransform liquidation_stopping_time(std::int64_t threshold);

    double operator()(std::span<const double> path) const;

    Kind kind() const noexcept { return kind_; }
    std::int64_t threshold() const noexcept { return threshold_; }
    std::string name() const;

private:
    TemporalTransform(Kind kind, std::int64_t threshold) : kind_(kind), threshold_(threshold) {}

    Kind kind_;
    std::int64_t threshold_;
};

// ---------------------------------------------------------------------------
// Axiom checks
// ---------------------------------------------------------------------------

struct AxiomCounterexample {
    std::size_t fixture = 0;   ///< index into the fixture list
    double parameter = 0.0;    ///< constant level, shift or scale that broke the axiom
    double expected = 0.0;     ///< 0 for normalization, transform(X) otherwise
    double observed = 0.0;
};

struct AxiomResult {
    bool holds = true;
    std::optional<AxiomCounterexample> counterexample;
};

struct AxiomReport {
    AxiomResult normalization;
    AxiomResult shift_invariance;
    AxiomResult scaling_invariance;

    bool all_hold() const {
        return normalization.holds && shift_invariance.holds && scaling_invariance.holds;
    }
};

/**
 * Checks normalization, shift invariance and scaling invariance of `transform`
 * on the given fixtures.
 *
 * Normalization is tested on constant paths with the length of each fixture,
 * at level 0 and at every shift level. Values are compared with an absolute
 * tolerance (0 demands exact equality).
 *
 * Throws std::invalid_argument for an empty fixture list or a non-positive scale.
 */
AxiomReport check_temporal_axioms(const PathFunctional& transform, std::span<const PathProcess> fixtures,
                                  std::span<const double> shifts, std::span<const double> scales,
                                  double tolerance = 1e-12);

AxiomReport check_temporal_axioms(const TemporalTransform& transform, std::span<const PathProcess> fixtures,
                                  std::span<const double> shifts, std::span<const double> scales);

// ---------------------------------------------------------------------------
// Temporal risk measures
// ---------------------------------------------------------------------------

enum class RiskFunctional { deviation, quantile, tail_mean };

/// rho o theta evaluated on a finite sample of paths.
struct TemporalRiskMeasure {
    TemporalTransform transform = TemporalTransform::max_duration();
    RiskFunctional functional = RiskFunctional::tail_mean;
    double alpha = 0.9;

    double operator()(std::span<const PathProcess> paths) const;
    std::string name() const;
};

TemporalRiskMeasure duration_deviation_measure();
TemporalRiskMeasure duration_quantile_measure(double alpha);
TemporalRiskMeasure conditional_expected_duration_measure(double alpha);

/// measure(paths), measure(lambda * paths) and lambda * measure(paths).
struct HomogeneityWitness {
    double value = 0.0;
    double scaled_value = 0.0;
    double lambda_times_value = 0.0;
    /// The measure is 0 on the sample, where homogeneity holds trivially.
    bool inconclusive = false;

    /// True when the witness shows measure(lambda X) != lambda * measure(X).
    bool homogeneity_fails() const { return !inconclusive && scaled_value != lambda_times_value; }
    bool scale_invariant() const { return scaled_value == value; }
};

/// Throws DomainError unless lambda > 0 and lambda != 1.
HomogeneityWitness homogeneity_witness(const TemporalRiskMeasure& measure, std::span<const PathProcess> paths,
                                       double lambda);

// ---------------------------------------------------------------------------
// Samples and per-series measures
// ---------------------------------------------------------------------------

EmpiricalSample max_drawdown_sample(std::span<const PathProcess> paths);
EmpiricalSample max_duration_sample(std::span<const PathProcess> paths);

EmpiricalSample max_drawdown_sample(const ReturnSeries& returns, const WindowSpec& spec);
EmpiricalSample max_duration_sample(const ReturnSeries& returns, const WindowSpec& spec);

/// Conditional Expected Drawdown: tail mean of the maximum-drawdown sample.
double ced(std::span<const PathProcess> paths, double alpha);
double ced(const ReturnSeries& returns, const WindowSpec& spec, double alpha);

/// Tail mean of the maximum-duration sample.
double conditional_expected_duration(std::span<const PathProcess> paths, double alpha);
double conditional_expected_duration(const ReturnSeries& returns, const WindowSpec& spec, double alpha);

double duration_deviation(std::span<const PathProcess> paths);
double duration_deviation(const ReturnSeries& returns, const WindowSpec& spec);

double duration_quantile(std::span<const PathProcess> paths, double alpha);
double duration_quantile(const ReturnSeries& returns, const WindowSpec& spec, double alpha);

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

struct RiskReport {
    double volatility = 0.0;                     ///< per sqrt(year)
    double expected_shortfall = 0.0;             ///< per-period loss
    double ced = 0.0;                            ///< log units
    double mean_max_duration = 0.0;              ///< periods
    double duration_deviation = 0.0;             ///< periods
    double duration_quantile = 0.0;              ///< periods
    double conditional_expected_duration = 0.0;  ///< periods
    double alpha = 0.9;
    WindowSpec window;
    int periods_per_year = ReturnSeries::kDefaultPeriodsPerYear;
    std::size_t return_count = 0;   ///< sample size of volatility / ES
    std::size_t path_sample = 0;    ///< sample size of the drawdown / duration statistics
};

/// Smallest series length for which risk_report is defined under `spec`.
std::size_t minimum_returns_for_report(const WindowSpec& spec);

/// Throws SizeError naming the required minimum when the series is too short.
RiskReport risk_report(const ReturnSeries& returns, const WindowSpec& spec, double alpha);

}  // namespace pathrisk
