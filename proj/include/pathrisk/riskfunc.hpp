/**
 * @file riskfunc.hpp
 * @brief Empirical risk functionals over finite samples.
 *
 * Quantiles use the upper order statistic z_(k), k = max(1, ceil(alpha * n)):
 * the smallest d whose empirical exceedance probability P(Z > d) is at most
 * 1 - alpha. No interpolation.
 *
 * The tail mean integrates that quantile step function exactly over
 * [alpha, 1], so it is well defined for any alpha, not only multiples of 1/n:
 *
 *     TM = [ (k - alpha*n) * z_(k) + sum_{i>k} z_(i) ] / (n - alpha*n)
 */
#pragma once

#include "pathrisk/series.hpp"

#include <span>
#include <vector>

namespace pathrisk {

/// Nonempty, finite sample of a scalar random variable.
class EmpiricalSample {
public:
    /// Throws std::invalid_argument if empty or any value is not finite.
    explicit EmpiricalSample(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double min() const;
    double max() const;
    double mean() const;

private:
    std::vector<double> values_;
};

/// alpha must lie in [0, 1); otherwise DomainError.
double quantile(const EmpiricalSample& sample, double alpha);
double tail_mean(const EmpiricalSample& sample, double alpha);

/// Sample standard deviation (n - 1). DomainError for n < 2.
double deviation(const EmpiricalSample& sample);

/// m3 / m2^{3/2} with population central moments. DomainError for n < 3 or zero spread.
double skewness(const EmpiricalSample& sample);

/// Sample standard deviation of the returns times sqrt(periods_per_year).
double volatility(const ReturnSeries& returns);

/// Tail mean at alpha of the per-period losses -r. Reported as a positive loss.
double expected_shortfall(const ReturnSeries& returns, double alpha);

/// Sample Pearson correlation. DomainError on length mismatch, n < 2 or a constant input.
double pearson(const EmpiricalSample& a, const EmpiricalSample& b);

}  // namespace pathrisk
