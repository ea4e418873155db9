#include "pathrisk/riskfunc.hpp"

#include "pathrisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace pathrisk {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw DomainError("confidence level must lie in [0, 1), got " + std::to_string(alpha));
    }
}

// 1-based rank of the alpha-quantile. alpha*n is snapped down when it sits a
// hair above an integer, so decimal levels such as 0.7 * 10 land on 7.
std::size_t quantile_rank(std::size_t n, double alpha) {
    const double an = alpha * static_cast<double>(n);
    const double k = std::ceil(an - 1e-9);
    return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(k, 1.0)), 1, n);
}

std::vector<double> sorted_copy(std::span<const double> v) {
    std::vector<double> s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    return s;
}

bool is_constant(std::span<const double> v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *lo == *hi;
}

}  // namespace

EmpiricalSample::EmpiricalSample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("empirical sample must be nonempty");
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("empirical sample values must be finite");
    }
}

double EmpiricalSample::min() const { return *std::min_element(values_.begin(), values_.end()); }
double EmpiricalSample::max() const { return *std::max_element(values_.begin(), values_.end()); }
double EmpiricalSample::mean() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

double quantile(const EmpiricalSample& sample, double alpha) {
    check_alpha(alpha);
    const auto z = sorted_copy(sample.values());
    return z[quantile_rank(z.size(), alpha) - 1];
}

double tail_mean(const EmpiricalSample& sample, double alpha) {
    check_alpha(alpha);
    const auto z = sorted_copy(sample.values());
    const std::size_t n = z.size();
    const std::size_t k = quantile_rank(n, alpha);
    const double an = alpha * static_cast<double>(n);

    const double boundary_weight = std::max(0.0, static_cast<double>(k) - an);
    double upper = 0.0;
    for (std::size_t i = k; i < n; ++i) upper += z[i];
    return (boundary_weight * z[k - 1] + upper) / (static_cast<double>(n) - an);
}

double deviation(const EmpiricalSample& sample) {
    const auto v = sample.values();
    if (v.size() < 2) throw DomainError("deviation needs at least 2 observations");
    if (is_constant(v)) return 0.0;
    const double m = sample.mean();
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double skewness(const EmpiricalSample& sample) {
    const auto v = sample.values();
    if (v.size() < 3) throw DomainError("skewness needs at least 3 observations");
    if (is_constant(v)) throw DomainError("skewness is undefined for a sample with zero deviation");
    const double n = static_cast<double>(v.size());
    const double m = sample.mean();
    double m2 = 0.0;
    double m3 = 0.0;
    for (double x : v) {
        const double d = x - m;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    return m3 / std::pow(m2, 1.5);
}

double volatility(const ReturnSeries& returns) {
    if (returns.size() < 2) throw DomainError("volatility needs at least 2 returns");
    const EmpiricalSample s(std::vector<double>(returns.values().begin(), returns.values().end()));
    return deviation(s) * std::sqrt(static_cast<double>(returns.periods_per_year()));
}

double expected_shortfall(const ReturnSeries& returns, double alpha) {
    check_alpha(alpha);
    if (returns.empty()) throw DomainError("expected shortfall needs at least 1 return");
    std::vector<double> losses(returns.size());
    std::transform(returns.values().begin(), returns.values().end(), losses.begin(),
                   [](double r) { return -r; });
    return tail_mean(EmpiricalSample(std::move(losses)), alpha);
}

double pearson(const EmpiricalSample& a, const EmpiricalSample& b) {
    const auto x = a.values();
    const auto y = b.values();
    if (x.size() != y.size()) {
        throw DomainError("pearson needs samples of equal length (" + std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()) + ")");
    }
    if (x.size() < 2) throw DomainError("pearson needs at least 2 pairs");
    if (is_constant(x) || is_constant(y)) throw DomainError("pearson is undefined for a constant sample");

    const double mx = a.mean();
    const double my = b.mean();
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace pathrisk
