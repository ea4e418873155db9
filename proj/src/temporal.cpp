#include "pathrisk/temporal.hpp"

#include "pathrisk/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pathrisk {

// ---------------------------------------------------------------------------
// TemporalTransform
// ---------------------------------------------------------------------------

TemporalTransform TemporalTransform::max_duration() { return {Kind::max_duration, 0}; }

TemporalTransform TemporalTransform::episode_duration() { return {Kind::episode_duration, 0}; }

TemporalTransform TemporalTransform::liquidation_stopping_time(std::int64_t threshold) {
    if (threshold < 1) {
        throw DomainError("liquidation threshold must be >= 1 period, got " + std::to_string(threshold));
    }
    return {Kind::liquidation_stopping_time, threshold};
}

double TemporalTransform::operator()(std::span<const double> path) const {
    switch (kind_) {
    case Kind::max_duration:
        return static_cast<double>(pathrisk::max_duration(path));
    case Kind::episode_duration:
        if (pathrisk::max_drawdown(path) == 0.0) return 0.0;
        return static_cast<double>(max_drawdown_episode(path).duration);
    case Kind::liquidation_stopping_time: {
        const auto hit = pathrisk::liquidation_stopping_time(path, threshold_);
        return hit ? static_cast<double>(*hit) : 0.0;
    }
    }
    throw std::logic_error("unknown temporal transform");
}

std::string TemporalTransform::name() const {
    switch (kind_) {
    case Kind::max_duration: return "max_duration";
    case Kind::episode_duration: return "episode_duration";
    case Kind::liquidation_stopping_time: return "lst(" + std::to_string(threshold_) + ")";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Axiom checks
// ---------------------------------------------------------------------------

namespace {

bool close(double a, double b, double tol) { return a == b || std::fabs(a - b) <= tol; }

void record(AxiomResult& r, AxiomCounterexample cx) {
    if (r.holds) {
        r.holds = false;
        r.counterexample = cx;
    }
}

}  // namespace

AxiomReport check_temporal_axioms(const PathFunctional& transform, std::span<const PathProcess> fixtures,
                                  std::span<const double> shifts, std::span<const double> scales,
                                  double tolerance) {
    if (fixtures.empty()) throw std::invalid_argument("axiom check needs at least one fixture");
    for (double s : scales) {
        if (!(s > 0.0)) throw std::invalid_argument("scales must be strictly positive");
    }

    AxiomReport report;
    std::vector<double> buf;

    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const auto x = fixtures[i].values();

        // normalization: constant paths of the same length
        std::vector<double> levels{0.0};
        levels.insert(levels.end(), shifts.begin(), shifts.end());
        for (double c : levels) {
            buf.assign(x.size(), c);
            const double v = transform(buf);
            if (!close(v, 0.0, tolerance)) record(report.normalization, {i, c, 0.0, v});
        }

        const double base = transform(x);

        for (double c : shifts) {
            buf.resize(x.size());
            for (std::size_t t = 0; t < x.size(); ++t) buf[t] = x[t] + c;
            const double v = transform(buf);
            if (!close(v, base, tolerance)) record(report.shift_invariance, {i, c, base, v});
        }
        for (double lambda : scales) {
            buf.resize(x.size());
            for (std::size_t t = 0; t < x.size(); ++t) buf[t] = lambda * x[t];
            const double v = transform(buf);
            if (!close(v, base, tolerance)) record(report.scaling_invariance, {i, lambda, base, v});
        }
    }
    return report;
}

AxiomReport check_temporal_axioms(const TemporalTransform& transform, std::span<const PathProcess> fixtures,
                                  std::span<const double> shifts, std::span<const double> scales) {
    // transforms return whole periods, so demand exact agreement
    return check_temporal_axioms(PathFunctional(transform), fixtures, shifts, scales, 0.0);
}

// ---------------------------------------------------------------------------
// Temporal risk measures
// ---------------------------------------------------------------------------

double TemporalRiskMeasure::operator()(std::span<const PathProcess> paths) const {
    if (paths.empty()) throw std::invalid_argument("temporal risk measure needs at least one path");
    std::vector<double> times;
    times.reserve(paths.size());
    for (const auto& p : paths) times.push_back(transform(p.values()));
    const EmpiricalSample sample(std::move(times));
    switch (functional) {
    case RiskFunctional::deviation: return deviation(sample);
    case RiskFunctional::quantile: return quantile(sample, alpha);
    case RiskFunctional::tail_mean: return tail_mean(sample, alpha);
    }
    throw std::logic_error("unknown risk functional");
}

std::string TemporalRiskMeasure::name() const {
    switch (functional) {
    case RiskFunctional::deviation: return "deviation(" + transform.name() + ")";
    case RiskFunctional::quantile: return "quantile(" + transform.name() + ")";
    case RiskFunctional::tail_mean: return "tail_mean(" + transform.name() + ")";
    }
    return "unknown";
}

TemporalRiskMeasure duration_deviation_measure() {
    return {TemporalTransform::max_duration(), RiskFunctional::deviation, 0.0};
}

TemporalRiskMeasure duration_quantile_measure(double alpha) {
    return {TemporalTransform::max_duration(), RiskFunctional::quantile, alpha};
}

TemporalRiskMeasure conditional_expected_duration_measure(double alpha) {
    return {TemporalTransform::max_duration(), RiskFunctional::tail_mean, alpha};
}

HomogeneityWitness homogeneity_witness(const TemporalRiskMeasure& measure, std::span<const PathProcess> paths,
                                       double lambda) {
    if (!(lambda > 0.0) || lambda == 1.0) {
        throw DomainError("homogeneity witness needs lambda > 0 and lambda != 1");
    }
    std::vector<PathProcess> scaled;
    scaled.reserve(paths.size());
    for (const auto& p : paths) scaled.push_back(p.scaled(lambda));

    HomogeneityWitness w;
    w.value = measure(paths);
    w.scaled_value = measure(scaled);
    w.lambda_times_value = lambda * w.value;
    w.inconclusive = (w.value == 0.0);
    return w;
}

// ---------------------------------------------------------------------------
// Samples
// ---------------------------------------------------------------------------

EmpiricalSample max_drawdown_sample(std::span<const PathProcess> paths) {
    std::vector<double> v;
    v.reserve(paths.size());
    for (const auto& p : paths) v.push_back(max_drawdown(p.values()));
    return EmpiricalSample(std::move(v));
}

EmpiricalSample max_duration_sample(std::span<const PathProcess> paths) {
    std::vector<double> v;
    v.reserve(paths.size());
    for (const auto& p : paths) v.push_back(static_cast<double>(max_duration(p.values())));
    return EmpiricalSample(std::move(v));
}

EmpiricalSample max_drawdown_sample(const ReturnSeries& returns, const WindowSpec& spec) {
    if (spec.whole_history) return EmpiricalSample(drawdown(path_from_returns(returns).values()));
    std::vector<double> v;
    v.reserve(spec.window_count(returns.size()));
    visit_windows(returns, spec, [&](std::size_t, std::span<const double> path) {
        v.push_back(max_drawdown(path));
    });
    return EmpiricalSample(std::move(v));
}

EmpiricalSample max_duration_sample(const ReturnSeries& returns, const WindowSpec& spec) {
    if (spec.whole_history) {
        const auto d = duration(path_from_returns(returns).values());
        return EmpiricalSample(std::vector<double>(d.begin(), d.end()));
    }
    std::vector<double> v;
    v.reserve(spec.window_count(returns.size()));
    visit_windows(returns, spec, [&](std::size_t, std::span<const double> path) {
        v.push_back(static_cast<double>(max_duration(path)));
    });
    return EmpiricalSample(std::move(v));
}

double ced(std::span<const PathProcess> paths, double alpha) {
    return tail_mean(max_drawdown_sample(paths), alpha);
}

double ced(const ReturnSeries& returns, const WindowSpec& spec, double alpha) {
    return tail_mean(max_drawdown_sample(returns, spec), alpha);
}

double conditional_expected_duration(std::span<const PathProcess> paths, double alpha) {
    return tail_mean(max_duration_sample(paths), alpha);
}

double conditional_expected_duration(const ReturnSeries& returns, const WindowSpec& spec, double alpha) {
    return tail_mean(max_duration_sample(returns, spec), alpha);
}

double duration_deviation(std::span<const PathProcess> paths) { return deviation(max_duration_sample(paths)); }

double duration_deviation(const ReturnSeries& returns, const WindowSpec& spec) {
    return deviation(max_duration_sample(returns, spec));
}

double duration_quantile(std::span<const PathProcess> paths, double alpha) {
    return quantile(max_duration_sample(paths), alpha);
}

double duration_quantile(const ReturnSeries& returns, const WindowSpec& spec, double alpha) {
    return quantile(max_duration_sample(returns, spec), alpha);
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

std::size_t minimum_returns_for_report(const WindowSpec& spec) {
    // two windows, so that the duration deviation is defined
    return spec.whole_history ? 2 : spec.length + spec.stride;
}

RiskReport risk_report(const ReturnSeries& returns, const WindowSpec& spec, double alpha) {
    const std::size_t need = minimum_returns_for_report(spec);
    if (returns.size() < need) {
        throw SizeError("risk report needs at least " + std::to_string(need) + " returns for this window, got " +
                        std::to_string(returns.size()));
    }

    const EmpiricalSample dd = max_drawdown_sample(returns, spec);
    const EmpiricalSample dur = max_duration_sample(returns, spec);

    RiskReport r;
    r.volatility = volatility(returns);
    r.expected_shortfall = expected_shortfall(returns, alpha);
    r.ced = tail_mean(dd, alpha);
    r.mean_max_duration = dur.mean();
    r.duration_deviation = deviation(dur);
    r.duration_quantile = quantile(dur, alpha);
    r.conditional_expected_duration = tail_mean(dur, alpha);
    r.alpha = alpha;
    r.window = spec;
    r.periods_per_year = returns.periods_per_year();
    r.return_count = returns.size();
    r.path_sample = dur.size();
    return r;
}

}  // namespace pathrisk
