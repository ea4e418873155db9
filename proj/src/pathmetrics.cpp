#include "pathrisk/pathmetrics.hpp"

#include "pathrisk/errors.hpp"

#include <stdexcept>
#include <string>

namespace pathrisk {

namespace {

void require_nonempty(std::span<const double> path) {
    if (path.empty()) throw std::invalid_argument("path must contain at least one value");
}

// Single forward pass shared by the peak-time based statistics. Calls
// on_step(t, at_peak, runmax_t) for every t.
template <class Fn>
void scan_peaks(std::span<const double> path, double eq_tol, Fn&& on_step) {
    double high = path[0];
    for (std::size_t t = 0; t < path.size(); ++t) {
        const double x = path[t];
        if (x > high) high = x;
        on_step(t, x >= high - eq_tol, high);
    }
}

}  // namespace

std::vector<double> running_max(std::span<const double> path) {
    require_nonempty(path);
    std::vector<double> out(path.size());
    double high = path[0];
    for (std::size_t t = 0; t < path.size(); ++t) {
        if (path[t] > high) high = path[t];
        out[t] = high;
    }
    return out;
}

DrawdownPath drawdown(std::span<const double> path) {
    require_nonempty(path);
    DrawdownPath out(path.size());
    double high = path[0];
    for (std::size_t t = 0; t < path.size(); ++t) {
        if (path[t] > high) high = path[t];
        out[t] = high - path[t];
    }
    return out;
}

double max_drawdown(std::span<const double> path) {
    require_nonempty(path);
    double high = path[0];
    double worst = 0.0;
    for (double x : path) {
        if (x > high) high = x;
        if (high - x > worst) worst = high - x;
    }
    return worst;
}

PeakTimeSeries peak_time(std::span<const double> path, double eq_tol) {
    require_nonempty(path);
    PeakTimeSeries out(path.size());
    Period last = 0;
    scan_peaks(path, eq_tol, [&](std::size_t t, bool at_peak, double) {
        if (at_peak) last = t;
        out[t] = last;
    });
    return out;
}

DurationSeries duration(std::span<const double> path, double eq_tol) {
    require_nonempty(path);
    DurationSeries out(path.size());
    Period last = 0;
    scan_peaks(path, eq_tol, [&](std::size_t t, bool at_peak, double) {
        if (at_peak) last = t;
        out[t] = t - last;
    });
    return out;
}

Period max_duration(std::span<const double> path, double eq_tol) {
    require_nonempty(path);
    Period last = 0;
    Period longest = 0;
    scan_peaks(path, eq_tol, [&](std::size_t t, bool at_peak, double) {
        if (at_peak) last = t;
        if (t - last > longest) longest = t - last;
    });
    return longest;
}

DrawdownEpisode max_drawdown_episode(std::span<const double> path, double eq_tol) {
    require_nonempty(path);

    DrawdownEpisode ep;
    Period last_peak = 0;
    scan_peaks(path, eq_tol, [&](std::size_t t, bool at_peak, double high) {
        if (at_peak) last_peak = t;
        // strict '>' keeps the first index attaining the maximum
        if (high - path[t] > ep.magnitude) {
            ep.magnitude = high - path[t];
            ep.bottom = t;
            ep.peak = last_peak;
        }
    });
    if (!(ep.magnitude > 0.0)) {
        throw DomainError("path has no drawdown; the maximum-drawdown episode is undefined");
    }

    // Recovery: first time at or after the bottom that the path is back at its running max.
    double high = path[0];
    for (std::size_t t = 0; t < path.size(); ++t) {
        if (path[t] > high) high = path[t];
        if (t >= ep.bottom && path[t] >= high - eq_tol) {
            ep.recovery = t;
            break;
        }
    }

    const Period horizon = path.size() - 1;
    ep.censored = !ep.recovery.has_value();
    ep.duration = (ep.censored ? horizon : *ep.recovery) - ep.peak;
    return ep;
}

std::optional<Period> liquidation_stopping_time(std::span<const double> path, std::int64_t threshold,
                                                double eq_tol) {
    require_nonempty(path);
    if (threshold < 1) {
        throw DomainError("liquidation threshold must be >= 1 period, got " + std::to_string(threshold));
    }
    const auto limit = static_cast<Period>(threshold);
    std::optional<Period> hit;
    Period last = 0;
    scan_peaks(path, eq_tol, [&](std::size_t t, bool at_peak, double) {
        if (at_peak) last = t;
        if (!hit && t - last >= limit) hit = t;
    });
    return hit;
}

}  // namespace pathrisk
