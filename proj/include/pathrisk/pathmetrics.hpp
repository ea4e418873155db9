/**
 * @file pathmetrics.hpp
 * @brief Spatial and temporal drawdown statistics of a single path.
 *
 * All functions take the path as a span of values X_0..X_T. They do not
 * require X_0 = 0, which lets callers evaluate shifted paths X + c directly.
 * Every function throws std::invalid_argument on an empty span.
 *
 * "At peak" means X_t >= runmax_t - eq_tol. With the default eq_tol = 0 the
 * comparison is exact: the running maximum is carried forward by value, so a
 * path re-touching its previous high counts as recovered.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pathrisk {

using Period = std::size_t;

using DrawdownPath = std::vector<double>;
using PeakTimeSeries = std::vector<Period>;
using DurationSeries = std::vector<Period>;

/// Deepest drawdown of a path together with the times that bracket it.
struct DrawdownEpisode {
    Period peak = 0;                  ///< last time at the running max before the bottom
    Period bottom = 0;                ///< first time the maximum drawdown is attained
    std::optional<Period> recovery;   ///< first time back at the running max, if within horizon
    Period duration = 0;              ///< recovery - peak, or T - peak when censored
    bool censored = false;
    double magnitude = 0.0;           ///< maximum drawdown, log units

    bool operator==(const DrawdownEpisode&) const = default;
};

std::vector<double> running_max(std::span<const double> path);

DrawdownPath drawdown(std::span<const double> path);

double max_drawdown(std::span<const double> path);

/// G_t: last s <= t with the path at its running maximum.
PeakTimeSeries peak_time(std::span<const double> path, double eq_tol = 0.0);

/// delta_t = t - G_t.
DurationSeries duration(std::span<const double> path, double eq_tol = 0.0);

/// Longest underwater stretch; an excursion still open at T counts.
Period max_duration(std::span<const double> path, double eq_tol = 0.0);

/// Throws DomainError when the path has no drawdown.
DrawdownEpisode max_drawdown_episode(std::span<const double> path, double eq_tol = 0.0);

/// First t with duration_t >= threshold, or nullopt. Throws DomainError for threshold < 1.
std::optional<Period> liquidation_stopping_time(std::span<const double> path, std::int64_t threshold,
                                                double eq_tol = 0.0);

}  // namespace pathrisk
