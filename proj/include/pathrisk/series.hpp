/**
 * @file series.hpp
 * @brief Return series, cumulative log-value paths and rolling-window extraction.
 *
 * A ReturnSeries holds per-period simple returns. Paths are built from the
 * log returns log(1 + r), so a PathProcess is additive: the value of a path
 * over a concatenation of two return blocks is the sum of the block values.
 * Drawdown magnitudes computed on these paths are therefore in log units.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathrisk {

class ReturnSeries {
public:
    static constexpr int kDefaultPeriodsPerYear = 252;

    ReturnSeries() = default;

    /// Validates that every value is finite and > -1, and that labels (when
    /// given) match the value count. Throws DomainError / std::invalid_argument.
    explicit ReturnSeries(std::vector<double> values,
                          std::vector<std::string> labels = {},
                          int periods_per_year = kDefaultPeriodsPerYear);

    std::span<const double> values() const noexcept { return values_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_labels() const noexcept { return !labels_.empty(); }
    int periods_per_year() const noexcept { return periods_per_year_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// Contiguous sub-series [first, first + count), labels carried along.
    ReturnSeries slice(std::size_t first, std::size_t count) const;

    /// Per-period log returns log(1 + r).
    std::vector<double> log_returns() const;

private:
    std::vector<double> values_;
    std::vector<std::string> labels_;
    int periods_per_year_ = kDefaultPeriodsPerYear;
};

/// Cumulative log-value path X_0..X_T with X_0 = 0.
class PathProcess {
public:
    /// The trivial path {0}.
    PathProcess();

    /// Throws DomainError unless values is nonempty, finite and starts at 0.
    explicit PathProcess(std::vector<double> values, std::string origin_label = {});

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    /// Horizon T (number of steps).
    std::size_t horizon() const noexcept { return values_.size() - 1; }
    double operator[](std::size_t t) const { return values_[t]; }
    double last() const { return values_.back(); }
    const std::string& origin_label() const noexcept { return origin_label_; }

    /// lambda * X. Still anchored at 0, so the result is a valid path.
    PathProcess scaled(double lambda) const;

private:
    std::vector<double> values_;
    std::string origin_label_;
};

/// Rolling window geometry. A whole-history spec stands for the single
/// window covering the full series.
struct WindowSpec {
    std::size_t length = 180;
    std::size_t stride = 1;
    bool whole_history = false;

    /// Throws DomainError unless length >= 2 and stride >= 1.
    static WindowSpec rolling(std::size_t length, std::size_t stride = 1);
    static WindowSpec full();

    /// Number of windows over a series of T returns (0 when T < length).
    std::size_t window_count(std::size_t series_length) const;
};

/// Parses a `date,return` CSV. Throws ParseError on malformed rows and
/// DomainError (mentioning the line) on returns <= -1 or non-finite values.
ReturnSeries parse_returns_csv(std::string_view text, int periods_per_year = ReturnSeries::kDefaultPeriodsPerYear);

PathProcess path_from_returns(const ReturnSeries& returns);

/// One rebased path per window start 0, stride, 2*stride, ...
/// Throws SizeError when the window is longer than the series.
std::vector<PathProcess> rolling_windows(const ReturnSeries& returns, const WindowSpec& spec);

/// Streams the window paths without materialising them. The span handed to
/// `visit` is only valid for the duration of the call.
void visit_windows(const ReturnSeries& returns, const WindowSpec& spec,
                   const std::function<void(std::size_t start, std::span<const double> path)>& visit);

}  // namespace pathrisk
