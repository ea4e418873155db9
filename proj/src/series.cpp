#include "pathrisk/series.hpp"

#include "pathrisk/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

namespace pathrisk {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

void check_return(double r, std::size_t index) {
    if (!std::isfinite(r)) {
        throw DomainError("return at position " + std::to_string(index) + " is not finite");
    }
    if (r <= -1.0) {
        throw DomainError("return at position " + std::to_string(index) +
                          " is <= -1; the log path is undefined");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// ReturnSeries
// ---------------------------------------------------------------------------

ReturnSeries::ReturnSeries(std::vector<double> values, std::vector<std::string> labels, int periods_per_year)
    : values_(std::move(values)), labels_(std::move(labels)), periods_per_year_(periods_per_year) {
    if (periods_per_year_ <= 0) {
        throw DomainError("periods_per_year must be positive, got " + std::to_string(periods_per_year_));
    }
    if (!labels_.empty() && labels_.size() != values_.size()) {
        throw std::invalid_argument("label count (" + std::to_string(labels_.size()) +
                                    ") does not match value count (" + std::to_string(values_.size()) + ")");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) check_return(values_[i], i);
}

ReturnSeries ReturnSeries::slice(std::size_t first, std::size_t count) const {
    if (first > values_.size() || count > values_.size() - first) {
        throw SizeError("slice [" + std::to_string(first) + ", " + std::to_string(first + count) +
                        ") exceeds series of length " + std::to_string(values_.size()));
    }
    std::vector<double> v(values_.begin() + first, values_.begin() + first + count);
    std::vector<std::string> l;
    if (!labels_.empty()) l.assign(labels_.begin() + first, labels_.begin() + first + count);
    return ReturnSeries(std::move(v), std::move(l), periods_per_year_);
}

std::vector<double> ReturnSeries::log_returns() const {
    std::vector<double> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(), [](double r) { return std::log1p(r); });
    return out;
}

// ---------------------------------------------------------------------------
// PathProcess
// ---------------------------------------------------------------------------

PathProcess::PathProcess() : values_{0.0} {}

PathProcess::PathProcess(std::vector<double> values, std::string origin_label)
    : values_(std::move(values)), origin_label_(std::move(origin_label)) {
    if (values_.empty()) throw DomainError("a path needs at least one value");
    if (values_.front() != 0.0) throw DomainError("a path must start at 0");
    for (double v : values_) {
        if (!std::isfinite(v)) throw DomainError("path values must be finite");
    }
}

PathProcess PathProcess::scaled(double lambda) const {
    std::vector<double> v(values_);
    for (double& x : v) x *= lambda;
    return PathProcess(std::move(v), origin_label_);
}

// ---------------------------------------------------------------------------
// WindowSpec
// ---------------------------------------------------------------------------

WindowSpec WindowSpec::rolling(std::size_t length, std::size_t stride) {
    if (length < 2) throw DomainError("window length must be >= 2, got " + std::to_string(length));
    if (stride < 1) throw DomainError("window stride must be >= 1");
    return WindowSpec{length, stride, false};
}

WindowSpec WindowSpec::full() { return WindowSpec{0, 1, true}; }

std::size_t WindowSpec::window_count(std::size_t series_length) const {
    if (whole_history) return 1;
    if (series_length < length) return 0;
    return (series_length - length) / stride + 1;
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

ReturnSeries parse_returns_csv(std::string_view text, int periods_per_year) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::vector<double> values;
    std::vector<std::string> labels;
    std::size_t line_no = 0;
    bool header_seen = false;

    while (!text.empty() || !header_seen) {
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (!header_seen) {
            if (line != "date,return") {
                throw ParseError(line_no, "expected header 'date,return'");
            }
            header_seen = true;
            continue;
        }
        if (line.empty()) continue;

        const auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError(line_no, "expected 2 columns");
        }
        const std::string_view date = trim(line.substr(0, comma));
        const std::string_view field = trim(line.substr(comma + 1));

        double r = 0.0;
        const char* end = field.data() + field.size();
        auto [ptr, ec] = std::from_chars(field.data(), end, r);
        if (field.empty() || ec != std::errc{} || ptr != end) {
            throw ParseError(line_no, "return '" + std::string(field) + "' is not a number");
        }
        if (!std::isfinite(r) || r <= -1.0) {
            throw DomainError("line " + std::to_string(line_no) + ": return " + std::string(field) +
                              " must be finite and > -1");
        }
        labels.emplace_back(date);
        values.push_back(r);
    }
    return ReturnSeries(std::move(values), std::move(labels), periods_per_year);
}

PathProcess path_from_returns(const ReturnSeries& returns) {
    std::vector<double> path(returns.size() + 1, 0.0);
    double acc = 0.0;
    const auto r = returns.values();
    for (std::size_t i = 0; i < r.size(); ++i) {
        acc += std::log1p(r[i]);
        path[i + 1] = acc;
    }
    return PathProcess(std::move(path));
}

void visit_windows(const ReturnSeries& returns, const WindowSpec& spec,
                   const std::function<void(std::size_t, std::span<const double>)>& visit) {
    if (spec.whole_history) {
        const PathProcess p = path_from_returns(returns);
        visit(0, p.values());
        return;
    }
    if (spec.length < 2 || spec.stride < 1) throw DomainError("invalid window spec");
    if (spec.length > returns.size()) {
        throw SizeError("window length " + std::to_string(spec.length) + " exceeds series of " +
                        std::to_string(returns.size()) + " returns");
    }

    const std::vector<double> logs = returns.log_returns();
    std::vector<double> buffer(spec.length + 1, 0.0);
    for (std::size_t start = 0; start + spec.length <= logs.size(); start += spec.stride) {
        double acc = 0.0;
        for (std::size_t i = 0; i < spec.length; ++i) {
            acc += logs[start + i];
            buffer[i + 1] = acc;
        }
        visit(start, buffer);
    }
}

std::vector<PathProcess> rolling_windows(const ReturnSeries& returns, const WindowSpec& spec) {
    std::vector<PathProcess> out;
    out.reserve(spec.window_count(returns.size()));
    const auto& labels = returns.labels();
    visit_windows(returns, spec, [&](std::size_t start, std::span<const double> path) {
        std::string origin = labels.empty() || spec.whole_history ? std::string{} : labels[start];
        out.emplace_back(std::vector<double>(path.begin(), path.end()), std::move(origin));
    });
    return out;
}

}  // namespace pathrisk
