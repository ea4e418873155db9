// Exhaustive comparison of the single-pass path metrics with the
// brute-force definitions over every {-1, 0, +1}-step path.
#pragma once

#include "oracles/brute_force.hpp"
#include "pathrisk/pathmetrics.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

struct ExhaustiveResult {
    std::size_t paths = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;
};

inline std::string describe(const std::vector<double>& x, const char* what) {
    std::string s = std::string(what) + " on [";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(static_cast<int>(x[i]));
    return s + "]";
}

inline bool same_episode(const pathrisk::DrawdownEpisode& a, const Episode& b) {
    return a.peak == b.peak && a.bottom == b.bottom && a.recovery == b.recovery && a.duration == b.duration &&
           a.censored == b.censored && a.magnitude == b.magnitude;
}

inline void check_path(const std::vector<double>& x, ExhaustiveResult& res) {
    ++res.paths;
    const char* bad = nullptr;
    if (pathrisk::running_max(x) != running_max(x)) bad = "running_max";
    else if (pathrisk::peak_time(x) != peak_time(x)) bad = "peak_time";
    else if (pathrisk::duration(x) != duration(x)) bad = "duration";
    else if (pathrisk::max_drawdown(x) != max_drawdown(x)) bad = "max_drawdown";
    else if (max_drawdown(x) > 0 && !same_episode(pathrisk::max_drawdown_episode(x), max_drawdown_episode(x)))
        bad = "max_drawdown_episode";
    if (bad) {
        if (res.mismatches == 0) res.first_mismatch = describe(x, bad);
        ++res.mismatches;
    }
}

/// Every path with 0..max_steps steps over the alphabet {-1, 0, +1}.
inline ExhaustiveResult exhaustive_step_paths(std::size_t max_steps) {
    ExhaustiveResult res;
    std::vector<double> x{0.0};
    // depth-first enumeration; each prefix is itself a shorter path
    auto recurse = [&](auto&& self) -> void {
        check_path(x, res);
        if (x.size() - 1 == max_steps) return;
        for (double step : {-1.0, 0.0, 1.0}) {
            x.push_back(x.back() + step);
            self(self);
            x.pop_back();
        }
    };
    recurse(recurse);
    return res;
}

}  // namespace oracle
