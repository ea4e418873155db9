// Independent statistical oracles: definitions evaluated literally.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

// inf { d : #{z > d} / n <= 1 - alpha }, searched over the sample values.
inline double quantile(std::vector<double> z, double alpha) {
    std::sort(z.begin(), z.end());
    const double n = static_cast<double>(z.size());
    for (double d : z) {
        const auto above = std::count_if(z.begin(), z.end(), [d](double v) { return v > d; });
        if (static_cast<double>(above) / n <= 1.0 - alpha + 1e-12) return d;
    }
    return z.back();
}

// (1 / (1 - alpha)) * integral_alpha^1 Q_u du, integrating the empirical
// quantile step function cell by cell: Q_u = z_(i) on ((i-1)/n, i/n].
inline double tail_mean(std::vector<double> z, double alpha) {
    std::sort(z.begin(), z.end());
    const double n = static_cast<double>(z.size());
    long double integral = 0.0L;
    for (std::size_t i = 1; i <= z.size(); ++i) {
        const double lo = std::max(alpha, static_cast<double>(i - 1) / n);
        const double hi = static_cast<double>(i) / n;
        if (hi > lo) integral += static_cast<long double>(hi - lo) * z[i - 1];
    }
    return static_cast<double>(integral / (1.0L - alpha));
}

inline double mean(const std::vector<double>& z) {
    long double s = 0.0L;
    for (double v : z) s += v;
    return static_cast<double>(s / z.size());
}

inline double sample_sd(const std::vector<double>& z) {
    const long double m = mean(z);
    long double ss = 0.0L;
    for (double v : z) ss += (v - m) * (v - m);
    return static_cast<double>(std::sqrt(ss / (z.size() - 1)));
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const long double ma = mean(a), mb = mean(b);
    long double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return static_cast<double>(sab / std::sqrt(saa * sbb));
}

}  // namespace oracle
