#pragma once

#include <cstdint>
#include <random>

namespace pathrisk {

struct Seed {
    std::uint64_t value = 0;
    bool operator==(const Seed&) const = default;
};

/// Seed of the index-th substream of `base` (splitmix64 over both words).
Seed derive_seed(Seed base, std::uint64_t index);

/// Standard normal draws from mt19937_64 via Box-Muller.
///
/// std::normal_distribution is implementation-defined, so it would tie the
/// output stream to one standard library. mt19937_64 is fully specified and
/// the transform below is fixed, so a seed reproduces the same stream
/// everywhere.
class GaussianStream {
public:
    explicit GaussianStream(Seed seed) : engine_(seed.value) {}

    double next();

private:
    double uniform_open();  // (0, 1)

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace pathrisk
