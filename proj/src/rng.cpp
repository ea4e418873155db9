#include "pathrisk/rng.hpp"

#include <cmath>
#include <numbers>

namespace pathrisk {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

Seed derive_seed(Seed base, std::uint64_t index) {
    return Seed{splitmix64(splitmix64(base.value) ^ splitmix64(index + 0x632BE59BD9B4E019ULL))};
}

double GaussianStream::uniform_open() {
    // 53 random bits mapped to the open interval (0, 1)
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double GaussianStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

}  // namespace pathrisk
