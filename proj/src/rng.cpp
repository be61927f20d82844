#include "pce/rng.hpp"

#include <cmath>

namespace pce {

namespace {

constexpr std::uint64_t kIncrement = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() {
    ++counter_;
    return mix64(seed_ + counter_ * kIncrement);
}

double Rng::uniform() {
    // 53 random bits -> [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (cached_valid_) {
        cached_valid_ = false;
        return cached_gauss_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    cached_gauss_ = r * std::sin(theta);
    cached_valid_ = true;
    return r * std::cos(theta);
}

Rng Rng::child(std::uint64_t stream) const {
    return Rng(mix64(seed_ ^ mix64(stream + kIncrement)));
}

}  // namespace pce
