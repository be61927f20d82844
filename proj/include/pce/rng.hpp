#pragma once

#include <cstdint>

namespace pce {

// Counter-based generator (splitmix64 mix of seed + counter*increment).
// Identical seed gives an identical stream on every platform; child
// streams are derived by fixed offsets so all randomness in a run flows
// from one config seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), counter_(0) {}

    std::uint64_t next_u64();
    double uniform();   // [0, 1)
    double gaussian();  // N(0, 1) via Box-Muller

    Rng child(std::uint64_t stream) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }
    void set_counter(std::uint64_t c) { counter_ = c; cached_valid_ = false; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
    double cached_gauss_ = 0.0;
    bool cached_valid_ = false;
};

}  // namespace pce
