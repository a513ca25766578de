#pragma once

#include <cstdint>
#include <random>

namespace polyrl {

// Finalizer of the splitmix64 generator; decorrelates nearby integers.
std::uint64_t mix64(std::uint64_t z);

// Seeded uniform random stream with an explicit substream rule.
//
// substream(i) opens a fresh stream seeded with mix64(seed ^ mix64(i)),
// independent of how many draws the parent has consumed. Work items that
// each own a substream therefore see the same randomness whether a batch
// runs sequentially or in parallel.
//
// Draws avoid std::uniform_real_distribution (whose output is
// implementation-defined); uniform01 maps the top 53 bits of the engine
// output, so identical seeds give bit-identical sequences everywhere.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    // uniform on [0, 1), 53-bit resolution
    double uniform01();

    // uniform on [lo, hi)
    double uniform(double lo, double hi);

    RandomStream substream(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace polyrl
