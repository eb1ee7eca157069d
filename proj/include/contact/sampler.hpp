#ifndef CONTACT_SAMPLER_HPP
#define CONTACT_SAMPLER_HPP

#include <cstdint>

#include "contact/rational.hpp"

namespace contact {

// Deterministic seeded stream (splitmix64). The standard library engines are
// bit-stable but its distributions are not, so draws go through this only.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi] inclusive; span must fit in uint64
    long next_int(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    RandomStream split(std::uint64_t tag) {
        return RandomStream(next_seed_base_ ^ (0x9e3779b97f4a7c15ull * (tag + 1)) ^ state_);
    }

  private:
    std::uint64_t state_;
    std::uint64_t next_seed_base_ = 0xd1b54a32d192ed03ull;
};

// Reproducible generic sampling configuration: identical seed and parameters
// reproduce identical sample sequences.
struct GenericSampler {
    std::uint64_t seed = 1;
    unsigned sample_count = 8;
    long height_bound = 7;  // coefficients drawn uniformly from [-H, H]

    RandomStream stream(std::uint64_t tag) const {
        RandomStream root(seed);
        return root.split(tag);
    }
};

}  // namespace contact

#endif
