#pragma once

#include <cstdint>
#include <random>

namespace chowfano {

// Deterministic stream of bounded integers. mt19937_64 output is pinned by the
// standard; the rejection sampler below avoids std::uniform_int_distribution,
// whose mapping is implementation-defined. Identical (seed, stream) pairs must
// produce identical draws on every platform.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : gen_(mix(seed, stream)) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform integer in [lo, hi], inclusive
    long long uniform(long long lo, long long hi) {
        if (lo > hi) std::swap(lo, hi);
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<long long>(next_u64());  // full 64-bit span
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r >= limit);
        return lo + static_cast<long long>(r % range);
    }

    // small signed coefficient, the instance-generation default
    long long small_coeff() { return uniform(-9, 9); }
    long long nonzero_small_coeff() {
        long long v;
        do {
            v = small_coeff();
        } while (v == 0);
        return v;
    }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        // splitmix64 finalizer over the pair
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 gen_;
};

}  // namespace chowfano
