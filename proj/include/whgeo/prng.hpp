// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace whgeo {

// splitmix64: tiny, seedable, identical output on every platform. The verify
// suites promise byte-identical JSON for a given --seed, so the stream must
// not depend on the standard library's distribution implementations.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi] inclusive
    long long uniform(long long lo, long long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // per-trial stream derivation so trial k is independent of trial order
    static SplitMix64 stream(uint64_t seed, uint64_t k) {
        SplitMix64 g(seed ^ (0x510e527fade682d1ULL + k * 0x6a09e667f3bcc909ULL));
        g.next();
        return g;
    }

private:
    uint64_t state_;
};

}  // namespace whgeo
