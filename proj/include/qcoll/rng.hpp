// Copyright 2026 qcoll developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCOLL_RNG_HPP
#define QCOLL_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace qcoll {

/// Deterministic random stream: SplitMix64 (Steele, Lea & Flood 2014).
/// The algorithm is fixed by these constants, so streams are bitwise
/// reproducible across platforms and compilers. Derived streams for
/// parallel work come from `derive`, which double-hashes (seed, index)
/// so sibling streams do not overlap shifted copies of each other.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static SplitMix64 derive(uint64_t seed, uint64_t index) {
        return SplitMix64(mix(seed ^ mix(index + 0x9E3779B97F4A7C15ULL)));
    }

  private:
    uint64_t state_;
};

/// Uniform point on the unit sphere (area measure).
inline std::array<double, 3> sample_unit_sphere(SplitMix64& rng) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    double z = 2.0 * rng.next_double() - 1.0;
    double phi = two_pi * rng.next_double();
    double s = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
}

}  // namespace qcoll

#endif
