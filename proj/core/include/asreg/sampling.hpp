#pragma once

#include <random>

#include "asreg/linmap.hpp"

namespace asreg {

// Deterministic sampling used by the verification protocol; the seed is
// part of the protocol so reports are reproducible bit-for-bit.
inline std::mt19937_64 protocol_rng(uint64_t salt = 0) { return std::mt19937_64(0x5eed0001ULL + salt); }

inline Rational sample_rational(std::mt19937_64& rng, bool nonzero = false) {
    static const long nums[] = {-3, -2, -1, 1, 2, 3, 0, 5, -5, 4};
    static const long dens[] = {1, 1, 1, 2, 1, 3, 1, 2, 1, 1};
    while (true) {
        size_t i = rng() % (sizeof(nums) / sizeof(nums[0]));
        if (nonzero && nums[i] == 0) continue;
        return rat(nums[i], dens[i]);
    }
}

inline LinMapV sample_invertible(std::mt19937_64& rng, size_t n) {
    while (true) {
        LinMapV m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = sample_rational(rng);
        if (m.invertible()) return m;
    }
}

} // namespace asreg
