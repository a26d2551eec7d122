#pragma once

#include <array>
#include <bit>
#include <cstdint>

// Reproducible random streams for the simulation kernels.
//
// The derivation below is part of the tool's external reproducibility
// contract; identical (seed, shard) pairs must produce identical streams
// in every build, forever.
//
//   mix64     = the splitmix64 output function (Vigna 2015)
//   state[j]  = mix64(master_seed + GOLDEN * (4*shard + j + 1)),  j = 0..3
//   generator = xoshiro256** over that state (s[0] forced to 1 if all four
//               words come out zero)
//   unit draw = ((x >> 11) + 1) * 2^-53            -> double in (0, 1]
//   bounded n = Lemire's unbiased multiply-shift rejection -> [0, n)

namespace polyodds::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(const std::array<std::uint64_t, 4>& state) : s_(state) {
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    // The shard-stream derivation documented above.
    static Xoshiro256StarStar for_shard(std::uint64_t master_seed, std::uint64_t shard) {
        std::array<std::uint64_t, 4> s;
        for (std::uint64_t j = 0; j < 4; ++j)
            s[j] = mix64(master_seed + kGolden * (4 * shard + j + 1));
        return Xoshiro256StarStar(s);
    }

    std::uint64_t next() {
        const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = std::rotl(s_[3], 45);
        return result;
    }

    // Uniform double in (0, 1]; never returns 0, so sampled lengths stay
    // strictly positive.
    double next_unit() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform integer in [0, n), unbiased.
    std::uint64_t next_below(std::uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::array<std::uint64_t, 4> s_;
};

}  // namespace polyodds::rng
