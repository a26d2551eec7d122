#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "polyodds/partition.hpp"
#include "polyodds/rng.hpp"

namespace polyodds {

struct SimConfig {
    Partition lam;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    std::uint32_t shards = 1;
    double confidence = 0.95;

    // One line per failed trial (violator index plus piece lengths), for
    // small-trial inspection. Forces single-threaded execution.
    std::ostream* trace = nullptr;

    // Debug mode: when nonzero, every trial is evaluated a second time with
    // all lengths multiplied by this factor and the two verdicts must agree.
    double scale_check = 0.0;
};

struct SimEstimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    std::uint32_t shards = 1;
};

// Wilson score interval for a binomial proportion, clamped to [0, 1].
std::pair<double, double> confidence_interval(std::uint64_t successes, std::uint64_t trials,
                                              double confidence);

// Continuous Stick(lambda): per trial, each stick length is uniform on
// (0, 1] and each stick is cut at lambda_i - 1 independent uniform interior
// points; the trial succeeds when the k pieces pass the k-gon test.
// Fully determined by (lam, trials, seed, shards).
SimEstimate simulate_stick_lambda(const SimConfig& cfg);

// Discrete counterpart sampling the same model as stick_lambda_brick_oracle:
// stick lengths uniform on {lambda_i .. n}, cut sets uniform over distinct
// interior integer points.
SimEstimate simulate_brick_lambda(std::int64_t n, const SimConfig& cfg);

// Per-shard success counts (the values the estimates aggregate). Exposed so
// aggregation order-independence is testable.
std::vector<std::uint64_t> stick_shard_counts(const SimConfig& cfg);
std::vector<std::uint64_t> brick_shard_counts(std::int64_t n, const SimConfig& cfg);

namespace detail {

// Trials handled by one shard: an even split with the remainder going to
// the lowest-numbered shards.
inline std::uint64_t shard_trials(std::uint64_t trials, std::uint32_t shards, std::uint32_t shard) {
    return trials / shards + (shard < trials % shards ? 1 : 0);
}

// Piece sampling for one trial. Draw order is part of the reproducibility
// contract: sticks in stored partition order; per stick, one draw for the
// length, then one per cut. pieces must hold piece_count() doubles.
inline void sample_stick_pieces(rng::Xoshiro256StarStar& gen, std::span<const int> parts,
                                double* pieces) {
    std::size_t out = 0;
    for (int part : parts) {
        const double length = gen.next_unit();
        if (part == 1) {
            pieces[out++] = length;
            continue;
        }
        double* cuts = pieces + out;  // sorted cut positions, reused as pieces
        for (int c = 0; c < part - 1; ++c) {
            const double cut = length * gen.next_unit();
            int j = c;
            while (j > 0 && cuts[j - 1] > cut) {
                cuts[j] = cuts[j - 1];
                --j;
            }
            cuts[j] = cut;
        }
        double prev = 0.0;
        for (int c = 0; c < part - 1; ++c) {
            const double cut = cuts[c];
            cuts[c] = cut - prev;
            prev = cut;
        }
        cuts[part - 1] = length - prev;
        out += static_cast<std::size_t>(part);
    }
}

// Discrete variant: length = lambda_i + next_below(n - lambda_i + 1), then
// lambda_i - 1 distinct cut points drawn from {1 .. length-1}, redrawing on
// collision.
inline void sample_brick_pieces(rng::Xoshiro256StarStar& gen, std::span<const int> parts,
                                std::int64_t n, std::int64_t* pieces) {
    std::size_t out = 0;
    for (int part : parts) {
        const std::int64_t length =
            part + static_cast<std::int64_t>(gen.next_below(static_cast<std::uint64_t>(n - part + 1)));
        if (part == 1) {
            pieces[out++] = length;
            continue;
        }
        std::int64_t* cuts = pieces + out;
        int chosen = 0;
        while (chosen < part - 1) {
            const std::int64_t cut =
                1 + static_cast<std::int64_t>(gen.next_below(static_cast<std::uint64_t>(length - 1)));
            bool duplicate = false;
            for (int j = 0; j < chosen; ++j)
                if (cuts[j] == cut) {
                    duplicate = true;
                    break;
                }
            if (duplicate) continue;
            int j = chosen;
            while (j > 0 && cuts[j - 1] > cut) {
                cuts[j] = cuts[j - 1];
                --j;
            }
            cuts[j] = cut;
            ++chosen;
        }
        std::int64_t prev = 0;
        for (int c = 0; c < part - 1; ++c) {
            const std::int64_t cut = cuts[c];
            cuts[c] = cut - prev;
            prev = cut;
        }
        cuts[part - 1] = length - prev;
        out += static_cast<std::size_t>(part);
    }
}

}  // namespace detail

}  // namespace polyodds
