#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polyodds/closed_form.hpp"
#include "polyodds/inventory.hpp"
#include "polyodds/partition.hpp"
#include "polyodds/rational.hpp"

namespace polyodds {

// Cap on exhaustively enumerated outcomes. Oversized requests fail with
// BudgetExceeded instead of running open-ended.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Result of a full enumeration. probability is good/total on uniform sample
// spaces and a weighted rational otherwise. bad_by_index tallies, per piece
// position, the outcomes that position ruined (uniform oracles only).
struct ExactCount {
    BigInt total;
    BigInt good;
    BigRat probability;
    std::vector<BigInt> bad_by_index;
};

// Visits every composition of n into k positive parts in lexicographic
// order. fn receives a span over an internal buffer valid for the call.
template <typename Fn>
void visit_compositions(std::int64_t n, int k, Fn&& fn) {
    if (k < 1 || n < k) throw InvalidParams("compositions need n >= k >= 1");
    std::vector<std::int64_t> parts(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, std::int64_t remaining) -> void {
        if (pos == k - 1) {
            parts[static_cast<std::size_t>(pos)] = remaining;
            fn(std::span<const std::int64_t>(parts));
            return;
        }
        const std::int64_t headroom = remaining - (k - 1 - pos);
        for (std::int64_t v = 1; v <= headroom; ++v) {
            parts[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
}

// Visits every tuple in {1..n}^k in lexicographic order.
template <typename Fn>
void visit_tuples(std::int64_t n, int k, Fn&& fn) {
    if (k < 1 || n < 1) throw InvalidParams("tuples need n >= 1, k >= 1");
    std::vector<std::int64_t> coords(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            fn(std::span<const std::int64_t>(coords));
            return;
        }
        for (std::int64_t v = 1; v <= n; ++v) {
            coords[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

// Materialized composition list, lexicographic. C(n-1, k-1) entries.
std::vector<Inventory> enumerate_compositions(std::int64_t n, int k,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

// Counts the compositions of n into k parts that pass the k-gon test.
ExactCount broken_brick_oracle(const ProblemParams& p,
                               std::uint64_t budget = kDefaultEnumerationBudget);

// Compositions whose piece at piece_index (0-based) is at least half the
// total, counted by direct scan. Equals C(floor(n/2), k-1) for every index.
BigInt count_bad_set(const ProblemParams& p, std::size_t piece_index,
                     std::uint64_t budget = kDefaultEnumerationBudget);

// Counts the tuples in {1..n}^k that pass the k-gon test. Also cross-checks
// the per-index bad tallies against C(n+1, k) and refuses to return if they
// disagree (that would be an internal counting bug).
ExactCount pickup_bricks_oracle(const ProblemParams& p,
                                std::uint64_t budget = kDefaultEnumerationBudget);

// Discrete Stick(lambda): stick i's length is uniform on {lambda_i .. n},
// and given that length its cut set is uniform over all compositions into
// lambda_i parts. Outcomes are weighted accordingly, so probability is a
// weighted rational rather than good/total.
ExactCount stick_lambda_brick_oracle(std::int64_t n, const Partition& lam,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace polyodds
