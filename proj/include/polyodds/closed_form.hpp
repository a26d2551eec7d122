#pragma once

#include <cstdint>

#include "polyodds/rational.hpp"

namespace polyodds {

// n is the brick length (or length-distribution bound), k the piece count.
struct ProblemParams {
    std::int64_t n = 0;
    int k = 0;
};

enum class Family { Broken, Pickup };

// C(m, j); 0 whenever the pair is out of range (j > m, or a negative
// argument). The j > m convention makes the brick formulas exact at the
// n = k and small-n edges with no special cases.
BigInt binomial(std::int64_t m, std::int64_t j);

BigInt factorial(int m);

// One stick broken at k-1 uniform points: 1 - k / 2^(k-1).
BigRat broken_stick_prob(int k);

// Integer stick of length n cut at k-1 distinct interior integer points:
// 1 - k * C(floor(n/2), k-1) / C(n-1, k-1). Requires n >= k >= 3.
BigRat broken_brick_prob(const ProblemParams& p);

// k independent lengths uniform on {1..n}: 1 - k * C(n+1, k) / n^k.
// Requires n >= 1, k >= 3.
BigRat pickup_bricks_prob(const ProblemParams& p);

// k independent lengths uniform on an interval: 1 - 1/(k-1)!.
BigRat pickup_sticks_prob(int k);

// |discrete probability - continuous limit| for the chosen family,
// evaluated exactly and converted to double at the end.
double convergence_gap(const ProblemParams& p, Family family);

}  // namespace polyodds
