#pragma once

// Plain single-threaded reference implementations of the parallel kernels.
// Deliberately naive: they enumerate through the public visitors and judge
// outcomes with the public Inventory predicate, so the tuned OpenMP paths
// can be checked against them bit for bit. Also used by the benchmark tool.

#include <cstdint>

#include "polyodds/montecarlo.hpp"
#include "polyodds/rational.hpp"

namespace polyodds::reference {

BigInt broken_brick_good_count(std::int64_t n, int k);
BigInt pickup_bricks_good_count(std::int64_t n, int k);

// Same sampling contract as the parallel simulators (identical streams and
// draw order), with a from-scratch trial evaluation and a serial shard loop.
SimEstimate simulate_stick_lambda(const SimConfig& cfg);
SimEstimate simulate_brick_lambda(std::int64_t n, const SimConfig& cfg);

}  // namespace polyodds::reference
