#pragma once

#include <vector>

#include "polyodds/inventory.hpp"

namespace polyodds {

// Open interval of diagonal lengths d such that {a, b, d} is a triangle and
// rest together with d is polygonal. Empty when lo >= hi.
struct DiagonalInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool nonempty() const { return lo < hi; }
};

// lo = max(|a-b|, max(rest) - (total(rest) - max(rest)))
// hi = min(a+b, total(rest))
DiagonalInterval diagonal_interval(double a, double b, const Inventory& rest);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Convex realization of an inventory: vertices in counter-clockwise order on
// a common circle, side i running from vertex i to vertex i+1 (cyclically;
// the closing side is implicit).
struct PolygonRealization {
    std::vector<Point> vertices;

    std::vector<double> side_lengths() const;

    // All cross products of consecutive edges strictly positive.
    bool is_strictly_convex() const;
};

// Realizes a polygonal inventory as the cyclic polygon: all vertices on one
// circle whose radius is found by monotone bisection on the central-angle
// sum. When the longest side would subtend more than half the circle, its
// arc is taken the long way around (the circumcenter lies outside). The
// bisection stops once the angle-sum residual drops below 1e-12 or after
// 200 iterations; vertex angles are cumulative, so the polygon closes by
// construction. Deterministic.
//
// Throws NotPolygonal (with the violating index) when the inventory fails
// the k-gon inequality.
PolygonRealization construct_polygon(const Inventory& s);

}  // namespace polyodds
