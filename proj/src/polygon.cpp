#include "polyodds/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace polyodds {

DiagonalInterval diagonal_interval(double a, double b, const Inventory& rest) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw InvalidInventory("diagonal endpoints a, b must be positive finite lengths");
    if (rest.size() < 2)
        throw InvalidInventory("diagonal_interval needs at least 2 remaining lengths");

    double rest_total = 0.0;
    double rest_max = 0.0;
    for (double v : rest.as_reals()) {
        rest_total += v;
        rest_max = std::max(rest_max, v);
    }
    DiagonalInterval out;
    out.lo = std::max(std::abs(a - b), rest_max - (rest_total - rest_max));
    out.hi = std::min(a + b, rest_total);
    return out;
}

std::vector<double> PolygonRealization::side_lengths() const {
    const std::size_t k = vertices.size();
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % k];
        out[i] = std::hypot(q.x - p.x, q.y - p.y);
    }
    return out;
}

bool PolygonRealization::is_strictly_convex() const {
    const std::size_t k = vertices.size();
    if (k < 3) return false;
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % k];
        const Point& c = vertices[(i + 2) % k];
        const double cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
        if (!(cross > 0.0)) return false;
    }
    return true;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kResidualTolerance = 1e-12;
constexpr int kMaxBisectionSteps = 200;

// Central angle of the minor arc subtended by a chord of the given length at
// radius r.
double minor_arc(double chord, double r) {
    return 2.0 * std::asin(std::min(1.0, chord / (2.0 * r)));
}

}  // namespace

PolygonRealization construct_polygon(const Inventory& s) {
    if (auto bad = max_violator(s)) {
        throw NotPolygonal(*bad, "no polygon: length at index " + std::to_string(*bad) +
                                     " is at least half the total");
    }

    const std::vector<double> sides = s.as_reals();
    const std::size_t k = sides.size();
    const std::size_t longest =
        static_cast<std::size_t>(std::max_element(sides.begin(), sides.end()) - sides.begin());
    const double radius_min = sides[longest] / 2.0;

    auto all_minor_sum = [&](double r) {
        double sum = 0.0;
        for (double side : sides) sum += minor_arc(side, r);
        return sum;
    };

    double radius;
    bool longest_takes_major_arc;

    if (all_minor_sum(radius_min) >= kTwoPi) {
        // Circumcenter inside: every side subtends its minor arc and the
        // angle sum must hit exactly one turn. The sum decreases in r.
        longest_takes_major_arc = false;
        auto residual = [&](double r) { return all_minor_sum(r) - kTwoPi; };
        double lo = radius_min;
        double hi = radius_min;
        while (residual(hi) >= 0.0) hi *= 2.0;
        radius = lo;
        for (int it = 0; it < kMaxBisectionSteps; ++it) {
            radius = 0.5 * (lo + hi);
            const double res = residual(radius);
            if (std::abs(res) < kResidualTolerance) break;
            (res >= 0.0 ? lo : hi) = radius;
        }
    } else {
        // Circumcenter beyond the longest side: that side's arc runs the
        // long way around, so the minor arcs of the rest must add up to it.
        longest_takes_major_arc = true;
        auto residual = [&](double r) {
            double sum = 0.0;
            for (std::size_t i = 0; i < k; ++i)
                if (i != longest) sum += minor_arc(sides[i], r);
            return sum - minor_arc(sides[longest], r);
        };
        double lo = radius_min;
        double hi = radius_min;
        while (residual(hi) <= 0.0) hi *= 2.0;
        radius = hi;
        for (int it = 0; it < kMaxBisectionSteps; ++it) {
            radius = 0.5 * (lo + hi);
            const double res = residual(radius);
            if (std::abs(res) < kResidualTolerance) break;
            (res <= 0.0 ? lo : hi) = radius;
        }
    }

    PolygonRealization poly;
    poly.vertices.resize(k);
    double angle = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        poly.vertices[i] = Point{radius * std::cos(angle), radius * std::sin(angle)};
        double step = minor_arc(sides[i], radius);
        if (longest_takes_major_arc && i == longest) step = kTwoPi - step;
        angle += step;
    }
    return poly;
}

}  // namespace polyodds
