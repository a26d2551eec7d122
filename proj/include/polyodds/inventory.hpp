#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polyodds/errors.hpp"

namespace polyodds {

enum class LengthMode { BrickExact, StickReal };

// Ordered list of piece lengths. Brick inventories hold exact integers and
// are compared with integer arithmetic; stick inventories hold finite
// positive reals.
class Inventory {
public:
    static Inventory bricks(std::vector<std::int64_t> lengths);
    static Inventory sticks(std::vector<double> lengths);

    LengthMode mode() const { return mode_; }
    bool is_brick() const { return mode_ == LengthMode::BrickExact; }
    std::size_t size() const { return is_brick() ? ints_.size() : reals_.size(); }

    std::span<const std::int64_t> brick_lengths() const { return ints_; }
    std::span<const double> stick_lengths() const { return reals_; }

    // Lengths widened to double regardless of mode.
    std::vector<double> as_reals() const;

    double total_as_real() const;

private:
    Inventory(LengthMode mode, std::vector<std::int64_t> ints, std::vector<double> reals)
        : mode_(mode), ints_(std::move(ints)), reals_(std::move(reals)) {}

    LengthMode mode_;
    std::vector<std::int64_t> ints_;
    std::vector<double> reals_;
};

// A length x breaks the k-gon inequality exactly when x >= total - x,
// i.e. when x is at least half the perimeter. At most one entry can do so,
// and it must be a maximal one, so a single pass over the list suffices.
// No validation; this is the inner-loop kernel.
template <typename T>
std::optional<std::size_t> violator_index(std::span<const T> lengths) {
    if (lengths.empty()) return std::nullopt;
    std::size_t arg = 0;
    T total = lengths[0];
    for (std::size_t i = 1; i < lengths.size(); ++i) {
        total += lengths[i];
        if (lengths[i] > lengths[arg]) arg = i;
    }
    if (lengths[arg] >= total - lengths[arg]) return arg;
    return std::nullopt;
}

template <typename T>
bool forms_polygon(std::span<const T> lengths) {
    return !violator_index(lengths).has_value();
}

// Strict k-gon test. Degenerate equality (a length exactly half the total)
// counts as failure. Requires at least 3 entries.
bool is_polygonal(const Inventory& s);

// 0-based index of the unique entry at or above half the total, if any.
// Exactly one of is_polygonal / max_violator reports for any valid input.
std::optional<std::size_t> max_violator(const Inventory& s);

}  // namespace polyodds
