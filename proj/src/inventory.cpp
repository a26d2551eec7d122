#include "polyodds/inventory.hpp"

#include <cmath>

namespace polyodds {

Inventory Inventory::bricks(std::vector<std::int64_t> lengths) {
    for (std::int64_t v : lengths)
        if (v <= 0) throw InvalidInventory("brick lengths must be positive integers");
    return Inventory(LengthMode::BrickExact, std::move(lengths), {});
}

Inventory Inventory::sticks(std::vector<double> lengths) {
    for (double v : lengths)
        if (!(v > 0.0) || !std::isfinite(v))
            throw InvalidInventory("stick lengths must be finite positive reals");
    return Inventory(LengthMode::StickReal, {}, std::move(lengths));
}

std::vector<double> Inventory::as_reals() const {
    if (!is_brick()) return reals_;
    std::vector<double> out(ints_.size());
    for (std::size_t i = 0; i < ints_.size(); ++i) out[i] = static_cast<double>(ints_[i]);
    return out;
}

double Inventory::total_as_real() const {
    double total = 0.0;
    if (is_brick())
        for (std::int64_t v : ints_) total += static_cast<double>(v);
    else
        for (double v : reals_) total += v;
    return total;
}

namespace {

void require_polygon_arity(const Inventory& s) {
    if (s.size() < 3)
        throw InvalidInventory("polygon operations need at least 3 lengths, got " +
                               std::to_string(s.size()));
}

}  // namespace

bool is_polygonal(const Inventory& s) {
    require_polygon_arity(s);
    return s.is_brick() ? forms_polygon(s.brick_lengths()) : forms_polygon(s.stick_lengths());
}

std::optional<std::size_t> max_violator(const Inventory& s) {
    require_polygon_arity(s);
    return s.is_brick() ? violator_index(s.brick_lengths()) : violator_index(s.stick_lengths());
}

}  // namespace polyodds
