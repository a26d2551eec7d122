#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "polyodds/errors.hpp"

namespace polyodds {

// The lambda of a Stick(lambda) problem: m weakly decreasing positive parts.
// Part i is the number of pieces stick i breaks into; the experiment is
// invariant under reordering, so the constructor sorts.
class Partition {
public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw InvalidParams("partition needs at least one part");
        for (int p : parts_)
            if (p < 1) throw InvalidParams("partition parts must be >= 1");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    std::span<const int> parts() const { return parts_; }
    std::size_t stick_count() const { return parts_.size(); }
    int max_part() const { return parts_.front(); }

    // k, the number of pieces produced.
    int piece_count() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

private:
    std::vector<int> parts_;
};

}  // namespace polyodds
