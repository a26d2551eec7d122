#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyodds {

// Base class for every domain error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A piece list that cannot be used: too few entries, or a non-positive /
// non-finite length.
struct InvalidInventory : Error {
    using Error::Error;
};

// Parameters outside an operation's domain (e.g. n < k for a broken brick).
struct InvalidParams : Error {
    using Error::Error;
};

// Raised by construct_polygon when the inventory fails the k-gon inequality.
// Carries the 0-based position of the offending length.
struct NotPolygonal : Error {
    std::size_t violator_index;

    NotPolygonal(std::size_t index, const std::string& what)
        : Error(what), violator_index(index) {}
};

// An exhaustive enumeration would visit more outcomes than allowed.
struct BudgetExceeded : Error {
    std::string required;  // decimal outcome count the enumeration needs
    std::uint64_t budget;

    BudgetExceeded(std::string required_count, std::uint64_t allowed)
        : Error("enumeration budget exceeded: " + required_count +
                " outcomes required, budget is " + std::to_string(allowed)),
          required(std::move(required_count)),
          budget(allowed) {}
};

}  // namespace polyodds
