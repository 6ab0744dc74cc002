#include "magic/core.hpp"

#include <limits>

namespace magic {

namespace {

using int128 = __int128;

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

void require_order(int n) {
    if (n < 3) {
        throw OrderTooSmallError("order must be at least 3, got " +
                                 std::to_string(n));
    }
}

void require_a_min(std::int64_t a_min) {
    if (a_min < 1) {
        throw InvalidArgumentError("a_min must be at least 1, got " +
                                   std::to_string(a_min));
    }
}

}  // namespace

const char* to_string(OrderClass order_class) {
    switch (order_class) {
        case OrderClass::Odd: return "odd";
        case OrderClass::SinglyEven: return "singly_even";
        case OrderClass::DoublyEven: return "doubly_even";
    }
    return "unknown";
}

OrderClass classify_order(int n) {
    require_order(n);
    if (n % 2 == 1) return OrderClass::Odd;
    return n % 4 == 0 ? OrderClass::DoublyEven : OrderClass::SinglyEven;
}

std::int64_t magic_constant(int n, std::int64_t a_min) {
    require_order(n);
    require_a_min(a_min);
    const int128 order = n;
    const int128 value =
        order * (order * order + 1) / 2 + order * (int128{a_min} - 1);
    if (value > kInt64Max) {
        throw OverflowError("magic constant exceeds the 64-bit range for n=" +
                            std::to_string(n) + ", a_min=" +
                            std::to_string(a_min));
    }
    return static_cast<std::int64_t>(value);
}

Square::Square(int n, std::int64_t a_min, std::vector<std::int64_t> cells)
    : n_(n), a_min_(a_min), cells_(std::move(cells)) {
    require_order(n);
    require_a_min(a_min);
    if (cells_.size() != static_cast<std::size_t>(n) * n) {
        throw InvalidArgumentError(
            "cell count " + std::to_string(cells_.size()) +
            " does not match order " + std::to_string(n));
    }
    // Any sum of n entries must stay within 64 bits.
    const std::int64_t bound = kInt64Max / n;
    for (std::int64_t value : cells_) {
        if (value > bound || value < -bound) {
            throw OverflowError("entry " + std::to_string(value) +
                                " too large for 64-bit line sums at order " +
                                std::to_string(n));
        }
    }
    magic_constant(n, a_min);  // throws on overflow
    if (int128{a_min} + int128{n} * n - 1 > kInt64Max) {
        throw OverflowError("a_max exceeds the 64-bit range");
    }
}

Square apply_min_offset(const Square& square, std::int64_t a_min) {
    if (square.a_min() != 1) {
        throw InvalidArgumentError(
            "apply_min_offset expects a square declared with a_min = 1");
    }
    require_a_min(a_min);
    const std::int64_t offset = a_min - 1;
    std::vector<std::int64_t> cells = square.cells();
    if (offset != 0) {
        for (std::int64_t& value : cells) {
            const int128 shifted = int128{value} + offset;
            if (shifted > kInt64Max) {
                throw OverflowError("entry overflows 64 bits after offset to "
                                    "a_min=" + std::to_string(a_min));
            }
            value = static_cast<std::int64_t>(shifted);
        }
    }
    return Square(square.n(), a_min, std::move(cells));
}

}  // namespace magic
