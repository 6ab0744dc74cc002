#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace magic {

// All failures surface as exceptions derived from Error so callers can
// catch the whole family at once.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

class OrderTooSmallError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class NotOddError : public Error {
public:
    using Error::Error;
};

class NotEvenError : public Error {
public:
    using Error::Error;
};

class NotDoublyEvenError : public Error {
public:
    using Error::Error;
};

class NotSinglyEvenError : public Error {
public:
    using Error::Error;
};

enum class OrderClass { Odd, SinglyEven, DoublyEven };

const char* to_string(OrderClass order_class);

// Partition of n >= 3: odd, even but not divisible by 4, divisible by 4.
OrderClass classify_order(int n);

// The common line sum n(n^2+1)/2 + n(a_min - 1). Requires n >= 3 and
// a_min >= 1; throws OverflowError if the value does not fit in 64 bits.
std::int64_t magic_constant(int n, std::int64_t a_min);

// Dense row-major n x n matrix of 64-bit integers with a declared minimum
// entry. Construction guards the ranges so that every line sum of n entries
// is representable in 64 bits; no magic property is implied.
class Square {
public:
    Square(int n, std::int64_t a_min, std::vector<std::int64_t> cells);

    int n() const { return n_; }
    std::int64_t a_min() const { return a_min_; }
    std::int64_t a_max() const {
        return a_min_ + static_cast<std::int64_t>(n_) * n_ - 1;
    }

    // 0-based indices; reports and file formats stay 1-based.
    std::int64_t at(int row, int col) const {
        return cells_[static_cast<std::size_t>(row) * n_ + col];
    }
    const std::vector<std::int64_t>& cells() const { return cells_; }

    friend bool operator==(const Square&, const Square&) = default;

private:
    int n_;
    std::int64_t a_min_;
    std::vector<std::int64_t> cells_;
};

// Shifts every entry of a square declared with a_min = 1 up by a_min - 1
// and updates the declared minimum. Preserves the magic property, with the
// constant becoming magic_constant(n, a_min).
Square apply_min_offset(const Square& square, std::int64_t a_min);

}  // namespace magic
