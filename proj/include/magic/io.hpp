#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "magic/core.hpp"

namespace magic {

class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

enum class MatrixFormat { Csv, Json };

// CSV: n lines of n comma-separated integers, LF endings, no header.
std::string to_csv(const Square& square);

// JSON: {"n", "a_min", "magic_constant", "rows"}; the constant equals
// magic_constant(n, a_min) on write and is cross-checked on read.
std::string to_json(const Square& square);

void write_matrix(std::ostream& out, const Square& square, MatrixFormat format);

// CSV carries no a_min; the caller declares it (default 1).
Square parse_csv(std::string_view text, std::int64_t a_min = 1);

Square parse_json(std::string_view text);

Square parse_matrix(std::string_view text, MatrixFormat format,
                    std::int64_t a_min = 1);

// Json when the first non-space byte is '{', Csv otherwise.
MatrixFormat detect_format(std::string_view text);

}  // namespace magic
