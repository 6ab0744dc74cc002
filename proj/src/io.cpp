#include "magic/io.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include <json.hpp>

namespace magic {

namespace {

// Rejects unsigned JSON numbers that do not fit in int64 instead of
// letting them wrap.
std::int64_t get_int64(const nlohmann::json& value, const char* what) {
    if (!value.is_number_integer()) {
        throw ParseError(std::string(what) + " must be an integer");
    }
    if (value.is_number_unsigned() &&
        value.get<std::uint64_t>() >
            static_cast<std::uint64_t>(
                std::numeric_limits<std::int64_t>::max())) {
        throw ParseError(std::string(what) + " exceeds the 64-bit range");
    }
    return value.get<std::int64_t>();
}

std::int64_t parse_cell(std::string_view token, std::size_t line_no) {
    // Trim surrounding spaces/tabs; the digits themselves must parse fully.
    const auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    while (!token.empty() && is_space(token.front())) token.remove_prefix(1);
    while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} ||
        ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": invalid integer '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

std::string to_csv(const Square& square) {
    std::string out;
    const int n = square.n();
    out.reserve(static_cast<std::size_t>(n) * n * 4);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j > 0) out.push_back(',');
            out += std::to_string(square.at(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

std::string to_json(const Square& square) {
    nlohmann::ordered_json doc;
    doc["n"] = square.n();
    doc["a_min"] = square.a_min();
    doc["magic_constant"] = magic_constant(square.n(), square.a_min());
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < square.n(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < square.n(); ++j) row.push_back(square.at(i, j));
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_matrix(std::ostream& out, const Square& square,
                  MatrixFormat format) {
    out << (format == MatrixFormat::Csv ? to_csv(square) : to_json(square));
    if (!out.good()) {
        throw IoError("failed to write matrix document");
    }
}

Square parse_csv(std::string_view text, std::int64_t a_min) {
    std::vector<std::vector<std::int64_t>> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{}
                                             : text.substr(eol + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) {
            if (text.empty()) break;  // trailing newline
            throw ParseError("line " + std::to_string(line_no) +
                             ": empty row");
        }
        std::vector<std::int64_t> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            row.push_back(parse_cell(
                line.substr(start, comma == std::string_view::npos
                                       ? std::string_view::npos
                                       : comma - start),
                line_no));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty document");
    const std::size_t n = rows.size();
    std::vector<std::int64_t> cells;
    cells.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ParseError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) +
                             " columns, expected " + std::to_string(n));
        }
        cells.insert(cells.end(), rows[i].begin(), rows[i].end());
    }
    if (n > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
        throw ParseError("matrix too large");
    }
    try {
        return Square(static_cast<int>(n), a_min, std::move(cells));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Square parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("a_min") ||
        !doc.contains("magic_constant") || !doc.contains("rows")) {
        throw ParseError(
            "JSON document needs n, a_min, magic_constant and rows");
    }
    const auto& rows = doc["rows"];
    if (!rows.is_array()) {
        throw ParseError("rows must be an array");
    }
    const std::int64_t n64 = get_int64(doc["n"], "n");
    if (n64 < 3 || n64 > std::numeric_limits<int>::max()) {
        throw ParseError("invalid order " + std::to_string(n64));
    }
    const int n = static_cast<int>(n64);
    const std::int64_t a_min = get_int64(doc["a_min"], "a_min");
    if (rows.size() != static_cast<std::size_t>(n)) {
        throw ParseError("rows count does not match n");
    }
    std::vector<std::int64_t> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw ParseError("ragged rows in JSON document");
        }
        for (const auto& value : row) {
            cells.push_back(get_int64(value, "cell"));
        }
    }
    Square square = [&] {
        try {
            return Square(n, a_min, std::move(cells));
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }();
    const std::int64_t declared = get_int64(doc["magic_constant"], "magic_constant");
    if (declared != magic_constant(n, a_min)) {
        throw ParseError("magic_constant " + std::to_string(declared) +
                         " does not match n=" + std::to_string(n) +
                         ", a_min=" + std::to_string(a_min));
    }
    return square;
}

Square parse_matrix(std::string_view text, MatrixFormat format,
                    std::int64_t a_min) {
    return format == MatrixFormat::Csv ? parse_csv(text, a_min)
                                       : parse_json(text);
}

MatrixFormat detect_format(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{' ? MatrixFormat::Json : MatrixFormat::Csv;
    }
    return MatrixFormat::Csv;
}

}  // namespace magic
