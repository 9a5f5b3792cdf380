#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "resload/errors.hpp"

namespace resload::csv {

/// Splits one CSV line on commas. None of the schemas in this project use
/// quoting, so a plain split is the whole grammar; a trailing CR is stripped
/// for tolerance of CRLF input.
inline void split_line(std::string_view line, std::vector<std::string_view>& out) {
    out.clear();
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

/// Header-indexed reader over an input stream. Rows are exposed as views into
/// an internal line buffer that is invalidated by the next read.
class Reader {
public:
    Reader(std::istream& in, std::string source_name)
        : in_(in), source_(std::move(source_name)) {
        if (!read_raw()) {
            throw IngestError(source_, 0, "", "empty input, expected a header row");
        }
        for (auto f : fields_) header_.emplace_back(trim(f));
        row_ = 1;
    }

    /// Index of a required column, or throws naming the missing column.
    std::size_t column(std::string_view name) const {
        for (std::size_t i = 0; i < header_.size(); ++i) {
            if (header_[i] == name) return i;
        }
        throw IngestError(source_, 1, name, "missing column");
    }

    bool has_column(std::string_view name) const {
        for (const auto& h : header_) {
            if (h == name) return true;
        }
        return false;
    }

    /// Advances to the next data row; skips blank lines. Returns false at EOF.
    bool next() {
        while (read_raw()) {
            ++row_;
            if (fields_.size() == 1 && trim(fields_[0]).empty()) continue;
            if (fields_.size() != header_.size()) {
                throw IngestError(source_, row_, "",
                                  "expected " + std::to_string(header_.size()) +
                                      " fields, found " + std::to_string(fields_.size()));
            }
            return true;
        }
        return false;
    }

    std::string_view field(std::size_t i) const { return trim(fields_[i]); }
    std::size_t row() const { return row_; }
    const std::string& source() const { return source_; }

    [[noreturn]] void fail(std::string_view field_name, std::string_view detail) const {
        throw IngestError(source_, row_, field_name, detail);
    }

    double number(std::size_t i, std::string_view field_name) const {
        auto f = field(i);
        double value{};
        auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
        if (ec != std::errc{} || ptr != f.data() + f.size()) {
            fail(field_name, "not a number: '" + std::string{f} + "'");
        }
        return value;
    }

    long long integer(std::size_t i, std::string_view field_name) const {
        auto f = field(i);
        long long value{};
        auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
        if (ec != std::errc{} || ptr != f.data() + f.size()) {
            fail(field_name, "not an integer: '" + std::string{f} + "'");
        }
        return value;
    }

private:
    bool read_raw() {
        if (!std::getline(in_, line_)) return false;
        split_line(line_, fields_);
        return true;
    }

    std::istream& in_;
    std::string source_;
    std::string line_;
    std::vector<std::string_view> fields_;
    std::vector<std::string> header_;
    std::size_t row_ = 0;
};

/// Appends a number in shortest round-trip form ("6000" rather than
/// "6000.000000"); integral doubles therefore print without a fraction.
inline void append_number(std::string& out, double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    out.append(buf, static_cast<std::size_t>(ptr - buf));
}

inline void append_number(std::string& out, std::int64_t value) {
    char buf[24];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    out.append(buf, static_cast<std::size_t>(ptr - buf));
}

inline double parse_number(std::string_view s, std::string_view source,
                           std::size_t row, std::string_view field) {
    double value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw IngestError(source, row, field, "not a number: '" + std::string{s} + "'");
    }
    return value;
}

}  // namespace resload::csv
