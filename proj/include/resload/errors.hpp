#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace resload {

/// Input data violating a documented file schema. The message always names
/// the source (file or stream label) and, when known, the row and field, so
/// callers can surface it verbatim.
class IngestError : public std::runtime_error {
public:
    IngestError(std::string_view source, std::size_t row, std::string_view field,
                std::string_view detail)
        : std::runtime_error(format(source, row, field, detail)), row_(row) {}

    std::size_t row() const { return row_; }

private:
    static std::string format(std::string_view source, std::size_t row,
                              std::string_view field, std::string_view detail) {
        std::string msg{source};
        if (row > 0) {
            msg += ", row " + std::to_string(row);
        }
        if (!field.empty()) {
            msg += ", field '";
            msg += field;
            msg += "'";
        }
        msg += ": ";
        msg += detail;
        return msg;
    }

    std::size_t row_;
};

/// Invalid or inconsistent scenario configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::string_view detail)
        : std::runtime_error(std::string{detail}) {}
};

/// A precondition violated at simulation time (coverage gaps, bad step sizes).
class SimulationError : public std::runtime_error {
public:
    explicit SimulationError(std::string_view detail)
        : std::runtime_error(std::string{detail}) {}
};

}  // namespace resload
