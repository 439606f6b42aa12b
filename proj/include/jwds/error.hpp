#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jwds {

/// Raised when an input file cannot be read or parsed.
class LoadError : public std::runtime_error {
public:
    explicit LoadError(const std::string& what) : std::runtime_error(what) {}
    LoadError(const std::string& source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line number, 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

/// Raised when a documented precondition of a library call does not hold.
class ContractViolation : public std::invalid_argument {
public:
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

#define JWDS_EXPECTS(cond, msg)                                                       \
    do {                                                                              \
        if (!(cond)) throw ::jwds::ContractViolation(std::string(__func__) + ": " + (msg)); \
    } while (false)

}  // namespace jwds
