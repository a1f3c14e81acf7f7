#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ditcalc {

/// Base of every error thrown by the library. Carries a stable kind name
/// ("OverlapError", "CoverError", ...) used by the CLI and JSON output.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define DITCALC_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& message) : Error(#Name, message) {}   \
    }

// partition-core
DITCALC_DEFINE_ERROR(OverlapError);
DITCALC_DEFINE_ERROR(CoverError);
DITCALC_DEFINE_ERROR(EmptyBlockError);
DITCALC_DEFINE_ERROR(UniverseMismatch);
DITCALC_DEFINE_ERROR(TooLargeError);
DITCALC_DEFINE_ERROR(InvalidUniverse);

// closure-space
DITCALC_DEFINE_ERROR(NotOpenError);
DITCALC_DEFINE_ERROR(SizeMismatch);

// entropy / distributions
DITCALC_DEFINE_ERROR(BadBase);
DITCALC_DEFINE_ERROR(DomainError);
DITCALC_DEFINE_ERROR(AllZeroError);
DITCALC_DEFINE_ERROR(NegativeError);
DITCALC_DEFINE_ERROR(NotNormalizedError);
DITCALC_DEFINE_ERROR(LengthMismatch);
DITCALC_DEFINE_ERROR(SupportError);
DITCALC_DEFINE_ERROR(BadWeight);
DITCALC_DEFINE_ERROR(BadParam);
DITCALC_DEFINE_ERROR(DimensionMismatch);
DITCALC_DEFINE_ERROR(InvalidDistanceMatrix);

// demos
DITCALC_DEFINE_ERROR(RangeError);

#undef DITCALC_DEFINE_ERROR

/// Input-format error. `line` is 1-based; 0 when no line applies.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("ParseError", line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace ditcalc
