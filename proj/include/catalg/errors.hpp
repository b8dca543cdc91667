#pragma once

#include <stdexcept>
#include <string>

namespace catalg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegreeBoundExceeded : Error {
    explicit DegreeBoundExceeded(const std::string& msg) : Error(msg) {}
};

struct UnsupportedRing : Error {
    explicit UnsupportedRing(const std::string& msg) : Error(msg) {}
};

struct NotIntegral : Error {
    explicit NotIntegral(const std::string& msg) : Error(msg) {}
};

// Carries the offending denominator in printable form.
struct NotInvertibleDenominator : Error {
    std::string denominator;
    NotInvertibleDenominator(const std::string& msg, std::string denom)
        : Error(msg), denominator(std::move(denom)) {}
};

struct NotMono : Error {
    explicit NotMono(const std::string& msg) : Error(msg) {}
};

struct NotEpi : Error {
    explicit NotEpi(const std::string& msg) : Error(msg) {}
};

struct NotDominant : Error {
    std::string offendingOpen;
    NotDominant(const std::string& msg, std::string open)
        : Error(msg), offendingOpen(std::move(open)) {}
};

struct NonFiniteType : Error {
    explicit NonFiniteType(const std::string& msg) : Error(msg) {}
};

struct AllChartsTrivial : Error {
    explicit AllChartsTrivial(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg), line(line_), col(col_) {}
};

struct UnresolvedReference : Error {
    explicit UnresolvedReference(const std::string& msg) : Error(msg) {}
};

struct VersionMismatch : Error {
    explicit VersionMismatch(const std::string& msg) : Error(msg) {}
};

} // namespace catalg
