#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcskit {

enum class ErrorKind {
    DivisionByZero,
    UnknownSymbol,
    ParseError,
    ChartMismatch,
    DegreeMismatch,
    DegenerateStructure,
    DimensionError,
    InvalidContact,
    NotACollar,
    InvalidLeeForm,
    InvalidPresentation,
    InvalidPoint,
    EmptyFiber,
    InvalidFiberPoint,
    SubstitutionError,
    UsageError,
};

/// Every failure the engine can signal. `kind()` is stable API; the message
/// is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Syntax error in an input text; carries the byte offset of the offending
/// token.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error(ErrorKind::ParseError,
                message + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::UnknownSymbol: return "UnknownSymbol";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ChartMismatch: return "ChartMismatch";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::DegenerateStructure: return "DegenerateStructure";
        case ErrorKind::DimensionError: return "DimensionError";
        case ErrorKind::InvalidContact: return "InvalidContact";
        case ErrorKind::NotACollar: return "NotACollar";
        case ErrorKind::InvalidLeeForm: return "InvalidLeeForm";
        case ErrorKind::InvalidPresentation: return "InvalidPresentation";
        case ErrorKind::InvalidPoint: return "InvalidPoint";
        case ErrorKind::EmptyFiber: return "EmptyFiber";
        case ErrorKind::InvalidFiberPoint: return "InvalidFiberPoint";
        case ErrorKind::SubstitutionError: return "SubstitutionError";
        case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

} // namespace lcskit
