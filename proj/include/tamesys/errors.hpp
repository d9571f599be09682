#pragma once

#include <stdexcept>
#include <string>

namespace tamesys {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPrimeCharacteristic : Error { using Error::Error; };
struct ReduciblePolynomial : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NotFullRowRank : Error { using Error::Error; };
struct NotBalanced : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };
struct UnsupportedField : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };
struct DegreeTooHigh : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace tamesys
