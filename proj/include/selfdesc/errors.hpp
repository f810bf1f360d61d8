#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace selfdesc {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Radix smaller than 2 (or an otherwise unusable base/range argument).
class InvalidBase : public Error {
public:
    using Error::Error;
};

/// Text does not match the compact or dotted digit-string grammar.
class MalformedText : public Error {
public:
    using Error::Error;
};

/// Compact digit symbols appearing inside a dotted digit string.
class MixedNotation : public Error {
public:
    using Error::Error;
};

/// A digit value at or above the base.
class DigitOutOfRange : public Error {
public:
    using Error::Error;
};

/// Digit string length does not equal the base where a candidate shape is required.
class WrongLength : public Error {
public:
    using Error::Error;
};

/// No restricted partition exists (m < 2 leaves no empty positions).
class NoPartition : public Error {
public:
    using Error::Error;
};

/// The canonical family only exists for bases >= 7.
class BaseTooSmall : public Error {
public:
    using Error::Error;
};

/// The oracle's projected candidate count exceeds the work cap.
class WorkCapExceeded : public Error {
public:
    WorkCapExceeded(std::string projected, std::uint64_t cap)
        : Error("projected candidate count " + projected + " exceeds the work cap " +
                std::to_string(cap) + "; raise the cap to run this base"),
          projected_(std::move(projected)),
          cap_(cap) {}

    /// Decimal candidate count, or a stated lower bound for very large bases.
    const std::string& projected() const noexcept { return projected_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::string projected_;
    std::uint64_t cap_;
};

}  // namespace selfdesc
