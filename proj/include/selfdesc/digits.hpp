#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "selfdesc/bignum.hpp"
#include "selfdesc/errors.hpp"

namespace selfdesc {

/// Radix of a positional numeral system. Always >= 2.
class Base {
public:
    explicit Base(int value) : value_(value) {
        if (value < 2) {
            throw InvalidBase("base must be at least 2, got " + std::to_string(value));
        }
    }

    int value() const noexcept { return value_; }

    friend auto operator<=>(const Base&, const Base&) = default;

private:
    int value_;
};

/// A digit sequence in a given base, most significant digit first.
///
/// Every digit lies in [0, base). Arbitrary lengths are allowed so the
/// parsing and formatting utilities stay general; enumeration and
/// verification only accept the candidate shape (length == base, nonzero
/// leading digit).
class DigitString {
public:
    /// Throws DigitOutOfRange when a digit falls outside [0, base),
    /// MalformedText when `digits` is empty.
    DigitString(Base base, std::vector<int> digits);

    Base base() const noexcept { return base_; }
    const std::vector<int>& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }

    /// Length equals the base and the leading digit is nonzero.
    bool candidate_shape() const noexcept;

    /// Same digit sequence read in a larger base.
    DigitString reinterpret(Base new_base) const { return DigitString(new_base, digits_); }

    friend bool operator==(const DigitString&, const DigitString&) = default;

private:
    Base base_;
    std::vector<int> digits_;
};

/// Parses the compact (`[0-9a-z]+`, bases <= 36) or dotted
/// (`token ("." token)*`, token `0 | [1-9][0-9]*`) grammar. Text containing
/// a '.' is dotted; otherwise it is compact when the base allows the compact
/// form and a single dotted token when it does not.
DigitString parse_digit_string(std::string_view text, Base base);

/// Round-trips with parse_digit_string. Compact form iff base <= 36.
std::string format_digit_string(const DigitString& ds);

/// Exact positional value: sum of digits[i] * base^(len-1-i).
BigUint value_of(const DigitString& ds);

/// Minimal-length representation of `value` (0 becomes the single digit 0).
DigitString digit_string_from_value(const BigUint& value, Base base);

/// Numeric order without materializing the values: after ignoring leading
/// zeros, fewer digits means smaller, equal lengths compare lexicographically.
/// Both strings must share a base.
bool value_less(const DigitString& a, const DigitString& b);

}  // namespace selfdesc
