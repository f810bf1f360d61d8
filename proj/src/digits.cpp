#include "selfdesc/digits.hpp"

#include <algorithm>
#include <cstdint>
#include <span>

namespace selfdesc {

namespace {

int compact_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    return -1;
}

char compact_symbol(int value) {
    return value < 10 ? static_cast<char>('0' + value) : static_cast<char>('a' + value - 10);
}

DigitString parse_compact(std::string_view text, Base base) {
    std::vector<int> digits;
    digits.reserve(text.size());
    for (char c : text) {
        const int value = compact_value(c);
        if (value < 0) {
            throw MalformedText("'" + std::string(1, c) + "' is not a compact digit symbol");
        }
        if (value >= base.value()) {
            throw DigitOutOfRange("digit '" + std::string(1, c) + "' has value " +
                                  std::to_string(value) + ", out of range for base " +
                                  std::to_string(base.value()));
        }
        digits.push_back(value);
    }
    return DigitString(base, std::move(digits));
}

int parse_dotted_token(std::string_view token, Base base, bool saw_dot) {
    if (token.empty()) {
        throw MalformedText("empty token in dotted digit string");
    }
    for (char c : token) {
        if (c >= '0' && c <= '9') continue;
        if (c >= 'a' && c <= 'z') {
            if (saw_dot) {
                throw MixedNotation("compact digit symbol '" + std::string(1, c) +
                                    "' inside a dotted digit string");
            }
            throw MalformedText("the compact form is only valid for bases up to 36");
        }
        throw MalformedText("'" + std::string(1, c) + "' is not a decimal digit");
    }
    if (token.size() > 1 && token.front() == '0') {
        throw MalformedText("leading zero in token '" + std::string(token) + "'");
    }
    // Any token of more than 10 decimal digits already exceeds every int base.
    if (token.size() > 10) {
        throw DigitOutOfRange("token '" + std::string(token) + "' is out of range for base " +
                              std::to_string(base.value()));
    }
    std::int64_t value = 0;
    for (char c : token) {
        value = value * 10 + (c - '0');
    }
    if (value >= base.value()) {
        throw DigitOutOfRange("digit " + std::string(token) + " is out of range for base " +
                              std::to_string(base.value()));
    }
    return static_cast<int>(value);
}

DigitString parse_dotted(std::string_view text, Base base, bool saw_dot) {
    std::vector<int> digits;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = text.find('.', start);
        const std::string_view token =
            dot == std::string_view::npos ? text.substr(start) : text.substr(start, dot - start);
        digits.push_back(parse_dotted_token(token, base, saw_dot));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return DigitString(base, std::move(digits));
}

}  // namespace

DigitString::DigitString(Base base, std::vector<int> digits)
    : base_(base), digits_(std::move(digits)) {
    if (digits_.empty()) {
        throw MalformedText("digit string must contain at least one digit");
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] < 0 || digits_[i] >= base_.value()) {
            throw DigitOutOfRange("digit " + std::to_string(digits_[i]) + " at position " +
                                  std::to_string(i) + " is out of range for base " +
                                  std::to_string(base_.value()));
        }
    }
}

bool DigitString::candidate_shape() const noexcept {
    return digits_.size() == static_cast<std::size_t>(base_.value()) && digits_.front() >= 1;
}

DigitString parse_digit_string(std::string_view text, Base base) {
    if (text.empty()) {
        throw MalformedText("empty digit string");
    }
    const bool saw_dot = text.find('.') != std::string_view::npos;
    if (!saw_dot && base.value() <= 36) {
        return parse_compact(text, base);
    }
    // Dotted text, or a dot-free single token where the compact form is
    // unavailable (base > 36).
    return parse_dotted(text, base, saw_dot);
}

std::string format_digit_string(const DigitString& ds) {
    std::string out;
    if (ds.base().value() <= 36) {
        out.reserve(ds.size());
        for (int d : ds.digits()) {
            out += compact_symbol(d);
        }
        return out;
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i != 0) out += '.';
        out += std::to_string(ds.digits()[i]);
    }
    return out;
}

BigUint value_of(const DigitString& ds) {
    BigUint value;
    const auto radix = static_cast<std::uint32_t>(ds.base().value());
    for (int d : ds.digits()) {
        value.mul_small(radix);
        value.add_small(static_cast<std::uint32_t>(d));
    }
    return value;
}

DigitString digit_string_from_value(const BigUint& value, Base base) {
    BigUint rest = value;
    std::vector<int> digits;
    const auto radix = static_cast<std::uint32_t>(base.value());
    while (!rest.is_zero()) {
        digits.push_back(static_cast<int>(rest.divmod_small(radix)));
    }
    if (digits.empty()) {
        digits.push_back(0);
    }
    std::reverse(digits.begin(), digits.end());
    return DigitString(base, std::move(digits));
}

bool value_less(const DigitString& a, const DigitString& b) {
    auto strip = [](const std::vector<int>& digits) {
        std::size_t i = 0;
        while (i + 1 < digits.size() && digits[i] == 0) ++i;
        return std::span<const int>(digits.data() + i, digits.size() - i);
    };
    const auto lhs = strip(a.digits());
    const auto rhs = strip(b.digits());
    if (lhs.size() != rhs.size()) {
        return lhs.size() < rhs.size();
    }
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

}  // namespace selfdesc
