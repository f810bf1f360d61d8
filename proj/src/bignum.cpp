#include "selfdesc/bignum.hpp"

#include <algorithm>
#include <cctype>

#include "selfdesc/errors.hpp"

namespace selfdesc {

BigUint::BigUint(std::uint64_t value) {
    do {
        limbs_.push_back(static_cast<std::uint32_t>(value % kLimbBase));
        value /= kLimbBase;
    } while (value != 0);
}

void BigUint::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) {
        limbs_.pop_back();
    }
}

BigUint BigUint::from_decimal(std::string_view text) {
    if (text.empty()) {
        throw MalformedText("empty decimal text");
    }
    if (text.size() > 1 && text.front() == '0') {
        throw MalformedText("leading zero in decimal text '" + std::string(text) + "'");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw MalformedText("'" + std::string(1, c) + "' is not a decimal digit");
        }
    }
    BigUint result;
    result.limbs_.clear();
    // Consume 9-digit chunks from the right; each is one limb.
    std::size_t end = text.size();
    while (end > 0) {
        const std::size_t begin = end >= kLimbDigits ? end - kLimbDigits : 0;
        std::uint32_t limb = 0;
        for (std::size_t i = begin; i < end; ++i) {
            limb = limb * 10 + static_cast<std::uint32_t>(text[i] - '0');
        }
        result.limbs_.push_back(limb);
        end = begin;
    }
    result.trim();
    return result;
}

std::string BigUint::to_decimal() const {
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string chunk = std::to_string(limbs_[i]);
        out.append(kLimbDigits - chunk.size(), '0');
        out += chunk;
    }
    return out;
}

BigUint& BigUint::mul_small(std::uint32_t factor) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        const std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur % kLimbBase);
        carry = cur / kLimbBase;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
        carry /= kLimbBase;
    }
    trim();
    return *this;
}

BigUint& BigUint::add_small(std::uint32_t addend) {
    std::uint64_t carry = addend;
    for (std::size_t i = 0; i < limbs_.size() && carry != 0; ++i) {
        const std::uint64_t cur = limbs_[i] + carry;
        limbs_[i] = static_cast<std::uint32_t>(cur % kLimbBase);
        carry = cur / kLimbBase;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
        carry /= kLimbBase;
    }
    return *this;
}

std::uint32_t BigUint::divmod_small(std::uint32_t divisor) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const std::uint64_t cur = rem * kLimbBase + limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigUint operator+(const BigUint& a, const BigUint& b) {
    BigUint result;
    result.limbs_.assign(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < result.limbs_.size(); ++i) {
        std::uint64_t cur = carry;
        if (i < a.limbs_.size()) cur += a.limbs_[i];
        if (i < b.limbs_.size()) cur += b.limbs_[i];
        result.limbs_[i] = static_cast<std::uint32_t>(cur % BigUint::kLimbBase);
        carry = cur / BigUint::kLimbBase;
    }
    result.trim();
    return result;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    BigUint result;
    if (a.is_zero() || b.is_zero()) {
        return result;
    }
    result.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            const std::uint64_t cur = result.limbs_[i + j] +
                                      static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            result.limbs_[i + j] = static_cast<std::uint32_t>(cur % BigUint::kLimbBase);
            carry = cur / BigUint::kLimbBase;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry != 0) {
            const std::uint64_t cur = result.limbs_[k] + carry;
            result.limbs_[k] = static_cast<std::uint32_t>(cur % BigUint::kLimbBase);
            carry = cur / BigUint::kLimbBase;
            ++k;
        }
    }
    result.trim();
    return result;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) noexcept {
    if (a.limbs_.size() != b.limbs_.size()) {
        return a.limbs_.size() <=> b.limbs_.size();
    }
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) {
            return a.limbs_[i] <=> b.limbs_[i];
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace selfdesc
