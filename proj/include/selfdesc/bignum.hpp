#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace selfdesc {

/// Arbitrary-precision unsigned integer.
///
/// Limbs are base 10^9, least significant first, so decimal conversion is a
/// straight chunking. Only the handful of operations the digit-string math
/// needs are provided.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t value);

    /// Parses `0 | [1-9][0-9]*`; throws MalformedText otherwise.
    static BigUint from_decimal(std::string_view text);

    std::string to_decimal() const;

    bool is_zero() const noexcept { return limbs_.size() == 1 && limbs_[0] == 0; }

    BigUint& mul_small(std::uint32_t factor);
    BigUint& add_small(std::uint32_t addend);

    /// In-place quotient; returns the remainder. Divisor must be nonzero.
    std::uint32_t divmod_small(std::uint32_t divisor);

    friend BigUint operator+(const BigUint& a, const BigUint& b);
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    friend bool operator==(const BigUint& a, const BigUint& b) noexcept = default;
    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) noexcept;

private:
    static constexpr std::uint32_t kLimbBase = 1'000'000'000;
    static constexpr int kLimbDigits = 9;

    void trim();

    std::vector<std::uint32_t> limbs_;
};

}  // namespace selfdesc
