#include "selfdesc/descriptor.hpp"

#include <algorithm>
#include <cstdint>

namespace selfdesc {

CountVector descriptor_counts(const DigitString& ds) {
    const auto length = static_cast<std::size_t>(ds.base().value());
    if (ds.size() != length) {
        throw WrongLength("digit string of length " + std::to_string(ds.size()) +
                          " cannot be described in base " + std::to_string(ds.base().value()));
    }
    CountVector cv{ds.base(), std::vector<int>(length, 0)};
    for (int d : ds.digits()) {
        ++cv.counts[static_cast<std::size_t>(d)];
    }
    return cv;
}

bool is_self_descriptive(Base base, std::span<const int> digits) {
    const auto length = static_cast<std::size_t>(base.value());
    if (digits.size() != length || digits.front() < 1) {
        return false;
    }
    std::vector<int> counts(length, 0);
    for (int d : digits) {
        if (d < 0 || static_cast<std::size_t>(d) >= length) {
            return false;
        }
        ++counts[static_cast<std::size_t>(d)];
    }
    return std::equal(counts.begin(), counts.end(), digits.begin());
}

bool is_self_descriptive(const DigitString& ds) {
    return is_self_descriptive(ds.base(), ds.digits());
}

bool satisfies_sum_lemma(const DigitString& ds) {
    if (ds.size() != static_cast<std::size_t>(ds.base().value())) {
        return false;
    }
    std::int64_t sum = 0;
    for (int d : ds.digits()) {
        sum += d;
    }
    return sum == ds.base().value();
}

}  // namespace selfdesc
