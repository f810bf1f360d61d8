#pragma once

#include <span>
#include <vector>

#include "selfdesc/digits.hpp"

namespace selfdesc {

/// Per-digit-value occurrence counts of a digit string: counts[i] is how many
/// times digit value i occurs. The counts sum to the string's length.
struct CountVector {
    Base base;
    std::vector<int> counts;
};

/// Counts each digit value's occurrences. Throws WrongLength unless the
/// string has candidate length (length == base), since the count vector is
/// indexed by every possible digit value.
CountVector descriptor_counts(const DigitString& ds);

/// True iff the string has candidate shape and equals its own count vector.
/// Wrong length or a leading zero yields false, never an error, so the
/// predicate composes as a filter.
bool is_self_descriptive(const DigitString& ds);

/// Allocation-light form for enumeration streams. Digits outside [0, base)
/// yield false.
bool is_self_descriptive(Base base, std::span<const int> digits);

/// Necessary condition: length equals the base and the digits sum to the
/// base. Not sufficient ("3100" in base 4 satisfies it without being
/// self-descriptive).
bool satisfies_sum_lemma(const DigitString& ds);

}  // namespace selfdesc
