#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "selfdesc/descriptor.hpp"
#include "selfdesc/digits.hpp"

namespace selfdesc {

/// The unique partition of m into exactly m-1 positive parts: one 2 and
/// (m-2) ones.
struct PartitionShape {
    int total;               // m
    std::vector<int> parts;  // descending: {2, 1, 1, ...}
};

/// Throws NoPartition when m < 2 (m = 1 leaves no empty positions).
PartitionShape restricted_partition(int m);

enum class Method { oracle, solver };

std::string_view method_name(Method method) noexcept;

/// Complete set of self-descriptive numbers for one base, ascending by value.
struct EnumerationResult {
    Base base;
    Method method;
    std::vector<DigitString> numbers;
    std::optional<std::uint64_t> work_count;  // oracle: candidates examined
};

/// The five branches of the case analysis. Labels follow the j1 (count of
/// ones) and J (count of zeros) notation used in the trace output.
enum class CaseLabel {
    single_nonzero,        // m=1: the leading digit would be the only nonzero entry
    no_ones,               // j1=0
    single_one,            // j1=1
    two_ones_single_zero,  // j1=2, J=1
    two_ones_general,      // j1=2, J!=1
};

/// "m=1-impossible", "j1=0", "j1=1", "j1=2/J=1", "j1=2/J!=1".
std::string_view case_label_name(CaseLabel label) noexcept;

struct SolverBranch {
    CaseLabel label;
    bool open;                           // true: the branch yields a candidate
    std::string reason;                  // closing constraint; empty when open
    std::optional<DigitString> candidate;
};

/// Proof trace: exactly one entry per case label, in declaration order.
struct SolverTrace {
    Base base;
    std::vector<SolverBranch> branches;
};

/// Default bound on oracle candidates; C(2b-2, b-1) first exceeds it at b=17.
inline constexpr std::uint64_t kDefaultWorkCap = 200'000'000;

/// Visits every length-b digit string with a nonzero leading digit, digits
/// below b, and digit sum b, in ascending numeric order. Returns the number
/// of strings visited. This is exactly the oracle's candidate space.
std::uint64_t visit_candidates(Base base, const std::function<void(std::span<const int>)>& visit);

/// C(2b-2, b-1): the composition count the work cap is checked against.
/// Exact for any base, but quadratic in b; intended for desk-scale bases.
BigUint oracle_work_projection(Base base);

/// Exhaustive enumeration over the digit-sum candidate space, filtered by
/// is_self_descriptive. Throws WorkCapExceeded when the projected candidate
/// count C(2b-2, b-1) exceeds the cap (default kDefaultWorkCap).
EnumerationResult brute_force_enumerate(Base base, std::optional<std::uint64_t> work_cap = {});

/// Replays the restricted-partition case analysis for the base: every branch
/// either closes on a violated constraint or yields a candidate, which is
/// re-verified with is_self_descriptive before inclusion.
std::pair<EnumerationResult, SolverTrace> solver_enumerate(Base base);

/// The canonical family: digits (b-4, 2, 1, 0, ..., 0, 1, 0, 0, 0) with the
/// trailing 1 at position b-4. Throws BaseTooSmall for bases below 7.
DigitString construct_canonical(Base base);

/// Every self-descriptive number from bases 2..b, its digit sequence
/// reinterpreted in base b, ascending by value.
std::vector<DigitString> autobiographical(Base base);

struct CrossCheckRow {
    int base;
    std::size_t oracle_count;
    std::size_t solver_count;
    bool agree;
    std::uint64_t work_count;
};

struct CrossCheckReport {
    int from;
    int to;
    std::vector<CrossCheckRow> rows;
    bool all_agree;
};

/// Runs both enumerations for every base in [from, to] and compares the sets.
CrossCheckReport cross_check(int from, int to, std::optional<std::uint64_t> work_cap = {});

}  // namespace selfdesc
