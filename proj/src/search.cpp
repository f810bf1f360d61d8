#include "selfdesc/search.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace selfdesc {

namespace {

// Exact projection is cheap up to desk-scale bases; past this the count is
// astronomically above any uint64 cap and is reported as a lower bound.
constexpr int kExactProjectionLimit = 20000;

std::string projection_text(Base base) {
    if (base.value() <= kExactProjectionLimit) {
        return oracle_work_projection(base).to_decimal();
    }
    return "at least 2^" + std::to_string(base.value() - 1);
}

struct BranchOutcome {
    bool open = false;
    std::string reason;
    std::optional<DigitString> candidate;
};

BranchOutcome closed(std::string reason) {
    return BranchOutcome{false, std::move(reason), std::nullopt};
}

// Branch conclusions are never trusted: a constructed string that fails the
// fixed-point check is an internal inconsistency, not a result to drop.
BranchOutcome open_with(Base base, std::vector<int> digits) {
    DigitString ds(base, std::move(digits));
    if (!is_self_descriptive(ds)) {
        throw std::logic_error("case analysis produced a non-fixed-point for base " +
                               std::to_string(base.value()) + ": " + format_digit_string(ds));
    }
    return BranchOutcome{true, {}, std::move(ds)};
}

std::string j_text(int b, int m) {
    return "J=b-" + std::to_string(m) + "=" + std::to_string(b - m);
}

// m=1: J=b-1 zeros plus the leading digit fill the string, leaving no empty
// positions for a partition of m.
BranchOutcome branch_single_nonzero(Base) {
    try {
        restricted_partition(1);
    } catch (const NoPartition&) {
        return closed("m=1 leaves no empty positions, and 1 admits no partition into 0 parts");
    }
    throw std::logic_error("restricted_partition(1) unexpectedly succeeded");
}

// j1=0: no ones anywhere, so the partition has no 1-parts: m=2, parts={2}.
BranchOutcome branch_no_ones(Base base) {
    const int b = base.value();
    const auto shape = restricted_partition(2);
    const int zeros = b - shape.total;  // J
    if (zeros < 1) {
        return closed(j_text(b, 2) + " but the count of zeros must be at least 1 "
                      "(j0=0 would itself be a zero)");
    }
    if (zeros == 1) {
        return closed("J=1 would put a 1 at p0, contradicting j1=0");
    }
    if (zeros != 2) {
        return closed("digit J must recur and the lone 2 is the only free nonzero entry, "
                      "forcing J=2, but " + j_text(b, 2));
    }
    // b=4: the 2-part sits at pJ=p2 and counts the two occurrences of digit 2.
    std::vector<int> digits(static_cast<std::size_t>(b), 0);
    digits[0] = zeros;
    digits[2] = shape.parts[0];
    return open_with(base, std::move(digits));
}

// j1=1: the lone 1 is the entry at p1 itself, hence a partition part: m=3,
// parts={2,1}.
BranchOutcome branch_single_one(Base base) {
    const int b = base.value();
    const auto shape = restricted_partition(3);
    const int zeros = b - shape.total;  // J
    if (zeros < 1) {
        return closed(j_text(b, 3) + " but the count of zeros must be at least 1 "
                      "(j0=0 would itself be a zero)");
    }
    if (zeros == 1) {
        return closed("J=1 would put a second 1 at p0, contradicting j1=1");
    }
    if (zeros != 2) {
        return closed("digit J must recur and the lone 2 is the only free nonzero entry, "
                      "forcing J=2, but " + j_text(b, 3));
    }
    // b=5: digit 2 occurs at p0 and as the 2-part, so the 2-part sits at p2.
    std::vector<int> digits(static_cast<std::size_t>(b), 0);
    digits[0] = zeros;
    digits[1] = 1;
    digits[2] = shape.parts[0];
    return open_with(base, std::move(digits));
}

// j1=2: p1 holds the partition's lone 2, and the nonzero entry demanded at p2
// can only be a 1.
BranchOutcome branch_two_ones_single_zero(Base base) {
    const int b = base.value();
    if (b < 3) {
        return closed("digit 2 is outside the alphabet of base " + std::to_string(b));
    }
    // Subcase J=1: the two 1s are p0 and p2, so m=3 and b=J+m=4.
    const auto shape = restricted_partition(3);
    if (b != shape.total + 1) {
        return closed("J=1 and m=3 force b=J+m=4, not " + std::to_string(b));
    }
    std::vector<int> digits(static_cast<std::size_t>(b), 0);
    digits[0] = 1;
    digits[1] = shape.parts[0];
    digits[2] = 1;
    return open_with(base, std::move(digits));
}

// j1=2 with J!=1: both 1s are partition parts, so m=4, parts={2,1,1}, J=b-4.
BranchOutcome branch_two_ones_general(Base base) {
    const int b = base.value();
    if (b < 3) {
        return closed("digit 2 is outside the alphabet of base " + std::to_string(b));
    }
    const auto shape = restricted_partition(4);
    const int zeros = b - shape.total;  // J
    if (zeros < 1) {
        return closed(j_text(b, 4) + " but the count of zeros must be at least 1 "
                      "(j0=0 would itself be a zero)");
    }
    if (zeros == 1) {
        return closed(j_text(b, 4) + " contradicts the subcase assumption J!=1");
    }
    if (zeros == 2) {
        return closed("J=2 would be a second 2, but the lone 2 already sits at p1");
    }
    // b>=7: J=b-4>=3, so pJ is distinct from p0..p2; digit J occurs once, at
    // p0, putting a 1-part at pJ.
    std::vector<int> digits(static_cast<std::size_t>(b), 0);
    digits[0] = zeros;
    digits[1] = shape.parts[0];
    digits[2] = 1;
    digits[static_cast<std::size_t>(zeros)] = 1;
    return open_with(base, std::move(digits));
}

SolverBranch run_branch(CaseLabel label, BranchOutcome (*branch)(Base), Base base) {
    auto outcome = branch(base);
    return SolverBranch{label, outcome.open, std::move(outcome.reason),
                        std::move(outcome.candidate)};
}

}  // namespace

PartitionShape restricted_partition(int m) {
    if (m < 2) {
        throw NoPartition("no partition of " + std::to_string(m) + " into " +
                          std::to_string(m - 1) + " positive parts");
    }
    PartitionShape shape{m, std::vector<int>(static_cast<std::size_t>(m - 1), 1)};
    shape.parts[0] = 2;
    return shape;
}

std::string_view method_name(Method method) noexcept {
    return method == Method::oracle ? "oracle" : "solver";
}

std::string_view case_label_name(CaseLabel label) noexcept {
    switch (label) {
        case CaseLabel::single_nonzero: return "m=1-impossible";
        case CaseLabel::no_ones: return "j1=0";
        case CaseLabel::single_one: return "j1=1";
        case CaseLabel::two_ones_single_zero: return "j1=2/J=1";
        case CaseLabel::two_ones_general: return "j1=2/J!=1";
    }
    return "unknown";
}

std::uint64_t visit_candidates(Base base,
                               const std::function<void(std::span<const int>)>& visit) {
    const int b = base.value();
    std::vector<int> digits(static_cast<std::size_t>(b), 0);
    std::uint64_t visited = 0;

    // Depth-first over positions; the bounds keep every leaf at digit sum b,
    // so leaves are exactly the candidate strings, in ascending order.
    auto descend = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == b) {
            ++visited;
            visit(std::span<const int>(digits));
            return;
        }
        const std::int64_t slack = static_cast<std::int64_t>(b - 1 - pos) * (b - 1);
        int lo = pos == 0 ? 1 : 0;
        if (remaining - slack > lo) {
            lo = static_cast<int>(remaining - slack);
        }
        const int hi = std::min(b - 1, remaining);
        for (int d = lo; d <= hi; ++d) {
            digits[static_cast<std::size_t>(pos)] = d;
            self(self, pos + 1, remaining - d);
        }
        digits[static_cast<std::size_t>(pos)] = 0;
    };
    descend(descend, 0, b);
    return visited;
}

BigUint oracle_work_projection(Base base) {
    // C(2b-2, b-1) by the multiplicative formula; every division is exact.
    const std::uint64_t k = static_cast<std::uint64_t>(base.value()) - 1;
    BigUint result(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        result.mul_small(static_cast<std::uint32_t>(k + i));
        result.divmod_small(static_cast<std::uint32_t>(i));
    }
    return result;
}

EnumerationResult brute_force_enumerate(Base base, std::optional<std::uint64_t> work_cap) {
    const std::uint64_t cap = work_cap.value_or(kDefaultWorkCap);
    if (base.value() > kExactProjectionLimit ||
        oracle_work_projection(base) > BigUint(cap)) {
        throw WorkCapExceeded(projection_text(base), cap);
    }

    EnumerationResult result{base, Method::oracle, {}, 0};
    const auto length = static_cast<std::size_t>(base.value());
    std::vector<int> counts(length, 0);
    result.work_count = visit_candidates(base, [&](std::span<const int> digits) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int d : digits) {
            ++counts[static_cast<std::size_t>(d)];
        }
        if (std::equal(counts.begin(), counts.end(), digits.begin())) {
            result.numbers.emplace_back(base, std::vector<int>(digits.begin(), digits.end()));
        }
    });

    // The visitor emits in ascending order; keep the check anyway.
    assert(std::is_sorted(result.numbers.begin(), result.numbers.end(), value_less));
    for (const auto& ds : result.numbers) {
        if (!is_self_descriptive(ds)) {
            throw std::logic_error("oracle emitted a non-fixed-point: " + format_digit_string(ds));
        }
    }
    return result;
}

std::pair<EnumerationResult, SolverTrace> solver_enumerate(Base base) {
    SolverTrace trace{base, {}};
    trace.branches.push_back(run_branch(CaseLabel::single_nonzero, branch_single_nonzero, base));
    trace.branches.push_back(run_branch(CaseLabel::no_ones, branch_no_ones, base));
    trace.branches.push_back(run_branch(CaseLabel::single_one, branch_single_one, base));
    trace.branches.push_back(
        run_branch(CaseLabel::two_ones_single_zero, branch_two_ones_single_zero, base));
    trace.branches.push_back(
        run_branch(CaseLabel::two_ones_general, branch_two_ones_general, base));

    EnumerationResult result{base, Method::solver, {}, std::nullopt};
    for (const auto& branch : trace.branches) {
        if (branch.candidate) {
            result.numbers.push_back(*branch.candidate);
        }
    }
    std::sort(result.numbers.begin(), result.numbers.end(), value_less);
    return {std::move(result), std::move(trace)};
}

DigitString construct_canonical(Base base) {
    const int b = base.value();
    if (b < 7) {
        throw BaseTooSmall("the canonical family requires base >= 7, got " + std::to_string(b));
    }
    std::vector<int> digits(static_cast<std::size_t>(b), 0);
    digits[0] = b - 4;
    digits[1] = 2;
    digits[2] = 1;
    digits[static_cast<std::size_t>(b - 4)] = 1;
    DigitString ds(base, std::move(digits));
    if (!is_self_descriptive(ds)) {
        throw std::logic_error("canonical construction failed the fixed-point check for base " +
                               std::to_string(b));
    }
    return ds;
}

std::vector<DigitString> autobiographical(Base base) {
    std::vector<DigitString> all;
    for (int smaller = 2; smaller <= base.value(); ++smaller) {
        auto [result, trace] = solver_enumerate(Base(smaller));
        for (const auto& ds : result.numbers) {
            all.push_back(ds.reinterpret(base));
        }
    }
    std::sort(all.begin(), all.end(), value_less);
    return all;
}

CrossCheckReport cross_check(int from, int to, std::optional<std::uint64_t> work_cap) {
    if (from < 2) {
        throw InvalidBase("cross-check range must start at base 2 or above, got " +
                          std::to_string(from));
    }
    if (to < from) {
        throw InvalidBase("cross-check range [" + std::to_string(from) + ", " +
                          std::to_string(to) + "] is empty");
    }
    CrossCheckReport report{from, to, {}, true};
    for (int b = from; b <= to; ++b) {
        const Base base(b);
        auto oracle = brute_force_enumerate(base, work_cap);
        auto [solver, trace] = solver_enumerate(base);
        const bool agree = oracle.numbers == solver.numbers;
        report.rows.push_back(CrossCheckRow{b, oracle.numbers.size(), solver.numbers.size(),
                                            agree, oracle.work_count.value_or(0)});
        report.all_agree = report.all_agree && agree;
    }
    return report;
}

}  // namespace selfdesc
