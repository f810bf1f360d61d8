// Acceptance suite: every release-gating property of the toolkit, one
// pass/fail line each. Checks are exact; stated time budgets are enforced.

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "selfdesc/cli.hpp"
#include "selfdesc/descriptor.hpp"
#include "selfdesc/digits.hpp"
#include "selfdesc/search.hpp"

using namespace selfdesc;

namespace {

struct Check {
    std::vector<std::string> failures;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            failures.push_back(what);
        }
    }
};

struct Criterion {
    int id;
    std::string summary;
    double budget_seconds;  // 0: no stated budget
    std::function<void(Check&)> body;
};

std::vector<std::string> texts(const std::vector<DigitString>& numbers) {
    std::vector<std::string> out;
    for (const auto& ds : numbers) {
        out.push_back(format_digit_string(ds));
    }
    return out;
}

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return CliResult{code, out.str()};
}

// Square-and-multiply exponentiation: structurally unlike the positional
// (Horner) accumulation inside value_of, so the two value routes are
// independent.
BigUint pow_by_squaring(std::uint32_t base, int exponent) {
    BigUint result(1);
    BigUint power(base);
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * power;
        }
        power = power * power;
        exponent >>= 1;
    }
    return result;
}

// All partitions of `remaining` into exactly `parts_left` positive
// nonincreasing parts.
void generate_partitions(int remaining, int parts_left, int max_part, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
    if (parts_left == 0) {
        if (remaining == 0) {
            out.push_back(current);
        }
        return;
    }
    const int hi = std::min(max_part, remaining - (parts_left - 1));
    for (int p = hi; p >= 1; --p) {
        current.push_back(p);
        generate_partitions(remaining - p, parts_left - 1, p, current, out);
        current.pop_back();
    }
}

void criterion_nonexistence(Check& check) {
    for (const std::string base : {"2", "3", "6"}) {
        const auto result =
            run_cli({"enumerate", "--base", base, "--method", "both", "--format", "json"});
        check.expect(result.code == 0, "exit code " + std::to_string(result.code) +
                                           " for enumerate --base " + base);
        const auto json = nlohmann::json::parse(result.out);
        check.expect(json["numbers"].empty(), "nonempty set reported for base " + base);
        check.expect(json["agree"] == true, "oracle/solver disagreement for base " + base);
    }
}

void criterion_base4(Check& check) {
    const auto oracle = brute_force_enumerate(Base(4));
    const auto [solver, trace] = solver_enumerate(Base(4));
    const std::vector<std::string> expected{"1210", "2020"};
    check.expect(texts(oracle.numbers) == expected, "oracle set differs for base 4");
    check.expect(texts(solver.numbers) == expected, "solver set differs for base 4");
}

void criterion_base5(Check& check) {
    const auto oracle = brute_force_enumerate(Base(5));
    const auto [solver, trace] = solver_enumerate(Base(5));
    const std::vector<std::string> expected{"21200"};
    check.expect(texts(oracle.numbers) == expected, "oracle set differs for base 5");
    check.expect(texts(solver.numbers) == expected, "solver set differs for base 5");
}

void criterion_uniqueness(Check& check) {
    for (int b = 7; b <= 14; ++b) {
        const auto canonical = format_digit_string(construct_canonical(Base(b)));
        const auto oracle = brute_force_enumerate(Base(b));
        const auto [solver, trace] = solver_enumerate(Base(b));
        check.expect(texts(oracle.numbers) == std::vector<std::string>{canonical},
                     "oracle set is not {" + canonical + "} for base " + std::to_string(b));
        check.expect(texts(solver.numbers) == std::vector<std::string>{canonical},
                     "solver set is not {" + canonical + "} for base " + std::to_string(b));
    }
}

void criterion_canonical_instance(Check& check) {
    const auto result = run_cli({"verify", "6210001000", "--base", "10"});
    check.expect(result.code == 0, "verify 6210001000 --base 10 exited with " +
                                       std::to_string(result.code));
    check.expect(result.out.find("verdict: self-descriptive") != std::string::npos,
                 "verify output lacks the verdict line");
    check.expect(format_digit_string(construct_canonical(Base(10))) == "6210001000",
                 "construct_canonical(10) is not 6210001000");
}

void criterion_value_identity(Check& check) {
    for (int b = 7; b <= 36; ++b) {
        const auto radix = static_cast<std::uint32_t>(b);
        BigUint expected = BigUint(static_cast<std::uint64_t>(b - 4)) * pow_by_squaring(radix, b - 1);
        expected = expected + BigUint(2) * pow_by_squaring(radix, b - 2);
        expected = expected + pow_by_squaring(radix, b - 3);
        expected = expected + pow_by_squaring(radix, 3);
        const BigUint actual = value_of(construct_canonical(Base(b)));
        check.expect(actual == expected,
                     "value mismatch for base " + std::to_string(b) + ": " + actual.to_decimal() +
                         " vs " + expected.to_decimal());
    }
}

void criterion_lemma_property(Check& check) {
    for (int b = 2; b <= 10; ++b) {
        const Base base(b);
        std::uint64_t descriptive = 0;
        visit_candidates(base, [&](std::span<const int> digits) {
            if (is_self_descriptive(base, digits)) {
                ++descriptive;
                const DigitString ds(base, std::vector<int>(digits.begin(), digits.end()));
                if (!satisfies_sum_lemma(ds)) {
                    check.expect(false, "lemma violated on the oracle stream at base " +
                                            std::to_string(b) + ": " + format_digit_string(ds));
                }
            }
        });
        const auto [solver, trace] = solver_enumerate(base);
        check.expect(descriptive == solver.numbers.size(),
                     "stream fixed-point count differs from the solver at base " +
                         std::to_string(b));
    }

    std::mt19937_64 rng(20260810);
    for (int b = 2; b <= 12; ++b) {
        const Base base(b);
        std::vector<int> digits(static_cast<std::size_t>(b));
        for (int i = 0; i < 100'000; ++i) {
            for (auto& d : digits) {
                d = static_cast<int>(rng() % static_cast<std::uint64_t>(b));
            }
            if (is_self_descriptive(base, digits)) {
                const DigitString ds(base, digits);
                if (!satisfies_sum_lemma(ds)) {
                    check.expect(false, "lemma violated on a random string at base " +
                                            std::to_string(b) + ": " + format_digit_string(ds));
                }
            }
        }
    }

    // The converse fails: (b-1, 1, 0, ..., 0) sums to b without being a
    // fixed point.
    for (int b = 4; b <= 12; ++b) {
        std::vector<int> witness(static_cast<std::size_t>(b), 0);
        witness[0] = b - 1;
        witness[1] = 1;
        const DigitString ds(Base(b), std::move(witness));
        check.expect(satisfies_sum_lemma(ds),
                     "witness fails the lemma at base " + std::to_string(b));
        check.expect(!is_self_descriptive(ds),
                     "witness is unexpectedly self-descriptive at base " + std::to_string(b));
    }
}

void criterion_partition_oracle(Check& check) {
    for (int m = 2; m <= 50; ++m) {
        std::vector<std::vector<int>> found;
        std::vector<int> current;
        generate_partitions(m, m - 1, m, current, found);
        check.expect(found.size() == 1, "partition count " + std::to_string(found.size()) +
                                            " for m=" + std::to_string(m));
        if (found.size() == 1) {
            check.expect(found.front() == restricted_partition(m).parts,
                         "partition shape mismatch for m=" + std::to_string(m));
        }
    }
}

void criterion_autobiographical(Check& check) {
    const std::vector<std::string> expected{"1210",      "2020",      "21200",     "3211000",
                                            "42101000",  "521001000", "6210001000"};
    const auto list = autobiographical(Base(10));
    check.expect(texts(list) == expected, "autobiographical(10) differs from the known list");
    for (const auto& ds : list) {
        const Base origin(static_cast<int>(ds.size()));
        check.expect(is_self_descriptive(DigitString(origin, ds.digits())),
                     format_digit_string(ds) + " does not re-verify in base " +
                         std::to_string(origin.value()));
    }
}

void criterion_grammar_round_trip(Check& check) {
    std::mt19937_64 rng(424242);
    for (int base : {2, 10, 36, 37, 100}) {
        for (int i = 0; i < 10'000; ++i) {
            const int length = 1 + static_cast<int>(rng() % 40);
            std::vector<int> digits(static_cast<std::size_t>(length));
            for (auto& d : digits) {
                d = static_cast<int>(rng() % static_cast<std::uint64_t>(base));
            }
            const DigitString ds(Base(base), std::move(digits));
            const std::string text = format_digit_string(ds);
            const DigitString parsed = parse_digit_string(text, Base(base));
            if (!(parsed == ds) || format_digit_string(parsed) != text) {
                check.expect(false, "round trip failed in base " + std::to_string(base) +
                                        " for '" + text + "'");
                return;
            }
        }
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "no self-descriptive numbers in bases 2, 3, 6 (both methods agree)", 1.0,
         criterion_nonexistence},
        {2, "base 4 has exactly {1210, 2020} by both methods", 1.0, criterion_base4},
        {3, "base 5 has exactly {21200} by both methods", 1.0, criterion_base5},
        {4, "bases 7..14 each have exactly the canonical number by both methods", 30.0,
         criterion_uniqueness},
        {5, "verify accepts 6210001000 in base 10 and the constructor returns it", 0.0,
         criterion_canonical_instance},
        {6, "canonical value matches an independent exponentiation for bases 7..36", 1.0,
         criterion_value_identity},
        {7, "digit-sum lemma holds on oracle streams and random strings; converse fails", 30.0,
         criterion_lemma_property},
        {8, "exhaustive partition generation confirms uniqueness for m = 2..50", 1.0,
         criterion_partition_oracle},
        {9, "autobiographical base-10 list is the known seven numbers", 0.0,
         criterion_autobiographical},
        {10, "format/parse round trip is byte-exact in bases {2, 10, 36, 37, 100}", 5.0,
         criterion_grammar_round_trip},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds) {
            std::ostringstream budget;
            budget << "time budget exceeded: " << elapsed << "s > " << criterion.budget_seconds
                   << "s";
            check.failures.push_back(budget.str());
        }

        const bool passed = check.failures.empty();
        failed += passed ? 0 : 1;
        std::ostringstream line;
        line << (passed ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
             << criterion.summary << " (" << elapsed << "s)";
        std::cout << line.str() << '\n';
        for (const auto& failure : check.failures) {
            std::cout << "       - " << failure << '\n';
        }
    }

    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " acceptance criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
