"""Self-descriptive number toolkit.

A number of b digits in base b is self-descriptive when its digit at
position i equals the number of occurrences of digit value i. This package
verifies candidates, enumerates complete per-base sets by two independent
methods (an exhaustive oracle and a restricted-partition case analysis),
and builds the canonical solution for bases >= 7.
"""

from ._core import (
    CrossCheckReport,
    CrossCheckRow,
    DigitString,
    EnumerationResult,
    Error,
    SolverBranch,
    SolverTrace,
    autobiographical,
    brute_force_enumerate,
    construct_canonical,
    cross_check,
    descriptor_counts,
    digit_string_from_value,
    is_self_descriptive,
    parse,
    restricted_partition,
    satisfies_sum_lemma,
    solver_enumerate,
    verify,
)

__version__ = "1.0.0"

__all__ = [
    "CrossCheckReport",
    "CrossCheckRow",
    "DigitString",
    "EnumerationResult",
    "Error",
    "SolverBranch",
    "SolverTrace",
    "autobiographical",
    "brute_force_enumerate",
    "construct_canonical",
    "cross_check",
    "descriptor_counts",
    "digit_string_from_value",
    "is_self_descriptive",
    "parse",
    "restricted_partition",
    "satisfies_sum_lemma",
    "solver_enumerate",
    "verify",
]
