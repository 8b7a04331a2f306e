"""Shared test data and brute-force oracles."""

import itertools

from cyclic_avoidance.perm import AvoidanceSpec, naive_contains, one_line_of_word

PAPER_SPEC_TEXTS = [
    "3421,4321;213",
    "4321;213",
    "4312,4321;213",
    "3412,4321;213",
    "1324,1423;213",
    "4312,4321;312",
    "3421,4321;312",
    "3412,4321;312",
    "1324,1342;312",
    "4321;312",
    "132;213",
]

PAPER_SPECS = [AvoidanceSpec.parse(s) for s in PAPER_SPEC_TEXTS]


def brute_members(n, spec):
    """Members found with the naive containment scan only."""
    out = []
    for rest in itertools.permutations(range(2, n + 1)):
        word = (1,) + rest
        if spec.cycle_pattern is not None and naive_contains(word, spec.cycle_pattern):
            continue
        line = one_line_of_word(word)
        if any(naive_contains(line, p) for p in spec.one_line_patterns):
            continue
        out.append(word)
    return out
