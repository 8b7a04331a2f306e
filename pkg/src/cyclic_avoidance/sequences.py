"""Exact integer sequences used as closed forms for class sizes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import BelowRange


def fibonacci(k: int) -> int:
    """F_k with F_0 = 0, F_1 = 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def pell(k: int) -> int:
    """P_k with P_0 = 0, P_1 = 1, P_k = 2 P_{k-1} + P_{k-2}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, 2 * b + a
    return a


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(n, k)


@dataclass(frozen=True)
class _FamilyInfo:
    label: str
    valid_n_min: int


class SequenceFamily(Enum):
    FIB_2N_MINUS_3 = _FamilyInfo("F(2n-3)", 2)
    POW2_N_MINUS_2 = _FamilyInfo("2^(n-2)", 2)
    PELL_N_MINUS_1 = _FamilyInfo("P(n-1)", 1)
    BINOM_N_3_PLUS_1 = _FamilyInfo("C(n,3)+1", 3)
    LINEAR_2N_MINUS_6 = _FamilyInfo("2n-6", 6)
    LINEAR_N_MINUS_2 = _FamilyInfo("n-2", 3)
    BINOM_N_MINUS_3_2_PLUS_1 = _FamilyInfo("C(n-3,2)+1", 4)
    ONE_LINE_132_COUNT = _FamilyInfo("n-1", 2)

    @property
    def label(self) -> str:
        return self.value.label

    @property
    def valid_n_min(self) -> int:
        return self.value.valid_n_min


_FORMULAS = {
    SequenceFamily.FIB_2N_MINUS_3: lambda n: fibonacci(2 * n - 3),
    SequenceFamily.POW2_N_MINUS_2: lambda n: 2 ** (n - 2),
    SequenceFamily.PELL_N_MINUS_1: lambda n: pell(n - 1),
    SequenceFamily.BINOM_N_3_PLUS_1: lambda n: binomial(n, 3) + 1,
    SequenceFamily.LINEAR_2N_MINUS_6: lambda n: 2 * n - 6,
    SequenceFamily.LINEAR_N_MINUS_2: lambda n: n - 2,
    SequenceFamily.BINOM_N_MINUS_3_2_PLUS_1: lambda n: binomial(n - 3, 2) + 1,
    SequenceFamily.ONE_LINE_132_COUNT: lambda n: n - 1,
}


def closed_form(family: SequenceFamily, n: int) -> int:
    if n < family.valid_n_min:
        raise BelowRange(f"{family.name} is defined for n >= {family.valid_n_min}, got {n}")
    return _FORMULAS[family](n)
