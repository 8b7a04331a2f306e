"""
Permutations in one-line form, standard cycle words, and pattern containment.

Values and positions are 1-based throughout: ``Permutation((2, 3, 1))`` sends
1 to 2, 2 to 3 and 3 to 1, and its standard cycle word is ``(1, 2, 3)``.

>>> p = from_one_line([5, 3, 4, 1, 2])
>>> to_standard_cycle_word(p)
CycleWord(word=(1, 5, 2, 3, 4))
>>> contains([2, 4, 1, 5, 3], Pattern.parse("132"))
True
>>> find_occurrence([2, 4, 1, 5, 3], Pattern.parse("132"))
(1, 2, 5)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import DuplicateValue, EmptyInput, InvalidPermutation, NotCyclic, OutOfRange

__all__ = [
    "Permutation", "CycleWord", "Pattern", "AvoidanceSpec",
    "from_one_line", "is_cyclic", "to_standard_cycle_word", "from_cycle_word",
    "inverse", "contains", "find_occurrence", "naive_contains",
    "naive_find_occurrence", "in_class", "word_in_class", "ends_with_occurrence",
    "one_line_of_word",
    "format_permutation", "parse_permutation", "format_cycle_word", "parse_cycle_word",
]


def _check_perm(values: tuple[int, ...]) -> None:
    if not values:
        raise EmptyInput("a permutation needs at least one value")
    n = len(values)
    seen = set()
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidPermutation(f"non-integer value {v!r}")
        if v < 1 or v > n:
            raise OutOfRange(f"value {v} outside 1..{n}")
        if v in seen:
            raise DuplicateValue(f"value {v} occurs twice")
        seen.add(v)


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1, ..., n} stored in one-line form."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        _check_perm(self.values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __str__(self):
        return format_permutation(self)


@dataclass(frozen=True)
class CycleWord:
    """Standard cycle form ``(1, c_2, ..., c_n)`` of a cyclic permutation."""

    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        _check_perm(self.word)
        if self.word[0] != 1:
            raise InvalidPermutation(f"cycle word must start with 1, got {self.word[0]}")

    @property
    def n(self) -> int:
        return len(self.word)

    def position(self, value: int) -> int:
        """1-based position of ``value`` in the word."""
        return self.word.index(value) + 1

    def __str__(self):
        return format_cycle_word(self)


@dataclass(frozen=True)
class Pattern:
    """A permutation of {1, ..., k} used as an avoidance target."""

    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        _check_perm(self.letters)

    @property
    def k(self) -> int:
        return len(self.letters)

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        """Parse a digit string such as ``"4321"`` (k <= 9)."""
        text = text.strip()
        if not text.isdigit():
            raise InvalidPermutation(f"pattern must be a digit string, got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def inverse(self) -> "Pattern":
        inv = [0] * self.k
        for pos, v in enumerate(self.letters, start=1):
            inv[v - 1] = pos
        return Pattern(tuple(inv))

    def reverse(self) -> "Pattern":
        return Pattern(self.letters[::-1])

    def __str__(self):
        if self.k <= 9:
            return "".join(map(str, self.letters))
        return " ".join(map(str, self.letters))


@dataclass(frozen=True)
class AvoidanceSpec:
    """One-line patterns plus an optional cycle-word pattern.

    ``cycle_pattern=None`` places no restriction on the cycle word.
    """

    one_line_patterns: tuple[Pattern, ...] = ()
    cycle_pattern: Optional[Pattern] = None

    def __post_init__(self):
        pats = tuple(p if isinstance(p, Pattern) else Pattern(p) for p in self.one_line_patterns)
        if len(set(pats)) != len(pats):
            raise ValueError("one-line patterns must be pairwise distinct")
        object.__setattr__(self, "one_line_patterns", pats)
        cp = self.cycle_pattern
        if cp is not None and not isinstance(cp, Pattern):
            object.__setattr__(self, "cycle_pattern", Pattern(cp))

    @classmethod
    def parse(cls, text: str) -> "AvoidanceSpec":
        """Parse ``"3421,4321;213"``. An empty side means no pattern there."""
        if ";" not in text:
            raise ValueError(f"spec {text!r} needs the form 'p1,p2;cycle'")
        left, right = text.split(";", 1)
        one_line = tuple(Pattern.parse(p) for p in left.split(",") if p.strip())
        right = right.strip()
        cycle = Pattern.parse(right) if right and right.lower() != "none" else None
        return cls(one_line, cycle)

    @classmethod
    def of(cls, one_line: Iterable[str], cycle: Optional[str]) -> "AvoidanceSpec":
        return cls(tuple(Pattern.parse(p) for p in one_line),
                   Pattern.parse(cycle) if cycle else None)

    def mirror(self) -> "AvoidanceSpec":
        """Image of this spec under taking inverses of the permutations.

        Inverting a cyclic permutation inverts its one-line form and reverses
        the part of its cycle word after the leading 1. The cycle pattern is
        therefore reversed, which is only exact when it neither starts nor
        ends with its smallest letter (the leading 1 cannot take part then).
        """
        cp = self.cycle_pattern
        if cp is not None and 1 in (cp.letters[0], cp.letters[-1]):
            raise ValueError(f"cycle pattern {cp} starts or ends with 1; no exact mirror")
        return AvoidanceSpec(tuple(p.inverse() for p in self.one_line_patterns),
                             cp.reverse() if cp is not None else None)

    def __str__(self):
        left = ",".join(str(p) for p in self.one_line_patterns)
        right = str(self.cycle_pattern) if self.cycle_pattern is not None else "none"
        return f"{left};{right}"


def from_one_line(values: Sequence[int]) -> Permutation:
    return Permutation(tuple(values))


def is_cyclic(p: Permutation) -> bool:
    """True iff the orbit of 1 under ``p`` has size n."""
    size, x = 1, p.values[0]
    while x != 1:
        x = p.values[x - 1]
        size += 1
    return size == p.n


def to_standard_cycle_word(p: Permutation) -> CycleWord:
    if not is_cyclic(p):
        raise NotCyclic(f"{format_permutation(p)} is not a single cycle")
    word = [1]
    x = p.values[0]
    while x != 1:
        word.append(x)
        x = p.values[x - 1]
    return CycleWord(tuple(word))


def one_line_of_word(word: Sequence[int]) -> tuple[int, ...]:
    """One-line form of the cyclic permutation with cycle word ``word`` (raw tuples)."""
    n = len(word)
    out = [0] * n
    for i in range(n - 1):
        out[word[i] - 1] = word[i + 1]
    out[word[-1] - 1] = word[0]
    return tuple(out)


def from_cycle_word(w: CycleWord) -> Permutation:
    return Permutation(one_line_of_word(w.word))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, v in enumerate(p.values, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


# -- pattern containment --

@lru_cache(maxsize=None)
def _plan(letters: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # For step s: the earlier step holding the nearest smaller / larger letter, or -1.
    lo, hi = [], []
    for s, x in enumerate(letters):
        below = [t for t in range(s) if letters[t] < x]
        above = [t for t in range(s) if letters[t] > x]
        lo.append(max(below, key=letters.__getitem__) if below else -1)
        hi.append(min(above, key=letters.__getitem__) if above else -1)
    return tuple(lo), tuple(hi)


def _search(word: Sequence[int], letters: tuple[int, ...], anchored: bool = False):
    """Lexicographically first occurrence as 0-based indices, or None.

    With ``anchored`` the occurrence must use the last letter of ``word``.
    """
    n, k = len(word), len(letters)
    if k > n:
        return None
    lo, hi = _plan(letters)
    chosen = [0] * k
    last = n - 1
    v_last = word[last]
    top = letters[-1]

    def fits(s, x):
        if lo[s] >= 0 and x < word[chosen[lo[s]]]:
            return False
        if hi[s] >= 0 and x > word[chosen[hi[s]]]:
            return False
        return True

    def rec(s, start):
        if s == k:
            return True
        if anchored:
            if s == k - 1:
                if start <= last and fits(s, v_last):
                    chosen[s] = last
                    return True
                return False
            stop = last - (k - 1 - s)
            below = letters[s] < top
        else:
            stop = n - (k - s)
        for i in range(start, stop + 1):
            x = word[i]
            if anchored and (x < v_last) != below:
                continue
            if fits(s, x):
                chosen[s] = i
                if rec(s + 1, i + 1):
                    return True
        return False

    return tuple(chosen) if rec(0, 0) else None


def find_occurrence(word: Sequence[int], pat: Pattern) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest occurrence of ``pat`` in ``word``.

    Returns the 1-based positions of the occurrence, or None if ``word`` avoids ``pat``.
    """
    found = _search(tuple(word), pat.letters)
    return None if found is None else tuple(i + 1 for i in found)


def contains(word: Sequence[int], pat: Pattern) -> bool:
    return _search(tuple(word), pat.letters) is not None


def ends_with_occurrence(word: Sequence[int], pat: Pattern) -> bool:
    """True iff some occurrence of ``pat`` in ``word`` uses the final letter."""
    return bool(word) and _search(tuple(word), pat.letters, anchored=True) is not None


def _order_isomorphic(xs: Sequence[int], ys: Sequence[int]) -> bool:
    return all((xs[s] > xs[t]) == (ys[s] > ys[t])
               for s in range(len(xs)) for t in range(s + 1, len(xs)))


def naive_find_occurrence(word: Sequence[int], pat: Pattern) -> Optional[tuple[int, ...]]:
    """Reference scan over all index subsets; same output contract as find_occurrence."""
    for idx in itertools.combinations(range(len(word)), pat.k):
        if _order_isomorphic([word[i] for i in idx], pat.letters):
            return tuple(i + 1 for i in idx)
    return None


def naive_contains(word: Sequence[int], pat: Pattern) -> bool:
    return naive_find_occurrence(word, pat) is not None


def word_in_class(word: Sequence[int], spec: AvoidanceSpec) -> bool:
    """``in_class`` on a raw cycle-word tuple, skipping validation."""
    if spec.cycle_pattern is not None and contains(word, spec.cycle_pattern):
        return False
    if spec.one_line_patterns:
        line = one_line_of_word(word)
        return not any(contains(line, p) for p in spec.one_line_patterns)
    return True


def in_class(w: CycleWord, spec: AvoidanceSpec) -> bool:
    """Membership of the cyclic permutation ``w`` in the class described by ``spec``."""
    return word_in_class(w.word, spec)


# -- text formats --

def format_permutation(p: Permutation) -> str:
    return " ".join(map(str, p.values))


def parse_permutation(text: str) -> Permutation:
    return Permutation(tuple(int(tok) for tok in text.split()))


def format_cycle_word(w: CycleWord, digits: bool = False) -> str:
    if digits:
        if w.n > 9:
            raise ValueError("digit form is only defined for n <= 9")
        return "".join(map(str, w.word))
    return "(" + ",".join(map(str, w.word)) + ")"


def parse_cycle_word(text: str) -> CycleWord:
    """Parse ``"(1,5,2,3,4)"`` or the bare digit form ``"15234"`` (n <= 9 only)."""
    text = text.strip()
    if text.startswith("("):
        if not text.endswith(")"):
            raise ValueError(f"unbalanced parentheses in {text!r}")
        inner = text[1:-1]
        return CycleWord(tuple(int(tok) for tok in inner.split(",") if tok.strip()))
    if not text.isdigit():
        raise ValueError(f"cannot parse cycle word {text!r}")
    if len(text) > 9:
        raise ValueError("digit form is only defined for n <= 9")
    return CycleWord(tuple(int(ch) for ch in text))
