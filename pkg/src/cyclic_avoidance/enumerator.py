"""
Enumeration and counting of pattern-avoiding cyclic permutations.

Members are generated as standard cycle words by depth-first extension of
the prefix ``(1, c_2, ...)``. Containment is monotone under extension, so a
prefix holding the cycle pattern is cut immediately; one-line patterns are
only checked on complete words.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import CapExceeded, InvalidPosition
from .perm import AvoidanceSpec, CycleWord, contains, ends_with_occurrence, one_line_of_word, word_in_class

ENUMERATION_CAP = 12
NAIVE_CAP = 10


@dataclass(frozen=True)
class PositionPartition:
    """Class members counted by the cycle position j of the value 2."""

    n: int
    spec: AvoidanceSpec
    counts_by_j: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts_by_j.values())


@dataclass(frozen=True)
class PlusMinusSplit:
    n: int
    r: int
    plus_count: int   # c_{r-1} == n
    minus_count: int  # c_{r-1} != n

    @property
    def total(self) -> int:
        return self.plus_count + self.minus_count


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the cap of {cap}")


def _words(n: int, spec: AvoidanceSpec, first: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Raw member words in lexicographic order, optionally with c_2 fixed."""
    if n == 1:
        if first is None and word_in_class((1,), spec):
            yield (1,)
        return
    cyc = spec.cycle_pattern
    one_line = spec.one_line_patterns
    prefix = [1]
    free = list(range(2, n + 1))
    if first is not None:
        prefix.append(first)
        free.remove(first)
        if cyc is not None and ends_with_occurrence(prefix, cyc):
            return

    def leaf_ok():
        if not one_line:
            return True
        line = one_line_of_word(prefix)
        return not any(contains(line, p) for p in one_line)

    def rec():
        if not free:
            if leaf_ok():
                yield tuple(prefix)
            return
        for idx in range(len(free)):
            x = free.pop(idx)
            prefix.append(x)
            if cyc is None or not ends_with_occurrence(prefix, cyc):
                yield from rec()
            prefix.pop()
            free.insert(idx, x)

    yield from rec()


def enumerate_class(n: int, spec: AvoidanceSpec, cap: int = ENUMERATION_CAP) -> Iterator[CycleWord]:
    """Yield every member of the class at size n, in lexicographic order of the cycle word."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_cap(n, cap)
    for word in _words(n, spec):
        yield CycleWord(word)


def _count_shard(args) -> int:
    n, spec, first = args
    return sum(1 for _ in _words(n, spec, first))


def count_class(n: int, spec: AvoidanceSpec, cap: int = ENUMERATION_CAP, jobs: int = 1) -> int:
    """Size of the class at n.

    The search is sharded on c_2; with ``jobs > 1`` shards run in worker
    processes and their counts are summed.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_cap(n, cap)
    if n == 1:
        return sum(1 for _ in _words(1, spec))
    shards = [(n, spec, c2) for c2 in range(2, n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_count_shard, shards))
    return sum(map(_count_shard, shards))


def naive_count_oracle(n: int, spec: AvoidanceSpec) -> int:
    """Count by filtering all (n-1)! cycle words, with no pruning."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_cap(n, NAIVE_CAP)
    return sum(1 for rest in itertools.permutations(range(2, n + 1))
               if word_in_class((1,) + rest, spec))


def naive_members(n: int, spec: AvoidanceSpec) -> list[tuple[int, ...]]:
    _check_cap(n, NAIVE_CAP)
    return [(1,) + rest for rest in itertools.permutations(range(2, n + 1))
            if word_in_class((1,) + rest, spec)]


def partition_by_two(n: int, spec: AvoidanceSpec) -> PositionPartition:
    if n < 2:
        raise ValueError("partition by the position of 2 needs n >= 2")
    counts = {j: 0 for j in range(2, n + 1)}
    for word in _words(n, spec):
        counts[word.index(2) + 1] += 1
    return PositionPartition(n, spec, counts)


def split_plus_minus(n: int, spec: AvoidanceSpec, r: int) -> PlusMinusSplit:
    """Members with 2 at position r, split by whether the letter before 2 is n."""
    if r < 4 or r > n:
        raise InvalidPosition(f"r={r} outside 4..{n}")
    plus = minus = 0
    for word in _words(n, spec):
        if word[r - 1] != 2:
            continue
        if word[r - 2] == n:
            plus += 1
        else:
            minus += 1
    return PlusMinusSplit(n, r, plus, minus)


def sequence(spec: AvoidanceSpec, n_min: int, n_max: int, cap: int = ENUMERATION_CAP,
             jobs: int = 1) -> list[tuple[int, int]]:
    if not 1 <= n_min <= n_max:
        raise ValueError(f"bad range {n_min}..{n_max}")
    _check_cap(n_max, cap)
    return [(n, count_class(n, spec, cap=cap, jobs=jobs)) for n in range(n_min, n_max + 1)]
