"""Structural predicates on cycle words of class members.

All functions take raw cycle-word tuples ``(1, c_2, ..., c_n)``.
"""

from __future__ import annotations

from typing import Sequence


def _increasing(xs: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(xs, xs[1:]))


def blocks_around_two(word: Sequence[int]) -> bool:
    """With 2 at position r: letters before 2 are {n-r+3..n}, letters after are {3..n-r+2}."""
    n = len(word)
    if n < 3:
        return True
    r = word.index(2) + 1
    return (set(word[1:r - 1]) == set(range(n - r + 3, n + 1))
            and set(word[r:]) == set(range(3, n - r + 3)))


def increasing_after_two(word: Sequence[int]) -> bool:
    r = word.index(2) + 1
    return _increasing(word[r:])


def split_shape(word: Sequence[int]) -> bool:
    """Shape forced on ({1324,1423}; 213) members, n >= 6.

    For 2 < r < n either the block before 2 rises to n, or the block after 2
    rises and the letter before 2 is one more than the last letter; the second
    option needs r > 3. At r = n the letter before 2 is n or 3, and at r = 3
    that letter is n.
    """
    n = len(word)
    r = word.index(2) + 1
    before = word[r - 2]
    if r == n:
        return before in (n, 3)
    if r == 3:
        return word[1] == n
    if 2 < r < n:
        rising_to_n = _increasing(word[1:r - 1]) and before == n
        low_tail = _increasing(word[r:]) and before == word[-1] + 1
        return rising_to_n or low_tail
    return True
