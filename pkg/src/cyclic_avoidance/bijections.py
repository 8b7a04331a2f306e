"""
Shift-and-truncate bijections between cycle words of different lengths.

Each map deletes a structured block of a standard cycle word and shifts the
surviving letters down, so that a class member of size n corresponds to a
member of a smaller class. Forward maps reject words outside their domain
instead of extending the map. Where the effect on the one-line form has a
closed description, the forward map asserts it (skipped under ``python -O``).

Map ids and their domains at size n:

    L22       (1, c_2..c_{j-1}, 2, 3, ..., m+1),  m = n-j+1, 2 < j <= n
    L23       (1, m+2, ..., n, 2, c_{r+1}..c_n),  m = n-r+1, 3 <= r < n
    C24       (1, 2, c_3, ..., c_n)
    L43_RHO   (1, n, 2, c_4, ..., c_n)
    L45_RHO   (1, c_2, ..., c_{n-2}, 3, 2)
    L46_ETA   (1, c_2..c_{r-2}, m+2, 2, 3, ..., m+1),  m = n-r+1, 3 < r < n
    INV       every cycle word (standard word of the inverse permutation)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import DomainViolation, InvalidPosition
from .perm import (AvoidanceSpec, CycleWord, from_cycle_word, inverse, one_line_of_word,
                   to_standard_cycle_word, word_in_class)


def _shift(letters, d):
    return tuple(x + d for x in letters)


# -- domain shape predicates on raw words --

def _is_l22_shape(word, j) -> bool:
    n = len(word)
    if not 2 < j <= n or word[j - 1] != 2:
        return False
    m = n - j + 1
    return word[j:] == tuple(range(3, m + 2))


def _is_l23_shape(word) -> bool:
    n = len(word)
    if 2 not in word:
        return False
    r = word.index(2) + 1
    if not 3 <= r < n:
        return False
    m = n - r + 1
    return word[1:r - 1] == tuple(range(m + 2, n + 1))


def _is_l46_shape(word, r) -> bool:
    n = len(word)
    if not 3 < r < n or not _is_l22_shape(word, r):
        return False
    return word[r - 2] == n - r + 3


# -- L22 --

def l22_forward(w: CycleWord, j: int) -> CycleWord:
    """(1, c_2..c_{j-1}, 2, 3..m+1) -> (1, c_2-m, ..., c_{j-1}-m) with m = n-j+1."""
    word, n = w.word, w.n
    if not 2 < j <= n:
        raise DomainViolation(f"L22 needs 2 < j <= n, got j={j}, n={n}")
    if word[j - 1] != 2:
        raise DomainViolation(f"2 is at position {w.position(2)}, not {j}")
    if not _is_l22_shape(word, j):
        raise DomainViolation(f"{w}: letters after 2 are not 3..{n - j + 2} in order")
    m = n - j + 1
    out = CycleWord((1,) + _shift(word[1:j - 1], -m))
    if __debug__:
        line = one_line_of_word(word)
        # position 1 and positions m+2..n survive; 2 becomes 1, everything else drops by m
        expected = tuple(1 if v == 2 else v - m for v in (line[0],) + line[m + 1:])
        assert one_line_of_word(out.word) == expected, (w, j)
    return out


def l22_backward(w: CycleWord, m: int) -> CycleWord:
    """(1, d_2..d_{j-1}) -> (1, d_2+m, ..., d_{j-1}+m, 2, 3, ..., m+1)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if w.n < 2:
        raise DomainViolation("L22 backward needs a word of length >= 2")
    return CycleWord((1,) + _shift(w.word[1:], m) + tuple(range(2, m + 2)))


# -- L23 --

def l23_forward(w: CycleWord) -> CycleWord:
    """(1, m+2, ..., n, 2, c_{r+1}..c_n) -> (1, c_{r+1}-1, ..., c_n-1)."""
    word, n = w.word, w.n
    r = w.position(2) if n >= 2 else 0
    if not 3 <= r < n:
        raise DomainViolation(f"L23 needs 2 at a position 3 <= r < n; {w} has r={r}")
    if not _is_l23_shape(word):
        raise DomainViolation(f"{w}: letters between 1 and 2 are not the run {n - r + 3}..{n}")
    m = n - r + 1
    out = CycleWord((1,) + _shift(word[r:], -1))
    if __debug__:
        line = one_line_of_word(word)
        expected = tuple(v if v == 1 else v - 1 for v in line[1:m + 1])
        assert one_line_of_word(out.word) == expected, w
    return out


def l23_backward(w: CycleWord, r: int) -> CycleWord:
    """Inverse of l23_forward; the result has size n = len(w) + r - 1."""
    m = w.n
    if m < 2 or r < 3:
        raise DomainViolation(f"L23 backward needs len >= 2 and r >= 3, got {m}, {r}")
    n = m + r - 1
    return CycleWord((1,) + tuple(range(m + 2, n + 1)) + (2,) + _shift(w.word[1:], 1))


# -- C24 --

def c24_forward(w: CycleWord) -> CycleWord:
    """(1, 2, c_3, ..., c_n) -> (1, c_3-1, ..., c_n-1)."""
    word = w.word
    if w.n < 2 or word[1] != 2:
        raise DomainViolation(f"C24 needs 2 right after 1, got {w}")
    out = CycleWord((1,) + _shift(word[2:], -1))
    if __debug__:
        line = one_line_of_word(word)
        expected = tuple(v if v == 1 else v - 1 for v in line[1:])
        assert one_line_of_word(out.word) == expected, w
    return out


def c24_backward(w: CycleWord) -> CycleWord:
    return CycleWord((1, 2) + _shift(w.word[1:], 1))


# -- maps built on the others --

def l43_rho_forward(w: CycleWord) -> CycleWord:
    """(1, n, 2, c_4, ..., c_n) -> (1, c_4-1, ..., c_n-1)."""
    word, n = w.word, w.n
    if n < 3 or word[1] != n or word[2] != 2:
        raise DomainViolation(f"L43_RHO needs the prefix (1, n, 2), got {w}")
    return CycleWord((1,) + _shift(word[3:], -1))


def l43_rho_backward(w: CycleWord) -> CycleWord:
    n = w.n + 2
    return CycleWord((1, n, 2) + _shift(w.word[1:], 1))


def l45_rho_forward(w: CycleWord) -> CycleWord:
    """(1, c_2, ..., c_{n-2}, 3, 2) -> (1, c_2-1, ..., c_{n-2}-1, 2): L22 at j = n."""
    n = w.n
    if n < 3 or w.word[-1] != 2 or w.word[-2] != 3:
        raise DomainViolation(f"L45_RHO needs a word ending in 3, 2; got {w}")
    return l22_forward(w, n)


def l45_rho_backward(w: CycleWord) -> CycleWord:
    if w.n < 2 or w.word[-1] != 2:
        raise DomainViolation(f"L45_RHO backward needs a word ending in 2, got {w}")
    return l22_backward(w, 1)


def l46_eta_forward(w: CycleWord, r: int) -> CycleWord:
    """(1, c_2..c_{r-2}, m+2, 2, 3..m+1) -> (1, c_2-m, ..., c_{r-2}-m, 2), m = n-r+1."""
    n = w.n
    if not 3 < r < n:
        raise DomainViolation(f"L46_ETA needs 3 < r < n, got r={r}, n={n}")
    if not _is_l46_shape(w.word, r):
        raise DomainViolation(f"{w} is not of the form (1, ..., {n - r + 3}, 2, 3, ..., {n - r + 2})")
    return l22_forward(w, r)


def l46_eta_backward(w: CycleWord, m: int) -> CycleWord:
    if w.n < 3 or w.word[-1] != 2 or m < 2:
        raise DomainViolation("L46_ETA backward needs a word of length >= 3 ending in 2 and m >= 2")
    return l22_backward(w, m)


def inverse_symmetry_map(w: CycleWord) -> CycleWord:
    """Standard cycle word of the inverse permutation: (1, c_n, c_{n-1}, ..., c_2)."""
    out = CycleWord((1,) + w.word[:0:-1])
    if __debug__:
        assert out == to_standard_cycle_word(inverse(from_cycle_word(w))), w
    return out


# -- uniform registry used by the sweeps and the CLI --

def _all_words(n: int) -> Iterator[tuple[int, ...]]:
    for rest in itertools.permutations(range(2, n + 1)):
        yield (1,) + rest


@dataclass(frozen=True)
class BijectionMap:
    map_id: str
    in_domain: Callable[[tuple[int, ...]], bool]
    forward: Callable[[CycleWord], CycleWord]
    backward: Callable[[CycleWord, int], CycleWord]  # (image word, source size n)
    codomain: Callable[[int], Iterator[tuple[int, ...]]]

    def domain(self, n: int) -> Iterator[tuple[int, ...]]:
        """Domain at size n, found by filtering every cycle word of length n."""
        return (w for w in _all_words(n) if self.in_domain(w))


def _lengths(lo, hi, keep=lambda w: True):
    def gen(n):
        for length in range(max(lo(n), 1), hi(n) + 1):
            for w in _all_words(length):
                if keep(w):
                    yield w
    return gen


MAPS: dict[str, BijectionMap] = {
    "L22": BijectionMap(
        "L22",
        lambda w: len(w) >= 3 and _is_l22_shape(w, w.index(2) + 1),
        lambda w: l22_forward(w, w.position(2)),
        lambda v, n: l22_backward(v, n - v.n),
        _lengths(lambda n: 2, lambda n: n - 1)),
    "L23": BijectionMap(
        "L23",
        _is_l23_shape,
        l23_forward,
        lambda v, n: l23_backward(v, n - v.n + 1),
        _lengths(lambda n: 2, lambda n: n - 2)),
    "C24": BijectionMap(
        "C24",
        lambda w: len(w) >= 2 and w[1] == 2,
        c24_forward,
        lambda v, n: c24_backward(v),
        _lengths(lambda n: n - 1, lambda n: n - 1)),
    "L43_RHO": BijectionMap(
        "L43_RHO",
        lambda w: len(w) >= 3 and w[1] == len(w) and w[2] == 2,
        l43_rho_forward,
        lambda v, n: l43_rho_backward(v),
        _lengths(lambda n: n - 2, lambda n: n - 2)),
    "L45_RHO": BijectionMap(
        "L45_RHO",
        lambda w: len(w) >= 3 and w[-2:] == (3, 2),
        l45_rho_forward,
        lambda v, n: l45_rho_backward(v),
        _lengths(lambda n: n - 1, lambda n: n - 1, lambda w: w[-1] == 2)),
    "L46_ETA": BijectionMap(
        "L46_ETA",
        lambda w: 2 in w and _is_l46_shape(w, w.index(2) + 1),
        lambda w: l46_eta_forward(w, w.position(2)),
        lambda v, n: l46_eta_backward(v, n - v.n),
        _lengths(lambda n: 3, lambda n: n - 2, lambda w: w[-1] == 2)),
    "INV": BijectionMap(
        "INV",
        lambda w: True,
        inverse_symmetry_map,
        lambda v, n: inverse_symmetry_map(v),
        _all_words),
}

_PAPER_SPEC = AvoidanceSpec.parse("1324,1423;213")


def _two_at_least_four(word):
    return word.index(2) >= 3


@dataclass(frozen=True)
class TransportCase:
    spec_in: AvoidanceSpec
    spec_out: AvoidanceSpec
    where: Optional[Callable[[tuple[int, ...]], bool]] = None  # restricts the domain


def _same(*texts):
    return [TransportCase(AvoidanceSpec.parse(s), AvoidanceSpec.parse(s)) for s in texts]


# membership pairs each map preserves in both directions
TRANSPORT_CASES: dict[str, list[TransportCase]] = {
    "L22": _same("3421,4321;213", "4321;213", "34521,4321;213"),
    "C24": _same("3421,4321;213", "4321;213", "4312,4321;213", "3412,4321;213"),
    # with 2 at position 3 the one-line side does not transport
    "L23": [TransportCase(_PAPER_SPEC, AvoidanceSpec.parse("132;213"), _two_at_least_four),
            TransportCase(AvoidanceSpec.parse("1324,1423;none"), AvoidanceSpec.parse("132;none"),
                          _two_at_least_four)],
    "L43_RHO": [TransportCase(_PAPER_SPEC, _PAPER_SPEC)],
    "L45_RHO": [TransportCase(_PAPER_SPEC, _PAPER_SPEC)],
    "L46_ETA": [TransportCase(_PAPER_SPEC, _PAPER_SPEC)],
    "INV": [TransportCase(AvoidanceSpec.parse(s), AvoidanceSpec.parse(s).mirror())
            for s in ("3421,4321;213", "4321;213", "4312,4321;213", "3412,4321;213",
                      "1324,1423;213")],
}


def get_map(map_id: str) -> BijectionMap:
    try:
        return MAPS[map_id]
    except KeyError:
        raise KeyError(f"unknown map {map_id!r}; choose from {', '.join(MAPS)}") from None


def round_trip_check(map_id: str, n: int) -> bool:
    """Both compositions are identities and the map is onto its codomain at size n."""
    bm = get_map(map_id)
    domain = list(bm.domain(n))
    for word in domain:
        w = CycleWord(word)
        if bm.backward(bm.forward(w), n) != w:
            return False
    count = 0
    for word in bm.codomain(n):
        v = CycleWord(word)
        back = bm.backward(v, n)
        if not bm.in_domain(back.word) or bm.forward(back) != v:
            return False
        count += 1
    return count == len(domain)


def transport_check(map_id: str, spec_in: AvoidanceSpec, spec_out: AvoidanceSpec, n: int,
                    where: Optional[Callable[[tuple[int, ...]], bool]] = None) -> bool:
    """Membership in spec_in is equivalent to membership of the image in spec_out, over the domain."""
    bm = get_map(map_id)
    for word in bm.domain(n):
        if where is not None and not where(word):
            continue
        image = bm.forward(CycleWord(word))
        if word_in_class(word, spec_in) != word_in_class(image.word, spec_out):
            return False
    return True


# -- explicit zigzag members with 2 right after 1 --

def zigzag_construct(n: int, r: int) -> CycleWord:
    """The member of ({1324,1423}; 213) with c_2 = 2 and n at cycle position r.

    Valid for n >= 6 and 3 <= r < n-1, where that cell holds a single word:
    (1, 2, 3, ..., r-1, n, r, n-1, r+1, n-2, ...), alternating low and high.
    """
    if n < 6:
        raise InvalidPosition(f"zigzag cells are defined for n >= 6, got n={n}")
    if not 3 <= r < n - 1:
        raise InvalidPosition(f"r must satisfy 3 <= r < n-1, got r={r}, n={n}")
    word = [1, 2] + list(range(3, r))
    for pos in range(r, n + 1):
        k, odd = divmod(pos - r, 2)
        word.append(r - 1 + k + 1 if odd else n - k)
    out = CycleWord(tuple(word))
    if not word_in_class(out.word, _PAPER_SPEC):
        raise AssertionError(f"zigzag word {out} is not in the class")
    return out
