"""Exit criteria. Each test records one PASS/FAIL line shown in the terminal summary."""

import itertools

from cyclic_avoidance.bijections import round_trip_check, transport_check, zigzag_construct
from cyclic_avoidance.enumerator import (
    count_class, enumerate_class, naive_count_oracle, partition_by_two, split_plus_minus,
)
from cyclic_avoidance.perm import AvoidanceSpec
from cyclic_avoidance.shapes import blocks_around_two, increasing_after_two, split_shape

S = AvoidanceSpec.parse
SPEC_4 = S("1324,1423;213")

# F_{2n-3} for n = 2..10, from F_0 = 0, F_1 = 1, F_k = F_{k-1} + F_{k-2}
FIB_ODD = dict(zip(range(2, 11), [1, 2, 5, 13, 34, 89, 233, 610, 1597]))
# P_{n-1} for n = 2..10, from P_0 = 0, P_1 = 1, P_k = 2 P_{k-1} + P_{k-2}
PELL = dict(zip(range(2, 11), [1, 2, 5, 12, 29, 70, 169, 408, 985]))
# C(n,3) + 1 for n = 3..10
BINOM_PLUS_ONE = dict(zip(range(3, 11), [2, 5, 11, 21, 36, 57, 85, 121]))

TAUS = ["34521", "43521", "53421"]
PAPER_213 = ["3421,4321;213", "4321;213", "4312,4321;213", "3412,4321;213", "1324,1423;213"]


def record(criteria, number, title, failures):
    ok = not failures
    criteria.append((number, title, ok, "" if ok else "; ".join(map(str, failures[:5]))))
    assert ok, failures


def test_criterion_01_conjecture_fibonacci(criteria):
    spec = S("3421,4321;213")
    fails = [n for n in range(2, 11) if count_class(n, spec) != FIB_ODD[n]]
    record(criteria, 1, "a_n(3421,4321;213) = F(2n-3), n=2..10", fails)


def test_criterion_02_conjecture_binomial(criteria):
    fails = [n for n in range(3, 11) if count_class(n, SPEC_4) != BINOM_PLUS_ONE[n]]
    record(criteria, 2, "a_n(1324,1423;213) = C(n,3)+1, n=3..10", fails)


def test_criterion_03_single_pattern(criteria):
    spec = S("4321;213")
    fails = [n for n in range(2, 11) if count_class(n, spec) != FIB_ODD[n]]
    record(criteria, 3, "a_n(4321;213) = F(2n-3), n=2..10", fails)


def test_criterion_04_tau_family(criteria):
    fails = [(tau, n) for tau in TAUS for n in range(2, 10)
             if count_class(n, S(f"{tau},4321;213")) != FIB_ODD[n]]
    record(criteria, 4, "a_n(tau,4321;213) = F(2n-3) for tau in 34521,43521,53421, n=2..9", fails)


def test_criterion_05_powers_of_two(criteria):
    spec = S("4312,4321;213")
    fails = [n for n in range(2, 11) if count_class(n, spec) != 2 ** (n - 2)]
    for n in range(5, 11):
        cells = partition_by_two(n, spec).counts_by_j
        fails += [("cell", n, j) for j in range(3, n) if cells[j] != 0]
    record(criteria, 5, "a_n(4312,4321;213) = 2^(n-2), n=2..10; middle cells empty, n=5..10", fails)


def test_criterion_06_pell(criteria):
    spec = S("3412,4321;213")
    a = {n: count_class(n, spec) for n in range(2, 11)}
    fails = [n for n in a if a[n] != PELL[n]]
    fails += [("rec", n) for n in range(4, 11) if a[n] != 2 * a[n - 1] + a[n - 2]]
    record(criteria, 6, "a_n(3412,4321;213) = P(n-1), n=2..10; a_n = 2a_(n-1)+a_(n-2)", fails)


def test_criterion_07_mirrors(criteria):
    pairs = [("4312,4321;312", "3421,4321;213"), ("3421,4321;312", "4312,4321;213"),
             ("3412,4321;312", "3412,4321;213"), ("1324,1342;312", "1324,1423;213")]
    fails = [(a, n) for a, b in pairs for n in range(2, 9) if count_class(n, S(a)) != count_class(n, S(b))]
    record(criteria, 7, "312-side counts equal 213-side counterparts, n=2..8", fails)


def test_criterion_08_partitions(criteria):
    fails = []
    for text in PAPER_213:
        spec = S(text)
        for n in range(2, 10):
            if partition_by_two(n, spec).total != count_class(n, spec):
                fails.append(("sum", text, n))
    for n in range(6, 11):
        if partition_by_two(n, SPEC_4).counts_by_j[2] != 2 * n - 6:
            fails.append(("first cell", n))
    for n in range(3, 11):
        if partition_by_two(n, SPEC_4).counts_by_j[n] != n - 2:
            fails.append(("last cell", n))
    for n in range(6, 11):
        plus = sum(split_plus_minus(n, SPEC_4, r).plus_count for r in range(4, n + 1))
        if plus != (n - 3) * (n - 4) // 2 + 1:
            fails.append(("plus sum", n))
    record(criteria, 8, "position-of-2 partition identities", fails)


def test_criterion_09_bijections(criteria):
    fails = [(m, n) for m in ("L22", "L23", "C24", "L46_ETA", "INV") for n in range(1, 10)
             if not round_trip_check(m, n)]
    r_at_least_4 = lambda w: w.index(2) >= 3  # noqa: E731
    cases = [
        ("L22", S("3421,4321;213"), S("3421,4321;213"), None),
        ("C24", S("4321;213"), S("4321;213"), None),
        ("C24", S("3421,4321;213"), S("3421,4321;213"), None),
        ("L23", SPEC_4, S("132;213"), r_at_least_4),
        ("L46_ETA", SPEC_4, SPEC_4, None),
    ] + [("INV", S(t), S(t).mirror(), None) for t in PAPER_213]
    for m, a, b, where in cases:
        fails += [(m, str(a), n) for n in range(2, 9) if not transport_check(m, a, b, n, where)]
    record(criteria, 9, "bijection round trips (n<=9) and avoidance transport (n<=8)", fails)


def test_criterion_10_structure(criteria):
    fails = []
    for text in PAPER_213:
        for n in range(3, 10):
            fails += [("blocks", text, w) for w in enumerate_class(n, S(text)) if not blocks_around_two(w.word)]
    for text in ("4321;213", "3421,4321;213", "4312,4321;213", "3412,4321;213"):
        for n in range(5, 10):
            fails += [("rising tail", text, w) for w in enumerate_class(n, S(text))
                      if w.word[1] != 2 and not increasing_after_two(w.word)]
    for n in range(6, 10):
        members = list(enumerate_class(n, SPEC_4))
        fails += [("split", w) for w in members if not split_shape(w.word)]
        first = [w for w in members if w.word[1] == 2]
        for r in range(3, n - 1):
            if [w for w in first if w.word[r - 1] == n] != [zigzag_construct(n, r)]:
                fails.append(("zigzag", n, r))
    record(criteria, 10, "structural shapes of members; zigzag cells", fails)


def test_criterion_11_oracle_equivalence(criteria):
    texts = PAPER_213 + ["4312,4321;312", "3421,4321;312", "3412,4321;312", "1324,1342;312",
                         "132;213"] + [f"{tau},4321;213" for tau in TAUS]
    fails = [(t, n) for t in texts for n in range(1, 9)
             if sum(1 for _ in enumerate_class(n, S(t))) != naive_count_oracle(n, S(t))]
    record(criteria, 11, "pruned enumeration equals naive oracle, n<=8", fails)


def test_criterion_12_dependency(criteria):
    spec = S("132;213")
    fails = [m for m in range(2, 10) if naive_count_oracle(m, spec) != m - 1]
    record(criteria, 12, "a_m(132;213) = m-1, m=2..9 (naive oracle)", fails)


def test_frozen_values_follow_their_recurrences():
    fib = [0, 1]
    pell = [0, 1]
    for _ in range(20):
        fib.append(fib[-1] + fib[-2])
        pell.append(2 * pell[-1] + pell[-2])
    assert all(FIB_ODD[n] == fib[2 * n - 3] for n in FIB_ODD)
    assert all(PELL[n] == pell[n - 1] for n in PELL)
    assert all(BINOM_PLUS_ONE[n] == len(list(itertools.combinations(range(n), 3))) + 1
               for n in BINOM_PLUS_ONE)
