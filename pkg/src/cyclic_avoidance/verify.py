"""
Brute-force verification of enumeration theorems against their closed forms.

Each registry entry names a class, a statistic of that class to count, and
the closed-form family the counts should follow.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Optional

from .enumerator import count_class, partition_by_two, split_plus_minus
from .errors import UnknownTheorem
from .perm import AvoidanceSpec, Pattern
from .sequences import SequenceFamily, closed_form

PELL_NOTE = "Pell numbers use P_0=0, P_1=1, P_k=2P_{k-1}+P_{k-2}."


def _class_size(n, spec, jobs):
    return count_class(n, spec, jobs=jobs)


def _first_cell(n, spec, jobs):
    return partition_by_two(n, spec).counts_by_j[2]


def _last_cell(n, spec, jobs):
    return partition_by_two(n, spec).counts_by_j[n]


def _plus_sum(n, spec, jobs):
    return sum(split_plus_minus(n, spec, r).plus_count for r in range(4, n + 1))


STATISTICS: dict[str, Callable[[int, AvoidanceSpec, int], int]] = {
    "class": _class_size,
    "first_cell": _first_cell,   # 2 right after 1 in the cycle word
    "last_cell": _last_cell,     # 2 at the end of the cycle word
    "plus_sum": _plus_sum,       # sum over r >= 4 of members with n just before 2
}


@dataclass(frozen=True)
class TheoremEntry:
    spec: Optional[AvoidanceSpec]  # None: built from a caller-supplied tau
    family: SequenceFamily
    statistic: str = "class"
    n_min: Optional[int] = None
    mirrorable: bool = True

    def default_n_min(self) -> int:
        return self.n_min if self.n_min is not None else self.family.valid_n_min


def _spec(text: str) -> AvoidanceSpec:
    return AvoidanceSpec.parse(text)


_BASE = {
    "T3.4": TheoremEntry(None, SequenceFamily.FIB_2N_MINUS_3),
    "C3.5": TheoremEntry(_spec("3421,4321;213"), SequenceFamily.FIB_2N_MINUS_3),
    "C3.6": TheoremEntry(_spec("4321;213"), SequenceFamily.FIB_2N_MINUS_3),
    "T3.7": TheoremEntry(_spec("4312,4321;213"), SequenceFamily.POW2_N_MINUS_2),
    "T3.8": TheoremEntry(_spec("3412,4321;213"), SequenceFamily.PELL_N_MINUS_1, n_min=2),
    "T4.8": TheoremEntry(_spec("1324,1423;213"), SequenceFamily.BINOM_N_3_PLUS_1),
    "L4.4": TheoremEntry(_spec("1324,1423;213"), SequenceFamily.LINEAR_2N_MINUS_6,
                         statistic="first_cell", mirrorable=False),
    "L4.7": TheoremEntry(_spec("1324,1423;213"), SequenceFamily.LINEAR_N_MINUS_2,
                         statistic="last_cell", mirrorable=False),
    "E3": TheoremEntry(_spec("1324,1423;213"), SequenceFamily.BINOM_N_MINUS_3_2_PLUS_1,
                       statistic="plus_sum", n_min=6, mirrorable=False),
    "DEP132": TheoremEntry(_spec("132;213"), SequenceFamily.ONE_LINE_132_COUNT,
                           mirrorable=False),
}


def _with_mirrors(base: dict[str, TheoremEntry]) -> dict[str, TheoremEntry]:
    out = dict(base)
    for key, entry in base.items():
        if entry.mirrorable:
            spec = entry.spec.mirror() if entry.spec is not None else None
            out[key + "-mirror"] = TheoremEntry(spec, entry.family, entry.statistic,
                                                entry.n_min, mirrorable=False)
    return out


REGISTRY: dict[str, TheoremEntry] = _with_mirrors(_BASE)


def tau_family_spec(tau: Pattern, mirror: bool = False) -> AvoidanceSpec:
    """The class ({tau, 4321}; 213) for a pattern tau of length >= 4 ending in 2, 1."""
    if tau.k < 4 or tau.letters[-2:] != (2, 1):
        raise ValueError(f"tau must have length >= 4 and end with 2,1; got {tau}")
    top = Pattern((4, 3, 2, 1))
    pats = (top,) if tau == top else (tau, top)
    spec = AvoidanceSpec(pats, Pattern((2, 1, 3)))
    return spec.mirror() if mirror else spec


@dataclass(frozen=True)
class ReportRow:
    n: int
    brute_force_count: int
    closed_form_value: int

    @property
    def match(self) -> bool:
        return self.brute_force_count == self.closed_form_value


@dataclass
class VerificationReport:
    theorem_id: str
    spec: AvoidanceSpec
    family: SequenceFamily
    statistic: str
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(row.match for row in self.rows)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "spec": str(self.spec),
            "family": self.family.name,
            "statistic": self.statistic,
            "rows": [{"n": r.n, "brute_force_count": r.brute_force_count,
                      "closed_form_value": r.closed_form_value, "match": r.match}
                     for r in self.rows],
            "all_match": self.all_match,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        lines = [f"{self.theorem_id}: {self.statistic} of ({self.spec}) vs {self.family.label}",
                 f"{'n':>3} {'brute':>12} {'closed':>12}  match"]
        for r in self.rows:
            lines.append(f"{r.n:>3} {r.brute_force_count:>12} {r.closed_form_value:>12}  "
                         f"{'yes' if r.match else 'NO'}")
        lines.append(f"all_match: {self.all_match}")
        if self.family is SequenceFamily.PELL_N_MINUS_1:
            lines.append(PELL_NOTE)
        return "\n".join(lines)


def verify_theorem(theorem_id: str, n_min: Optional[int] = None, n_max: int = 8,
                   tau: Optional[Pattern] = None,
                   registry: Optional[dict[str, TheoremEntry]] = None,
                   jobs: int = 1) -> VerificationReport:
    registry = REGISTRY if registry is None else registry
    try:
        entry = registry[theorem_id]
    except KeyError:
        raise UnknownTheorem(theorem_id) from None
    spec = entry.spec
    if spec is None:
        if tau is None:
            raise ValueError(f"{theorem_id} needs a tau pattern")
        spec = tau_family_spec(tau, mirror=theorem_id.endswith("-mirror"))
    if n_min is None:
        n_min = entry.default_n_min()
    if n_min > n_max:
        raise ValueError(f"empty range {n_min}..{n_max}")
    stat = STATISTICS[entry.statistic]
    report = VerificationReport(theorem_id, spec, entry.family, entry.statistic)
    for n in range(n_min, n_max + 1):
        expected = closed_form(entry.family, n)
        report.rows.append(ReportRow(n, stat(n, spec, jobs), expected))
    return report
