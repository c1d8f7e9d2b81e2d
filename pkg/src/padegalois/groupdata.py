"""Embedded transitive permutation groups of degrees 2 through 7.

The data file ships generator lists only (one record per line: degree,
t-number, generators in cycle notation).  Orders, cycle-type sets, and
parity are recomputed here by brute-force closure every time a degree is
first requested, so the shipped data is self-verifying rather than
trusted.  The two order-24 groups of degree 6 that are abstractly S4 are
told apart by parity: t-number 7 is the action with odd image, t-number 8
the one inside the alternating group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .perms import Perm, closure, cycle_type, is_even, is_transitive, parse_cycles

NAMES = {
    (2, 1): "C2",
    (3, 1): "C3",
    (3, 2): "S3",
    (4, 1): "C4",
    (4, 2): "V4",
    (4, 3): "D4",
    (4, 4): "A4",
    (4, 5): "S4",
    (5, 1): "C5",
    (5, 2): "D5",
    (5, 3): "F20",
    (5, 4): "A5",
    (5, 5): "S5",
    (6, 1): "C6",
    (6, 2): "S3(6)",
    (6, 3): "D6",
    (6, 4): "A4(6)",
    (6, 5): "C3wrC2",
    (6, 6): "C2wrC3",
    (6, 7): "S4(6o)",
    (6, 8): "S4(6e)",
    (6, 9): "C3^2:V4",
    (6, 10): "C3^2:C4",
    (6, 11): "C2wrS3",
    (6, 12): "PSL(2,5)",
    (6, 13): "S3wrS2",
    (6, 14): "PGL(2,5)",
    (6, 15): "A6",
    (6, 16): "S6",
    (7, 1): "C7",
    (7, 2): "D7",
    (7, 3): "F21",
    (7, 4): "F42",
    (7, 5): "PSL(3,2)",
    (7, 6): "A7",
    (7, 7): "S7",
}


@dataclass(frozen=True)
class TransitiveGroupRecord:
    """One transitive group, with everything derivable recomputed on load."""

    degree: int
    t_number: int
    generators: tuple[Perm, ...]
    order: int
    cycle_types: frozenset[tuple[int, ...]]
    all_even: bool

    @property
    def t_label(self) -> str:
        return f"{self.degree}T{self.t_number}"

    @property
    def name(self) -> str:
        return NAMES[(self.degree, self.t_number)]


def _raw_records() -> list[tuple[int, int, tuple[Perm, ...]]]:
    text = resources.files("padegalois").joinpath("data/transitive_groups.txt").read_text()
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        degree, t_number = int(fields[0]), int(fields[1])
        gens = tuple(parse_cycles(tok, degree) for tok in fields[2:])
        out.append((degree, t_number, gens))
    return out


@lru_cache(maxsize=None)
def transitive_groups(degree: int) -> tuple[TransitiveGroupRecord, ...]:
    """All transitive groups of the degree, expanded and ascending in t-number."""
    if not 2 <= degree <= 7:
        raise ValueError(f"no embedded group data for degree {degree}")
    records = []
    for d, t, gens in _raw_records():
        if d != degree:
            continue
        if not is_transitive(list(gens), degree):
            raise AssertionError(f"{d}T{t}: generators are not transitive")
        elements = closure(list(gens), degree)
        records.append(
            TransitiveGroupRecord(
                degree=degree,
                t_number=t,
                generators=gens,
                order=len(elements),
                cycle_types=frozenset(cycle_type(e) for e in elements),
                all_even=all(is_even(e) for e in elements),
            )
        )
    records.sort(key=lambda r: r.t_number)
    return tuple(records)


def group_record(degree: int, t_number: int) -> TransitiveGroupRecord:
    for record in transitive_groups(degree):
        if record.t_number == t_number:
            return record
    raise KeyError(f"{degree}T{t_number}")
