"""Build the embedded transitive-group data file (degrees 2..7).

Each record is constructed from first principles rather than copied:
groups with natural small generators get them directly, and the
remaining actions (A4 on the cosets of a C2, the two S4 actions on six
points) are produced by explicit coset enumeration.  The script then
verifies every record against frozen invariants -- order, transitivity,
parity, pairwise-distinct cycle-type signatures -- and writes
``src/padegalois/data/transitive_groups.txt``.

Run from the repository root:  python3 tools/derive_transitive_groups.py
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from padegalois.perms import (
    Perm,
    closure,
    compose,
    cycle_type,
    format_cycles,
    identity,
    is_even,
    is_transitive,
    parse_cycles,
)


def coset_action(group_gens: list[Perm], subgroup_gens: list[Perm], n: int) -> list[Perm]:
    """Images of the group generators acting on the left cosets of the subgroup.

    Cosets are ordered with the subgroup itself first, then by the sorted
    tuple-of-tuples representation, so the construction is deterministic.
    """
    sub = closure(subgroup_gens, n) if subgroup_gens else frozenset({identity(n)})
    group = closure(group_gens, n)
    cosets = {}
    for g in group:
        c = frozenset(compose(g, h) for h in sub)
        key = tuple(sorted(c))
        cosets.setdefault(key, c)
    ordered = sorted(cosets, key=lambda k: (identity(n) not in cosets[k], k))
    index = {k: i for i, k in enumerate(ordered)}
    out = []
    for g in group_gens:
        images = []
        for k in ordered:
            image = frozenset(compose(g, x) for x in cosets[k])
            images.append(index[tuple(sorted(image))])
        out.append(tuple(images))
    return out


def regular_action(group_gens: list[Perm], n: int) -> list[Perm]:
    """The group's left-regular action on its own elements."""
    return coset_action(group_gens, [], n)


def P(text: str, n: int) -> Perm:
    return parse_cycles(text, n)


def build_records() -> list[tuple[int, int, list[Perm]]]:
    records: list[tuple[int, int, list[Perm]]] = []

    records.append((2, 1, [P("(1,2)", 2)]))

    records.append((3, 1, [P("(1,2,3)", 3)]))
    records.append((3, 2, [P("(1,2,3)", 3), P("(1,2)", 3)]))

    records.append((4, 1, [P("(1,2,3,4)", 4)]))
    records.append((4, 2, [P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)]))
    records.append((4, 3, [P("(1,2,3,4)", 4), P("(1,3)", 4)]))
    records.append((4, 4, [P("(1,2,3)", 4), P("(1,2)(3,4)", 4)]))
    records.append((4, 5, [P("(1,2,3,4)", 4), P("(1,2)", 4)]))

    five = P("(1,2,3,4,5)", 5)
    records.append((5, 1, [five]))
    records.append((5, 2, [five, P("(2,5)(3,4)", 5)]))
    records.append((5, 3, [five, P("(2,3,5,4)", 5)]))
    records.append((5, 4, [five, P("(1,2,3)", 5)]))
    records.append((5, 5, [five, P("(1,2)", 5)]))

    # degree 6
    records.append((6, 1, [P("(1,2,3,4,5,6)", 6)]))
    # S3 acting on its own six elements
    records.append((6, 2, regular_action([P("(1,2,3)", 3), P("(1,2)", 3)], 3)))
    records.append((6, 3, [P("(1,2,3,4,5,6)", 6), P("(1,6)(2,5)(3,4)", 6)]))
    # A4 on the cosets of a C2 generated by a double transposition
    records.append(
        (6, 4, coset_action([P("(1,2,3)", 4), P("(1,2)(3,4)", 4)], [P("(1,2)(3,4)", 4)], 4))
    )
    # blocks {1,2,3},{4,5,6} below; blocks {1,4},{2,5},{3,6} for the 2-kernels
    swap3 = P("(1,4)(2,5)(3,6)", 6)
    rot_pair = P("(1,2,3)(4,5,6)", 6)
    records.append((6, 5, [P("(1,2,3)", 6), swap3]))
    records.append((6, 6, [P("(1,4)", 6), rot_pair]))
    # the two faithful S4 actions on six points: on cosets of a C4 (odd
    # image) and of a non-normal V4 (even image)
    s4 = [P("(1,2,3,4)", 4), P("(1,2)", 4)]
    records.append((6, 7, coset_action(s4, [P("(1,2,3,4)", 4)], 4)))
    records.append((6, 8, coset_action(s4, [P("(1,2)", 4), P("(3,4)", 4)], 4)))
    # index-2 subgroups of S3 wr S2 containing block swaps: kernel of the
    # product-of-base-signs character, and of its twist by the swap sign
    records.append(
        (6, 9, [P("(1,2,3)", 6), P("(4,5,6)", 6), P("(1,2)(4,5)", 6), swap3])
    )
    records.append((6, 10, [P("(1,2,3)", 6), P("(4,5,6)", 6), P("(1,4,2,5)(3,6)", 6)]))
    records.append((6, 11, [P("(1,4)", 6), rot_pair, P("(1,2)(4,5)", 6)]))
    # Moebius actions on the projective line over F5: 1=inf, k+2 = k
    records.append((6, 12, [P("(2,3,4,5,6)", 6), P("(1,2)(3,6)", 6)]))
    records.append((6, 13, [P("(1,2,3)", 6), P("(1,2)", 6), swap3]))
    records.append(
        (6, 14, [P("(2,3,4,5,6)", 6), P("(1,2)(3,6)", 6), P("(3,4,6,5)", 6)])
    )
    records.append((6, 15, [P("(1,2,3)", 6), P("(2,3,4,5,6)", 6)]))
    records.append((6, 16, [P("(1,2,3,4,5,6)", 6), P("(1,2)", 6)]))

    # degree 7
    seven = P("(1,2,3,4,5,6,7)", 7)
    records.append((7, 1, [seven]))
    records.append((7, 2, [seven, P("(2,7)(3,6)(4,5)", 7)]))
    # multiplications by 2 and by the primitive root 3 on residues mod 7
    records.append((7, 3, [seven, P("(2,3,5)(4,7,6)", 7)]))
    records.append((7, 4, [seven, P("(2,4,3,7,5,6)", 7)]))
    records.append((7, 5, [seven, _collineation_partner(seven)]))
    records.append((7, 6, [seven, P("(1,2,3)", 7)]))
    records.append((7, 7, [seven, P("(1,2)", 7)]))
    return records


def _collineation_partner(seven: Perm) -> Perm:
    """Involution t with |<seven, t>| = 168 (the simple group on 7 points).

    Searched rather than copied: candidate involutions fixing three points
    and swapping two pairs are tried until the closure has order 168.
    """
    pts = range(7)
    for a in pts:
        for b in pts:
            if b <= a:
                continue
            for c in pts:
                if c in (a, b):
                    continue
                for d in pts:
                    if d <= c or d in (a, b):
                        continue
                    images = list(range(7))
                    images[a], images[b] = b, a
                    images[c], images[d] = d, c
                    t = tuple(images)
                    if len(closure([seven, t], 7)) == 168:
                        return t
    raise AssertionError("no involution completes the 168-element group")


EXPECTED_ORDERS = {
    2: {1: 2},
    3: {1: 3, 2: 6},
    4: {1: 4, 2: 4, 3: 8, 4: 12, 5: 24},
    5: {1: 5, 2: 10, 3: 20, 4: 60, 5: 120},
    6: {
        1: 6, 2: 6, 3: 12, 4: 12, 5: 18, 6: 24, 7: 24, 8: 24,
        9: 36, 10: 36, 11: 48, 12: 60, 13: 72, 14: 120, 15: 360, 16: 720,
    },
    7: {1: 7, 2: 14, 3: 21, 4: 42, 5: 168, 6: 2520, 7: 5040},
}

# groups whose image lies inside the alternating group
EXPECTED_EVEN = {
    (3, 1), (4, 2), (4, 4), (5, 1), (5, 2), (5, 4),
    (6, 4), (6, 8), (6, 10), (6, 12), (6, 15),
    (7, 1), (7, 3), (7, 5), (7, 6),
}


def verify(records):
    seen_signatures = {}
    for degree, t, gens in records:
        assert all(len(g) == degree for g in gens), (degree, t)
        assert is_transitive(gens, degree), f"{degree}T{t} not transitive"
        elements = closure(gens, degree)
        assert len(elements) == EXPECTED_ORDERS[degree][t], (
            f"{degree}T{t}: order {len(elements)} != {EXPECTED_ORDERS[degree][t]}"
        )
        even = all(is_even(g) for g in elements)
        assert even == ((degree, t) in EXPECTED_EVEN), f"{degree}T{t}: parity"
        sig = (degree, tuple(sorted(
            (ct, sum(1 for e in elements if cycle_type(e) == ct))
            for ct in {cycle_type(e) for e in elements}
        )))
        if sig in seen_signatures:
            raise AssertionError(
                f"{degree}T{t} has the same cycle-type signature as {seen_signatures[sig]}"
            )
        seen_signatures[sig] = f"{degree}T{t}"
    print(f"verified {len(records)} records")


def main():
    records = build_records()
    verify(records)
    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "padegalois" / "data"
    out.mkdir(parents=True, exist_ok=True)
    path = out / "transitive_groups.txt"
    lines = [
        "# transitive permutation groups of degree 2..7",
        "# one record per line: degree, t-number, generators in cycle notation",
        "# orders and cycle-type sets are recomputed from the generators at load",
    ]
    for degree, t, gens in records:
        lines.append(f"{degree} {t} " + " ".join(format_cycles(g) for g in gens))
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(records)} records)")


if __name__ == "__main__":
    main()
