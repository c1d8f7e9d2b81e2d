"""Derive the sextic resolvent table for depressed quintics, exactly.

For x^5 + p x^3 + q x^2 + r x + s with roots x_0..x_4, the classical
degree-4 invariant

    theta = sum over its orbit of  x_i^2 x_j x_k  (ten terms)

has stabilizer of order 20 inside S5 (the Frobenius group), so theta has
six conjugates and their monic product R(y) = prod (y - theta_t) has
coefficients that are integer polynomials in (p, q, r, s), isobaric of
weight 4k in the weights (2, 3, 4, 5) for the coefficient of y^(6-k).

This script finds those integer polynomials by exact linear algebra: it
evaluates R(y) on many integer root tuples summing to zero, sets up one
linear system per coefficient over the isobaric monomial basis, solves
over Fraction, and cross-validates on held-out samples.  The result is
printed as a Python dict literal for embedding; the test-suite re-checks
the frozen table against direct root computations, so the embedded table
stays self-verifying.

Run from the repository root:  python3 tools/derive_quintic_resolvent.py
"""

from __future__ import annotations

import pathlib
import random
import sys
from fractions import Fraction
from itertools import permutations

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

THETA_TERMS = frozenset(
    [
        (0, 1, 4), (0, 2, 3),
        (1, 0, 2), (1, 3, 4),
        (2, 0, 4), (2, 1, 3),
        (3, 0, 1), (3, 2, 4),
        (4, 0, 3), (4, 1, 2),
    ]
)


def apply_perm(terms: frozenset, sigma) -> frozenset:
    out = set()
    for sq, a, b in terms:
        x, y = sigma[a], sigma[b]
        out.add((sigma[sq], min(x, y), max(x, y)))
    return frozenset(out)


def theta_orbit() -> list[frozenset]:
    orbit = set()
    stabilizer = 0
    for sigma in permutations(range(5)):
        image = apply_perm(THETA_TERMS, sigma)
        orbit.add(image)
        if image == THETA_TERMS:
            stabilizer += 1
    assert stabilizer == 20, f"stabilizer order {stabilizer}, expected 20"
    assert len(orbit) == 6, f"orbit size {len(orbit)}, expected 6"
    return sorted(orbit, key=lambda t: tuple(sorted(t)))


def evaluate_theta(terms: frozenset, roots) -> int:
    return sum(roots[sq] * roots[sq] * roots[a] * roots[b] for sq, a, b in terms)


def elem_sym(values) -> list[int]:
    """e_0..e_n of the values."""
    n = len(values)
    es = [0] * (n + 1)
    es[0] = 1
    for v in values:
        for i in range(n, 0, -1):
            es[i] += v * es[i - 1]
    return es


def resolvent_values(roots, orbit) -> list[int]:
    """Coefficients [c_5, ..., c_0] of prod(y - theta_t), monic omitted."""
    thetas = [evaluate_theta(t, roots) for t in orbit]
    es = elem_sym(thetas)
    # prod(y - theta) = y^6 - e1 y^5 + e2 y^4 - ... + e6
    return [(-1) ** k * es[k] for k in range(1, 7)]


def pqrs(roots) -> tuple[int, int, int, int]:
    es = elem_sym(roots)
    assert es[1] == 0, "roots must sum to zero"
    return es[2], -es[3], es[4], -es[5]


def monomials_of_weight(weight: int) -> list[tuple[int, int, int, int]]:
    out = []
    for a in range(weight // 2 + 1):
        for b in range((weight - 2 * a) // 3 + 1):
            for c in range((weight - 2 * a - 3 * b) // 4 + 1):
                rest = weight - 2 * a - 3 * b - 4 * c
                if rest >= 0 and rest % 5 == 0:
                    out.append((a, b, c, rest // 5))
    return sorted(out)


def solve_exact(rows: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Unique exact solution of an overdetermined consistent system."""
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            raise AssertionError(f"rank-deficient system at column {col}")
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [v - factor * w for v, w in zip(m[r], m[rank])]
        rank += 1
    for r in range(rank, len(m)):
        assert m[r][ncols] == 0, "inconsistent system"
    return [m[i][ncols] for i in range(ncols)]


def main():
    rng = random.Random(20260815)
    orbit = theta_orbit()
    samples = []
    while len(samples) < 220:
        head = [rng.randint(-9, 9) for _ in range(4)]
        roots = head + [-sum(head)]
        samples.append((pqrs(roots), resolvent_values(roots, orbit)))

    table = {}
    for k in range(1, 7):
        basis = monomials_of_weight(4 * k)
        rows, rhs = [], []
        for (p, q, r, s), coeffs in samples[:160]:
            rows.append([p**a * q**b * r**c * s**d for a, b, c, d in basis])
            rhs.append(coeffs[k - 1])
        solution = solve_exact(rows, rhs)
        entries = []
        for mono, coeff in zip(basis, solution):
            assert coeff.denominator == 1, (k, mono, coeff)
            if coeff:
                entries.append((*mono, int(coeff)))
        table[k] = tuple(entries)
        # held-out validation
        for (p, q, r, s), coeffs in samples[160:]:
            value = sum(
                coeff * p**a * q**b * r**c * s**d for a, b, c, d, coeff in entries
            )
            assert value == coeffs[k - 1], f"validation failed at k={k}"

    print("# coefficient of y^(6-k): entries (a, b, c, d, coeff) meaning")
    print("# coeff * p^a * q^b * r^c * s^d")
    print("QUINTIC_RESOLVENT_TABLE = {")
    for k in range(1, 7):
        print(f"    {k}: (")
        for entry in table[k]:
            print(f"        {entry},")
        print("    ),")
    print("}")


if __name__ == "__main__":
    main()
