"""Independent oracles used by the test-suite.

Each oracle recomputes a quantity by a method different from the one used
in the package, so agreement is meaningful:

* ``sylvester_resultant``   -- determinant of the Sylvester matrix by
  fraction-free-less Gaussian elimination over Fraction.
* ``disc_from_resultant``   -- discriminant via the defining formula.
* ``hankel_pade``           -- diagonal Pade approximant found by solving
  the Hankel linear system for the denominator coefficients directly.
* ``kronecker_factor``      -- complete integer factorization by
  Kronecker's interpolation method (small degrees only).
"""

from __future__ import annotations

import math
from fractions import Fraction

from padegalois.polynomials import IntPoly, RatPoly


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by Gaussian elimination with exact fractions."""
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def sylvester_resultant(a, b) -> Fraction:
    """Res(a, b) as the Sylvester determinant (a, b nonconstant)."""
    da, db = a.degree(), b.degree()
    assert da >= 1 and db >= 1
    n = da + db
    acoeffs = [Fraction(a.coefficient(da - i)) for i in range(da + 1)]
    bcoeffs = [Fraction(b.coefficient(db - i)) for i in range(db + 1)]
    rows = []
    for i in range(db):
        rows.append([Fraction(0)] * i + acoeffs + [Fraction(0)] * (n - da - 1 - i))
    for i in range(da):
        rows.append([Fraction(0)] * i + bcoeffs + [Fraction(0)] * (n - db - 1 - i))
    return _det_fraction(rows)


def disc_from_resultant(f) -> Fraction:
    """(-1)^(d(d-1)/2) * Res(f, f') / lc(f), degree >= 2."""
    d = f.degree()
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    res = sylvester_resultant(f, f.derivative())
    return sign * res / Fraction(f.leading_coefficient())


def poly_from_roots(roots: list[int]) -> IntPoly:
    """Monic integer polynomial with the given integer roots."""
    acc = IntPoly.one()
    for r in roots:
        acc = acc * IntPoly((-r, 1))
    return acc


def disc_from_roots(roots: list[int]) -> int:
    """prod_{i<j} (r_i - r_j)^2 for a monic polynomial with these roots."""
    acc = 1
    n = len(roots)
    for i in range(n):
        for j in range(i + 1, n):
            acc *= (roots[i] - roots[j]) ** 2
    return acc


def hankel_pade(coeffs: list[Fraction], order: int):
    """Diagonal Pade denominator/numerator from the Hankel linear system.

    coeffs are the Taylor coefficients c_0..c_{order-1}.  Seeks Q of degree
    <= q = floor(order/2), P of degree <= order - 1 - q with
    Q * C == P mod x^order.  Returns (P, Q) as RatPoly with Q normalized to
    have its highest *assigned* coefficient block solved by elimination;
    returns None when the homogeneous system is degenerate in a way that
    leaves no valid pair (should not occur for the series tested).
    """
    qdeg = order // 2
    pdeg = order - 1 - qdeg
    # unknowns: q_0..q_qdeg.  Conditions: coefficients of x^k for
    # pdeg+1 <= k <= order-1 of Q*C vanish  (qdeg equations).
    rows = []
    for k in range(pdeg + 1, order):
        rows.append([coeffs[k - j] if 0 <= k - j < order else Fraction(0) for j in range(qdeg + 1)])
    # solve homogeneous system; find a nonzero kernel vector exactly
    kernel = _kernel_vector(rows, qdeg + 1)
    if kernel is None:
        return None
    q = RatPoly(tuple(kernel))
    prod = q * RatPoly(tuple(coeffs))
    p = prod.truncate(pdeg + 1)
    return p, q


def _kernel_vector(rows: list[list[Fraction]], width: int):
    """One nonzero kernel vector of the matrix, or None if only zero."""
    m = [row[:] for row in rows]
    nrows = len(m)
    pivot_cols = []
    r = 0
    for c in range(width):
        pr = None
        for rr in range(r, nrows):
            if m[rr][c] != 0:
                pr = rr
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for rr in range(nrows):
            if rr != r and m[rr][c] != 0:
                f = m[rr][c]
                m[rr] = [v - f * w for v, w in zip(m[rr], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(width) if c not in pivot_cols]
    if not free:
        return None
    # set the first free variable to 1, others to 0
    fv = free[0]
    vec = [Fraction(0)] * width
    vec[fv] = Fraction(1)
    for i, pc in enumerate(pivot_cols):
        vec[pc] = -m[i][fv]
    return vec


def _divisor_candidates(value: int) -> list[int]:
    """All divisors of value (positive and negative); value != 0."""
    v = abs(value)
    divs = []
    d = 1
    while d * d <= v:
        if v % d == 0:
            divs.extend((d, -d, v // d, -(v // d)))
        d += 1
    return sorted(set(divs))


def kronecker_factor(f: IntPoly) -> list[IntPoly]:
    """Complete factorization into primitive irreducibles, by Kronecker.

    Exponential search; intended for degree <= 8 with small coefficients.
    Returns factors sorted by (degree, coefficients); the content is
    discarded (caller should work with primitive input).
    """
    _, f, _ = f.content_primitive()
    factors: list[IntPoly] = []
    work = f
    while work.degree() >= 1:
        found = _kronecker_one_factor(work)
        if found is None:
            factors.append(work)
            break
        work = work.exact_div(found)
        factors.append(found)
    return sorted(factors, key=lambda t: (t.degree(), t.coeffs))


def _kronecker_one_factor(f: IntPoly):
    """Smallest-degree nontrivial primitive factor, or None if irreducible.

    A degree-d factor g is determined by its values at d+1 points, and each
    value g(x) divides f(x).  The search runs over divisor tuples at the
    consecutive points s..s+d, depth-first, pruning any partial tuple with
    v_j != v_i (mod j-i) (an integer polynomial takes congruent values at
    congruent arguments).  A surviving tuple forces the value at s+d+1 via
    the vanishing (d+1)-st finite difference; that value must divide
    f(s+d+1), which rejects almost all survivors before interpolation.
    """
    n = f.degree()
    for d in range(1, n // 2 + 1):
        start = _best_run_start(f, d + 3)
        values = [f.evaluate(x) for x in range(start, start + d + 3)]
        # values at the two extra points are forced by the vanishing of the
        # (d+1)-st finite difference: v_{d+1} = sum_k (-1)^(d-k) C(d+1,k) v_k
        # and the same window shifted by one
        weights = [(-1) ** (d - k) * _binomial(d + 1, k) for k in range(d + 1)]
        after1, after2 = values[d + 1], values[d + 2]
        chosen = [0] * (d + 1)

        # at level j only residues mod lcm(1..j) compatible with the levels
        # below can survive, so bucket each divisor list by that residue
        moduli = [_lcm_upto(j) for j in range(d + 1)]
        buckets = []
        for j in range(d + 1):
            m = moduli[j]
            by_res: dict[int, list[int]] = {}
            for v in _divisor_candidates(values[j]):
                by_res.setdefault(v % m, []).append(v)
            buckets.append(by_res)
        basis = _newton_basis(start, d)
        w_last = weights[d]
        w_prev = weights[d - 1] if d >= 1 else 0

        def leaf(partial: int, partial2: int, res: int):
            for v in buckets[d].get(res, ()):
                forced = partial + w_last * v
                if forced == 0 or after1 % forced != 0:
                    continue
                forced2 = partial2 + w_prev * v + w_last * forced
                if forced2 == 0 or after2 % forced2 != 0:
                    continue
                chosen[d] = v
                g = _newton_interpolate(chosen, basis)
                if g is None or g.degree() != d:
                    continue
                _, gp, _ = g.content_primitive()
                if gp.degree() == d and gp.divides(f):
                    return gp
            return None

        def search(level: int, partial: int, partial2: int):
            m = moduli[level]
            res = 0
            for r in range(m):
                ok = True
                for g in range(2, level + 1):
                    if (r - chosen[level - g]) % g:
                        ok = False
                        break
                if ok:
                    res = r
                    break
            if level == d:
                return leaf(partial, partial2, res)
            w = weights[level]
            w2 = weights[level - 1] if level >= 1 else 0
            for v in buckets[level].get(res, ()):
                chosen[level] = v
                hit = search(level + 1, partial + w * v, partial2 + w2 * v)
                if hit is not None:
                    return hit
            return None

        found = search(0, 0, 0)
        if found is not None:
            return found
    return None


def _lcm_upto(j: int) -> int:
    out = 1
    for g in range(2, j + 1):
        out = out * g // math.gcd(out, g)
    return out


def _newton_basis(start: int, d: int) -> list[RatPoly]:
    """Binomial basis C(x - start, k) for k = 0..d."""
    basis = [RatPoly.one()]
    for k in range(1, d + 1):
        step = RatPoly((Fraction(-(start + k - 1), k), Fraction(1, k)))
        basis.append(basis[-1] * step)
    return basis


def _newton_interpolate(values: list[int], basis: list[RatPoly]):
    """Interpolant sum_k (Delta^k v)(start) * C(x - start, k), as IntPoly.

    `values` are the candidate factor values at start..start+d.  Returns
    None when the interpolant is not an integer polynomial.
    """
    diffs = list(values)
    acc = RatPoly.constant(Fraction(diffs[0]))
    for k in range(1, len(values)):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        if diffs[0]:
            acc = acc + basis[k] * Fraction(diffs[0])
    if acc.is_zero() or not acc.is_integral():
        return None
    return acc.to_int_checked()


def _binomial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _best_run_start(f: IntPoly, length: int) -> int:
    """Start of a run of `length` consecutive non-roots with small values.

    Scans candidate starts near the origin and keeps the run minimizing the
    product of |f| over it, as a proxy for small divisor lists.
    """
    best_start = None
    best_size = None
    checked = 0
    for s in range(-length - 6, 7):
        vals = [f.evaluate(x) for x in range(s, s + length)]
        if any(v == 0 for v in vals):
            continue
        size = 1
        for v in vals:
            size *= abs(v)
        if best_size is None or size < best_size:
            best_size, best_start = size, s
        checked += 1
        if checked >= 8:
            break
    if best_start is not None:
        return best_start
    # a polynomial has finitely many roots, so some farther run works
    s = 7
    while True:
        if all(f.evaluate(x) != 0 for x in range(s, s + length)):
            return s
        s += 1


