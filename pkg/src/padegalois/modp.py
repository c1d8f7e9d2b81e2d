"""Dense polynomial arithmetic over prime fields.

Polynomials are plain Python lists of ints in ``[0, p)``, ascending by
exponent, with trailing zeros stripped; the zero polynomial is ``[]``.
Every function takes the modulus explicitly and assumes it is prime.
This layer is deliberately list-based: the factor engine and the
cycle-type sampler call it in tight loops.

Randomized steps (equal-degree splitting) take an explicit
``random.Random`` instance so callers control the seed and results are
reproducible.
"""

from __future__ import annotations

from random import Random

__all__ = [
    "gf_trim",
    "gf_from_int_coeffs",
    "gf_add",
    "gf_sub",
    "gf_mul",
    "gf_mul_scalar",
    "gf_monic",
    "gf_divmod",
    "gf_mod",
    "gf_gcd",
    "gf_pow_mod",
    "gf_eval",
    "gf_deriv",
    "gf_squarefree",
    "gf_distinct_degree",
    "gf_equal_degree",
    "gf_factor_monic",
    "gf_ddf_degree_multiset",
    "gf_roots",
    "gf_is_irreducible",
]


def gf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def gf_from_int_coeffs(coeffs, p: int) -> list[int]:
    return gf_trim([c % p for c in coeffs])


def gf_add(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return gf_trim(out)


def gf_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = a[:] + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return gf_trim(out)


def gf_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return gf_trim([c % p for c in out])


def gf_mul_scalar(a: list[int], s: int, p: int) -> list[int]:
    s %= p
    if s == 0:
        return []
    return gf_trim([c * s % p for c in a])


def gf_monic(a: list[int], p: int) -> list[int]:
    if not a:
        return []
    if a[-1] == 1:
        return a[:]
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gf_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("mod-p polynomial division by zero")
    if len(a) < len(b):
        return [], a[:]
    rem = a[:]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    quot = [0] * (len(a) - db)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + db] % p
        if c:
            q = c * inv % p
            quot[i] = q
            for j in range(db + 1):
                rem[i + j] = (rem[i + j] - q * b[j]) % p
    return gf_trim(quot), gf_trim(rem)


def gf_mod(a: list[int], b: list[int], p: int) -> list[int]:
    return gf_divmod(a, b, p)[1]


def gf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, gf_mod(a, b, p)
    return gf_monic(a, p)


def gf_pow_mod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = gf_mod(base, mod, p)
    while e:
        if e & 1:
            result = gf_mod(gf_mul(result, base, p), mod, p)
        base = gf_mod(gf_mul(base, base, p), mod, p)
        e >>= 1
    return result


def gf_eval(a: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def gf_deriv(a: list[int], p: int) -> list[int]:
    return gf_trim([i * c % p for i, c in enumerate(a)][1:])


def gf_squarefree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of monic f: list of (monic factor, mult).

    Char-p aware: when the derivative vanishes the polynomial is a p-th
    power g(x^p) = g(x)^p over the prime field, and the algorithm recurses
    on the p-th root with multiplicities scaled by p.
    """
    out: list[tuple[list[int], int]] = []
    e = 1
    while len(f) - 1 > 0:
        fp = gf_deriv(f, p)
        if not fp:
            f = f[0::p]
            e *= p
            continue
        g = gf_gcd(f, fp, p)
        w = gf_divmod(f, g, p)[0]
        i = 1
        while len(w) - 1 > 0:
            y = gf_gcd(w, g, p)
            z = gf_divmod(w, y, p)[0]
            if len(z) - 1 > 0:
                out.append((gf_monic(z, p), i * e))
            w = y
            g = gf_divmod(g, y, p)[0]
            i += 1
        f = g
    return out


def gf_distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Distinct-degree stages of squarefree monic f: list of (product, d)
    where product collects all irreducible factors of degree exactly d."""
    out: list[tuple[list[int], int]] = []
    h = [0, 1]
    work = f[:]
    d = 0
    while len(work) - 1 > 2 * (d + 1) - 1:
        d += 1
        h = gf_pow_mod(h, p, work, p)
        g = gf_gcd(gf_sub(h, [0, 1], p), work, p)
        if len(g) - 1 > 0:
            out.append((g, d))
            work = gf_divmod(work, g, p)[0]
            h = gf_mod(h, work, p)
    if len(work) - 1 > 0:
        out.append((work, len(work) - 1))
    return out


def gf_ddf_degree_multiset(f: list[int], p: int) -> list[int]:
    """Sorted degrees of the irreducible factors of squarefree monic f.

    Distinct-degree information suffices (each stage of degree d and total
    degree k contributes k/d copies of d), so this never needs random
    splitting and is fully deterministic — the workhorse of the
    cycle-type sampler.
    """
    out: list[int] = []
    for g, d in gf_distinct_degree(f, p):
        out.extend([d] * ((len(g) - 1) // d))
    return sorted(out)


def _edf_split(f: list[int], d: int, p: int, rng: Random) -> list[list[int]]:
    """Split monic squarefree f (all factors of degree d) into irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = gf_trim(a)
        if len(a) - 1 < 1:
            continue
        g = gf_gcd(a, f, p)
        if 0 < len(g) - 1 < n:
            break
        if p == 2:
            t = a[:]
            acc = a[:]
            for _ in range(d - 1):
                t = gf_pow_mod(t, 2, f, 2)
                acc = gf_add(acc, t, 2)
            g = gf_gcd(acc, f, 2)
        else:
            b = gf_pow_mod(a, (p**d - 1) // 2, f, p)
            g = gf_gcd(gf_sub(b, [1], p), f, p)
        if 0 < len(g) - 1 < n:
            break
    other = gf_divmod(f, g, p)[0]
    return _edf_split(g, d, p, rng) + _edf_split(other, d, p, rng)


def gf_equal_degree(f: list[int], d: int, p: int, rng: Random) -> list[list[int]]:
    """All monic irreducible factors of f (squarefree, pure degree d)."""
    return sorted(_edf_split(f, d, p, rng))


def gf_factor_monic(f: list[int], p: int, rng: Random) -> list[tuple[list[int], int]]:
    """Complete factorization of monic f into (monic irreducible, mult),
    sorted by (degree, coefficients)."""
    out: list[tuple[list[int], int]] = []
    for sqf, mult in gf_squarefree(f, p):
        for stage, d in gf_distinct_degree(sqf, p):
            for irr in gf_equal_degree(stage, d, p, rng):
                out.append((irr, mult))
    return sorted(out, key=lambda t: (len(t[0]), t[0], t[1]))


def gf_roots(f: list[int], p: int) -> list[int]:
    """Roots of f in the prime field, without multiplicity, sorted."""
    if not f:
        raise ValueError("zero polynomial has every residue as a root")
    if len(f) == 1:
        return []
    f = gf_monic(f, p)
    # gcd with x^p - x is the squarefree product of the linear factors,
    # whatever the multiplicities in f
    xp = gf_pow_mod([0, 1], p, f, p)
    lin = gf_gcd(gf_sub(xp, [0, 1], p), f, p)
    deg = len(lin) - 1
    if deg <= 0:
        return []
    if deg == 1:
        return [(-lin[0]) % p]
    if p <= 3 * deg:
        return sorted(x for x in range(p) if gf_eval(lin, x, p) == 0)
    rng = Random(0xC0FFEE)
    roots = [(-h[0]) % p for h in gf_equal_degree(lin, 1, p, rng)]
    return sorted(roots)


def gf_is_irreducible(f: list[int], p: int) -> bool:
    """True when f (nonconstant) is irreducible over the p-element field."""
    n = len(f) - 1
    if n < 1:
        raise ValueError("constant polynomial")
    if n == 1:
        return True
    f = gf_monic(f, p)
    if gf_eval(f, 0, p) == 0:
        return False
    if len(gf_gcd(f, gf_deriv(f, p), p)) - 1 > 0:
        return False
    return gf_ddf_degree_multiset(f, p) == [n]
