"""Complete factorization of integer polynomials.

Pipeline for ``factor_over_integers``: content/sign split, powers of x,
Yun squarefree decomposition, then per squarefree part a modular
factorization (distinct-degree + equal-degree splitting), quadratic
Hensel lifting to above twice the Mignotte factor bound, and exhaustive
subset recombination with a trailing-coefficient quick test.

Determinism: equal-degree splitting uses a seeded pseudo-random stream;
the seed is fixed by default and recorded in every ``ModPFactorization``.

Prime policy: the smallest prime >= 13 not dividing the leading
coefficient and keeping the input squarefree is used; when it yields more
than ``RECOMBINATION_CUTOFF`` modular factors, further good primes are
probed, and only if all of them bust the cutoff does the engine raise
``FactorCutoffError`` (subset recombination is exponential past that
point, and this toolkit's inputs never legitimately reach it).

Rational roots are found by lifting the roots modulo a good prime with
Newton's iteration and reconstructing numerator/denominator by the
half-extended Euclidean algorithm, then verifying each candidate exactly;
this avoids enumerating divisors of coefficients that can be as large as
a factorial.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .modp import (
    gf_ddf_degree_multiset,
    gf_deriv,
    gf_distinct_degree,
    gf_divmod,
    gf_equal_degree,
    gf_factor_monic,
    gf_from_int_coeffs,
    gf_gcd,
    gf_monic,
    gf_mod,
    gf_mul,
    gf_mul_scalar,
    gf_roots,
    gf_sub,
)
from .polynomials import IntPoly, int_poly_gcd
from .primes import primes_from

__all__ = [
    "Factorization",
    "ModPFactorization",
    "FactorCutoffError",
    "DEFAULT_EDF_SEED",
    "RECOMBINATION_CUTOFF",
    "rational_roots",
    "squarefree_decomposition",
    "factor_mod_p",
    "factor_over_integers",
    "largest_factor",
    "is_irreducible",
    "mignotte_factor_bound",
    "good_primes",
]

DEFAULT_EDF_SEED = 0x5EED
RECOMBINATION_CUTOFF = 24


class FactorCutoffError(RuntimeError):
    """Raised when every probed prime yields too many modular factors."""


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity) == the input, exactly.

    Factors are primitive irreducible with positive leading coefficient,
    sorted by (degree, ascending coefficient tuple).
    """

    unit: int
    factors: tuple[tuple[IntPoly, int], ...]

    def reconstruct(self) -> IntPoly:
        acc = IntPoly.constant(self.unit)
        for poly, mult in self.factors:
            acc = acc * poly**mult
        return acc

    def degree_multiset(self) -> list[int]:
        out: list[int] = []
        for poly, mult in self.factors:
            out.extend([poly.degree()] * mult)
        return sorted(out)

    def is_single_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


@dataclass(frozen=True)
class ModPFactorization:
    """Monic factorization over the p-element field.

    ``leading_coefficient * prod(factor^multiplicity) ==`` the input mod p.
    ``seed`` records the pseudo-random stream used by the equal-degree
    splitting so the run is reproducible.
    """

    prime: int
    leading_coefficient: int
    factors: tuple[tuple[tuple[int, ...], int], ...]
    seed: int

    def degree_multiset(self) -> list[int]:
        out: list[int] = []
        for coeffs, mult in self.factors:
            out.extend([len(coeffs) - 1] * mult)
        return sorted(out)

    def reconstruct_mod_p(self) -> list[int]:
        acc = [self.leading_coefficient % self.prime]
        for coeffs, mult in self.factors:
            for _ in range(mult):
                acc = gf_mul(acc, list(coeffs), self.prime)
        return acc


# ---------------------------------------------------------------------------
# Prime selection
# ---------------------------------------------------------------------------


def good_primes(f: IntPoly, start: int = 13):
    """Primes p >= start with p not dividing lc(f) and f squarefree mod p.

    Requires f squarefree over the integers (otherwise no prime qualifies
    and the generator is empty-in-spirit but would loop; callers pass
    squarefree parts only).
    """
    lc = f.leading_coefficient()
    for p in primes_from(start):
        if lc % p == 0:
            continue
        fm = gf_from_int_coeffs(f.coeffs, p)
        if len(fm) - 1 != f.degree():
            continue
        if len(gf_gcd(fm, gf_deriv(fm, p), p)) == 1:
            yield p


# ---------------------------------------------------------------------------
# Squarefree decomposition (Yun, characteristic zero)
# ---------------------------------------------------------------------------


def squarefree_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun decomposition of the primitive part: [(part, multiplicity)].

    Parts are primitive with positive leading coefficient, pairwise
    coprime, and their weighted product reconstructs f up to the unit
    (sign times content).
    """
    if f.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    _, f, _ = f.content_primitive()
    if f.degree() == 0:
        return []
    deriv = f.derivative()
    a = int_poly_gcd(f, deriv)
    if a.degree() == 0:
        return [(f, 1)]
    b = f.exact_div(a)
    d = deriv.exact_div(a) - b.derivative()
    out: list[tuple[IntPoly, int]] = []
    i = 1
    while b.degree() > 0:
        g = int_poly_gcd(b, d)
        if g.degree() > 0:
            out.append((g.primitive_part(), i))
            b = b.exact_div(g)
            d = d.exact_div(g)
        d = d - b.derivative()
        i += 1
    return out

# ---------------------------------------------------------------------------
# Rational roots (modular lifting + rational reconstruction)
# ---------------------------------------------------------------------------


def _rational_reconstruct(t: int, m: int, num_bound: int, den_bound: int):
    """Find r/s with r == s*t (mod m), |r| <= num_bound, 0 < |s| <= den_bound.

    Half-extended Euclid on (m, t); returns a Fraction candidate or None.
    Callers must verify the candidate exactly (reconstruction is only
    guaranteed unique when m > 2*num_bound*den_bound).
    """
    r0, s0 = m, 0
    r1, s1 = t % m, 1
    while r1 > num_bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > den_bound:
        return None
    return Fraction(r1, s1)


def _eval_mod(f: IntPoly, t: int, m: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * t + c) % m
    return acc


def _newton_lift_root(f: IntPoly, t: int, p: int, target: int) -> tuple[int, int]:
    """Lift a simple root t of f mod p to a root mod m >= target.

    Quadratic Newton iteration; requires f'(t) invertible mod p.  Returns
    (root, modulus).
    """
    fprime = f.derivative()
    m = p
    while m < target:
        m = m * m
        deriv = _eval_mod(fprime, t, m)
        t = (t - _eval_mod(f, t, m) * pow(deriv, -1, m)) % m
    return t, m


def rational_roots(f: IntPoly) -> list[Fraction]:
    """All rational roots of f with multiplicity, sorted ascending."""
    if f.is_zero():
        raise ValueError("the zero polynomial has every rational as a root")
    _, f, _ = f.content_primitive()
    roots: list[Fraction] = []
    while f.degree() >= 1 and f.constant_coefficient() == 0:
        f = f.exact_div(IntPoly.x())
        roots.append(Fraction(0))
    if f.degree() < 1:
        return sorted(roots)
    cof = int_poly_gcd(f, f.derivative())
    rad = f.exact_div(cof) if cof.degree() > 0 else f
    candidates: set[Fraction] = set()
    if rad.degree() == 1:
        candidates.add(Fraction(-rad.coeffs[0], rad.coeffs[1]))
    else:
        num_bound = abs(rad.constant_coefficient())
        den_bound = abs(rad.leading_coefficient())
        target = 2 * num_bound * den_bound + 1
        p = next(iter(good_primes(rad)))
        for t0 in gf_roots(gf_from_int_coeffs(rad.coeffs, p), p):
            t, m = _newton_lift_root(rad, t0, p, target)
            cand = _rational_reconstruct(t, m, num_bound, den_bound)
            if cand is not None and rad.evaluate(cand) == 0:
                candidates.add(cand)
    for q in sorted(candidates):
        linear = IntPoly((-q.numerator, q.denominator))
        while linear.divides(f):
            f = f.exact_div(linear)
            roots.append(q)
    return sorted(roots)


# ---------------------------------------------------------------------------
# Hensel lifting (quadratic, two-factor step + multifactor tree)
# ---------------------------------------------------------------------------


def mignotte_factor_bound(f: IntPoly) -> int:
    """Bound on the max-norm of lc(f) times any monic-normalized factor:
    ceil(sqrt(n+1)) * 2^n * |f|_inf * |lc(f)|."""
    n = f.degree()
    s = math.isqrt(n + 1)
    if s * s < n + 1:
        s += 1
    return s * (1 << n) * f.max_norm() * abs(f.leading_coefficient())


def _mod_poly(a: IntPoly, m: int) -> IntPoly:
    return IntPoly(tuple(c % m for c in a.coeffs))


def _centered(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _centered_poly(a: IntPoly, m: int) -> IntPoly:
    return IntPoly(tuple(_centered(c, m) for c in a.coeffs))


def _divmod_monic_mod(a: IntPoly, b: IntPoly, m: int) -> tuple[IntPoly, IntPoly]:
    """Division with remainder by a monic b in (Z/m)[x]."""
    db = b.degree()
    if a.degree() < db:
        return IntPoly.zero(), _mod_poly(a, m)
    rem = list(a.coeffs)
    quot = [0] * (a.degree() - db + 1)
    bc = b.coeffs
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + db] % m
        if c:
            quot[i] = c
            for j in range(db + 1):
                rem[i + j] = (rem[i + j] - c * bc[j]) % m
    return IntPoly(quot), IntPoly(tuple(x % m for x in rem))


def _hensel_step(
    f: IntPoly, g: IntPoly, h: IntPoly, s: IntPoly, t: IntPoly, m: int
) -> tuple[IntPoly, IntPoly, IntPoly, IntPoly]:
    """One quadratic lift: from f == g*h, s*g + t*h == 1 (mod m) to the
    same congruences mod m^2.  h must be monic; degree bounds
    deg s < deg h, deg t < deg g are preserved."""
    mm = m * m
    e = _mod_poly(f - g * h, mm)
    q, r = _divmod_monic_mod(s * e, h, mm)
    g2 = _mod_poly(g + t * e + q * g, mm)
    h2 = _mod_poly(h + r, mm)
    b = _mod_poly(s * g2 + t * h2 - IntPoly.one(), mm)
    c, d = _divmod_monic_mod(s * b, h2, mm)
    s2 = _mod_poly(s - d, mm)
    t2 = _mod_poly(t - t * b - c * g2, mm)
    return g2, h2, s2, t2


def _gf_bezout(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """s, t with s*a + t*b == 1 mod p, deg s < deg b, deg t < deg a;
    requires gcd(a, b) = 1."""
    r0, r1 = a[:], b[:]
    s0, s1 = [1], []
    while r1:
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
    if len(r0) != 1:
        raise ValueError("inputs are not coprime mod p")
    s = gf_mul_scalar(s0, pow(r0[0], -1, p), p)
    s = gf_mod(s, b, p)
    num = gf_sub([1], gf_mul(s, a, p), p)
    t, rem = gf_divmod(num, b, p)
    if rem:
        raise AssertionError("bezout residue must vanish")
    return s, t


def _hensel_lift_multi(f: IntPoly, mods: list[list[int]], p: int, d: int) -> list[IntPoly]:
    """Lift f == lc(f) * prod(mods) (mod p) to the same shape mod p^(2^d).

    ``mods`` are monic, pairwise coprime mod p.  Returns monic factors
    with coefficients in [0, p^(2^d))."""
    M = p ** (1 << d)
    lc = f.leading_coefficient()
    if len(mods) == 1:
        inv = pow(lc % M, -1, M)
        return [_mod_poly(f * inv, M)]
    k = len(mods) // 2
    g0 = [lc % p]
    for gi in mods[:k]:
        g0 = gf_mul(g0, gi, p)
    h0 = [1]
    for gi in mods[k:]:
        h0 = gf_mul(h0, gi, p)
    s0, t0 = _gf_bezout(g0, h0, p)
    g, h, s, t = IntPoly(g0), IntPoly(h0), IntPoly(s0), IntPoly(t0)
    m = p
    for _ in range(d):
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    return _hensel_lift_multi(g, mods[:k], p, d) + _hensel_lift_multi(h, mods[k:], p, d)


# ---------------------------------------------------------------------------
# Zassenhaus recombination
# ---------------------------------------------------------------------------


def _select_prime(f: IntPoly) -> tuple[int, list[int]]:
    """Smallest good prime >= 13 and the factor-degree multiset; probes
    further primes only when the count busts the recombination cutoff."""
    best: tuple[int, list[int]] | None = None
    gen = good_primes(f)
    for _ in range(12):
        p = next(gen)
        multiset = gf_ddf_degree_multiset(gf_monic(gf_from_int_coeffs(f.coeffs, p), p), p)
        if len(multiset) <= RECOMBINATION_CUTOFF:
            return p, multiset
        if best is None or len(multiset) < len(best[1]):
            best = (p, multiset)
    raise FactorCutoffError(
        f"every probed prime leaves more than {RECOMBINATION_CUTOFF} modular "
        f"factors (best was {len(best[1])} at p={best[0]}); aborting rather "
        "than attempting exponential recombination"
    )


def _zassenhaus(f: IntPoly, seed: int) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree f with positive
    leading coefficient (degree >= 1)."""
    if f.degree() == 1:
        return [f]
    if f.constant_coefficient() == 0:
        # squarefree, so x appears exactly once; recombination cannot see
        # it through the trailing-coefficient filter, split it off first
        rest = f.exact_div(IntPoly.x())
        out = [IntPoly.x()]
        if rest.degree() >= 1:
            out.extend(_zassenhaus(rest, seed))
        return out
    if _eisenstein_irreducible(f):
        return [f]
    p, multiset = _select_prime(f)
    if multiset == [f.degree()]:
        return [f]
    rng = Random(seed)
    fm = gf_monic(gf_from_int_coeffs(f.coeffs, p), p)
    modular: list[list[int]] = []
    for stage, deg in gf_distinct_degree(fm, p):
        modular.extend(gf_equal_degree(stage, deg, p, rng))
    bound = 2 * mignotte_factor_bound(f)
    K = 1
    val = p
    while val <= bound:
        val *= p
        K += 1
    d = (K - 1).bit_length()
    lifted = _hensel_lift_multi(f, modular, p, d)
    M = p ** (1 << d)

    result: list[IntPoly] = []
    avail = list(range(len(lifted)))
    cur = f
    size = 1
    while 2 * size <= len(avail):
        lc = cur.leading_coefficient()
        tc = cur.constant_coefficient()
        found = False
        for combo in itertools.combinations(avail, size):
            t_prod = lc % M
            for i in combo:
                t_prod = t_prod * lifted[i].coeffs[0] % M
            t_cent = _centered(t_prod, M)
            if t_cent == 0 or (lc * tc) % t_cent != 0:
                continue
            prod = IntPoly((lc,))
            for i in combo:
                prod = _mod_poly(prod * lifted[i], M)
            cand = _centered_poly(prod, M).primitive_part()
            if cand.degree() >= 1 and cand.divides(cur):
                result.append(cand)
                cur = cur.exact_div(cand)
                for i in combo:
                    avail.remove(i)
                found = True
                break
        if not found:
            size += 1
    if cur.degree() >= 1:
        result.append(cur.primitive_part())
    return result


def _eisenstein_irreducible(f: IntPoly) -> bool:
    """Cheap certificate scan: Eisenstein at some prime, on f or on its
    reversal.  Only prime divisors found by bounded trial division of the
    non-leading coefficient gcd are tried; a False just means 'no cheap
    certificate', never 'reducible'."""
    if f.constant_coefficient() == 0:
        return False
    for g in (f, f.reversed_coefficients()):
        if g.degree() < 2 or g.constant_coefficient() == 0:
            continue
        d = 0
        for c in g.coeffs[:-1]:
            d = math.gcd(d, c)
        if d <= 1:
            continue
        for p in _bounded_prime_divisors(d):
            if g.constant_coefficient() % (p * p) != 0:
                return True
    return False


def _bounded_prime_divisors(n: int, limit: int = 100000) -> list[int]:
    """Prime divisors of n found by trial division up to the limit, plus
    the cofactor when it is itself prime."""
    from .primes import is_prime

    out = []
    n = abs(n)
    d = 2
    while d <= limit and d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1 and (n <= limit * limit or is_prime(n)):
        out.append(n)
    return out

# ---------------------------------------------------------------------------
# Public factorization entry points
# ---------------------------------------------------------------------------


def factor_mod_p(f: IntPoly, p: int, seed: int = DEFAULT_EDF_SEED) -> ModPFactorization:
    """Complete monic factorization of f over the p-element field."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.leading_coefficient() % p == 0:
        raise ValueError(f"leading coefficient divisible by p={p}")
    fm = gf_from_int_coeffs(f.coeffs, p)
    lc = fm[-1]
    if len(fm) == 1:
        return ModPFactorization(prime=p, leading_coefficient=lc, factors=(), seed=seed)
    monic = gf_monic(fm, p)
    rng = Random(seed)
    parts = gf_factor_monic(monic, p, rng)
    return ModPFactorization(
        prime=p,
        leading_coefficient=lc,
        factors=tuple((tuple(g), mult) for g, mult in parts),
        seed=seed,
    )


def factor_over_integers(f: IntPoly, seed: int = DEFAULT_EDF_SEED) -> Factorization:
    """Complete factorization into primitive irreducibles over the
    rationals (constant input yields a unit-only factorization)."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    content, prim, sign = f.content_primitive()
    unit = sign * content
    if prim.degree() == 0:
        return Factorization(unit=unit, factors=())
    counts: dict[IntPoly, int] = {}
    xshift = 0
    while prim.constant_coefficient() == 0:
        prim = prim.exact_div(IntPoly.x())
        xshift += 1
    if xshift:
        counts[IntPoly.x()] = xshift
    if prim.degree() >= 1:
        # strip rational roots first: keeps the modular factor count low
        # for inputs that are mostly products of linear factors
        for root in rational_roots(prim):
            linear = IntPoly((-root.numerator, root.denominator))
            prim = prim.exact_div(linear)
            counts[linear] = counts.get(linear, 0) + 1
    if prim.degree() >= 1:
        for part, mult in squarefree_decomposition(prim):
            for irr in _zassenhaus(part, seed):
                counts[irr] = counts.get(irr, 0) + mult
    ordered = sorted(counts.items(), key=lambda kv: (kv[0].degree(), kv[0].coeffs))
    return Factorization(unit=unit, factors=tuple(ordered))


def largest_factor(f: IntPoly, seed: int = DEFAULT_EDF_SEED) -> IntPoly:
    """The irreducible factor of maximal degree; ties are broken by the
    lexicographically largest ascending coefficient tuple."""
    if f.degree() < 1:
        raise ValueError("largest_factor needs a nonconstant polynomial")
    fac = factor_over_integers(f, seed)
    return max(fac.factors, key=lambda kv: (kv[0].degree(), kv[0].coeffs))[0]


def is_irreducible(f: IntPoly, seed: int = DEFAULT_EDF_SEED) -> bool:
    """True when the primitive part of f is irreducible over the
    rationals.  Fast paths: degree one, an Eisenstein certificate, or a
    single mod-p factorization staying irreducible; otherwise the full
    engine decides."""
    if f.degree() < 1:
        raise ValueError("irreducibility is about nonconstant polynomials")
    _, prim, _ = f.content_primitive()
    if prim.degree() == 1:
        return True
    if prim.constant_coefficient() == 0:
        return False
    if int_poly_gcd(prim, prim.derivative()).degree() > 0:
        return False
    if _eisenstein_irreducible(prim):
        return True
    gen = good_primes(prim)
    for _ in range(3):
        p = next(gen)
        fm = gf_monic(gf_from_int_coeffs(prim.coeffs, p), p)
        if gf_ddf_degree_multiset(fm, p) == [prim.degree()]:
            return True
    fac = factor_over_integers(prim, seed)
    return fac.is_single_irreducible()
