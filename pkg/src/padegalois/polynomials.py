"""Dense univariate polynomials with exact integer and rational coefficients.

Two immutable coefficient containers back everything in this package:

* ``IntPoly`` -- coefficients are Python ints, stored ascending by exponent.
* ``RatPoly`` -- coefficients are ``fractions.Fraction``, same layout.

Trailing zeros are always stripped, so representations are canonical and
equality is tuple equality.  The zero polynomial is the empty tuple and has
degree -1 (a sentinel, never used in arithmetic).

Resultants are computed with the subresultant pseudo-remainder sequence in
pure integer arithmetic; no floating point is used anywhere.  The
discriminant follows the product-of-root-differences convention::

    disc(f) = (-1)^(d(d-1)/2) * res(f, f') / lc(f)

so ``disc(x^2 + 2x + 2) == -4`` and ``disc(x^2 - 1) == 4``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

BigRat = Fraction

__all__ = [
    "BigRat",
    "IntPoly",
    "RatPoly",
    "resultant",
    "discriminant",
    "int_poly_gcd",
    "format_poly",
    "parse_poly",
    "parse_int_poly",
    "coeff_strings",
    "int_poly_from_strings",
    "rat_poly_from_strings",
]


def _strip(coeffs: Sequence) -> tuple:
    """Drop trailing zeros so the coefficient tuple is canonical."""
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _add(a: Sequence, b: Sequence) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _strip(out)


def _neg(a: Sequence) -> tuple:
    return tuple(-c for c in a)


def _mul(a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _strip(out)


class _BasePoly:
    """Shared behaviour; subclasses fix the coefficient domain."""

    __slots__ = ("coeffs",)
    coeffs: tuple

    def degree(self) -> int:
        """Degree, with -1 as the sentinel for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_coefficient(self):
        return self.coeffs[0] if self.coeffs else 0

    def coefficient(self, k: int):
        """Coefficient of x^k (zero when k exceeds the degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def evaluate(self, point):
        """Horner evaluation at an exact point (int or Fraction)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, _BasePoly):
            return self.coeffs == other.coeffs and type(self) is type(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coeffs))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_poly(self)})"


@dataclass(frozen=True, eq=False, repr=False)
class IntPoly(_BasePoly):
    """Dense polynomial over the integers, coefficients ascending."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable[int] = ()):
        cleaned = _strip([int(c) for c in coeffs])
        object.__setattr__(self, "coeffs", cleaned)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly(())

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    @staticmethod
    def constant(c: int) -> "IntPoly":
        return IntPoly((c,))

    @staticmethod
    def monomial(k: int, c: int = 1) -> "IntPoly":
        return IntPoly((0,) * k + (c,))

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_add(self.coeffs, other.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_add(self.coeffs, _neg(other.coeffs)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(_neg(self.coeffs))

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return IntPoly(_mul(self.coeffs, other.coeffs))
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = IntPoly.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def shift_argument(self, a: int) -> "IntPoly":
        """Return f(x + a) (Taylor shift by synthetic division)."""
        coeffs = list(self.coeffs)
        n = len(coeffs)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                coeffs[j] += a * coeffs[j + 1]
        return IntPoly(coeffs)

    # -- integer-specific helpers -------------------------------------

    def content_primitive(self) -> tuple[int, "IntPoly", int]:
        """Split into ``(content, primitive, sign)``.

        ``content`` is the positive gcd of the coefficients, ``primitive``
        has content 1 and positive leading coefficient, and ``sign`` is +1
        or -1 so that ``self == sign * content * primitive``.  The zero
        polynomial returns ``(0, 0, 1)``.
        """
        if not self.coeffs:
            return 0, IntPoly.zero(), 1
        content = 0
        for c in self.coeffs:
            content = math.gcd(content, c)
        sign = 1 if self.coeffs[-1] > 0 else -1
        prim = IntPoly(tuple(c // (sign * content) for c in self.coeffs))
        return content, prim, sign

    def primitive_part(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        _, prim, _ = self.content_primitive()
        return prim

    def max_norm(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def one_norm(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def divmod_exact(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Rational division, demanding integer results.

        Raises ``ValueError`` unless both quotient and remainder land back
        in Z[x]; use :meth:`divides` for a tolerant test.
        """
        q, r = divmod(self.to_rat(), other.to_rat())
        qi, ri = q.to_int_checked(), r.to_int_checked()
        return qi, ri

    def divides(self, other: "IntPoly") -> bool:
        """True when ``self`` divides ``other`` exactly in Q[x] with an
        integer quotient check left to callers that need it."""
        if self.is_zero():
            return other.is_zero()
        q, r = divmod(other.to_rat(), self.to_rat())
        return r.is_zero()

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        q, r = self.divmod_exact(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def to_rat(self) -> "RatPoly":
        return RatPoly(tuple(Fraction(c) for c in self.coeffs))

    def reduce_mod(self, p: int) -> list[int]:
        """Coefficient list mod p (ascending, possibly with trailing zeros
        stripped), for handing to the mod-p layer."""
        out = [c % p for c in self.coeffs]
        while out and out[-1] == 0:
            out.pop()
        return out

    def reversed_coefficients(self) -> "IntPoly":
        """x^deg * f(1/x): coefficient sequence reversed."""
        return IntPoly(tuple(reversed(self.coeffs)))

    def is_even_polynomial(self) -> bool:
        return all(c == 0 for i, c in enumerate(self.coeffs) if i % 2 == 1)

    def is_odd_polynomial(self) -> bool:
        return all(c == 0 for i, c in enumerate(self.coeffs) if i % 2 == 0)

    def even_part_compressed(self) -> "IntPoly":
        """For f(x) = g(x^2) return g; caller must check evenness."""
        return IntPoly(self.coeffs[0::2])


@dataclass(frozen=True, eq=False, repr=False)
class RatPoly(_BasePoly):
    """Dense polynomial over the rationals, coefficients ascending."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Union[int, Fraction]] = ()):
        cleaned = _strip([Fraction(c) for c in coeffs])
        object.__setattr__(self, "coeffs", cleaned)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "RatPoly":
        return RatPoly(())

    @staticmethod
    def one() -> "RatPoly":
        return RatPoly((1,))

    @staticmethod
    def x() -> "RatPoly":
        return RatPoly((0, 1))

    @staticmethod
    def constant(c) -> "RatPoly":
        return RatPoly((Fraction(c),))

    @staticmethod
    def monomial(k: int, c=1) -> "RatPoly":
        return RatPoly((Fraction(0),) * k + (Fraction(c),))

    @staticmethod
    def from_int(coeffs: Iterable[int]) -> "RatPoly":
        return RatPoly(tuple(Fraction(c) for c in coeffs))

    # -- field-coefficient operations ----------------------------------

    def __add__(self, other: "RatPoly") -> "RatPoly":
        return RatPoly(_add(self.coeffs, other.coeffs))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return RatPoly(_add(self.coeffs, _neg(other.coeffs)))

    def __neg__(self) -> "RatPoly":
        return RatPoly(_neg(self.coeffs))

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return RatPoly(_mul(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return RatPoly(tuple(c * f for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = RatPoly.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        """Long division; ``x divmod x^2`` is ``(0, x)``."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RatPoly.zero(), self
        quot = [Fraction(0)] * (dq + 1)
        blc = other.coeffs[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1]
            if c:
                q = c / blc
                quot[i] = q
                for j, bc in enumerate(other.coeffs):
                    rem[i + j] -= q * bc
        return RatPoly(quot), RatPoly(rem)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def shift_argument(self, a) -> "RatPoly":
        """Return f(x + a)."""
        a = Fraction(a)
        coeffs = list(self.coeffs)
        n = len(coeffs)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                coeffs[j] += a * coeffs[j + 1]
        return RatPoly(coeffs)

    def truncate(self, order: int) -> "RatPoly":
        """Reduce mod x^order."""
        return RatPoly(self.coeffs[:order])

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        inv = 1 / self.coeffs[-1]
        return RatPoly(tuple(c * inv for c in self.coeffs))

    def gcd(self, other: "RatPoly") -> "RatPoly":
        """Monic gcd by the Euclidean algorithm over Q."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def clear_denominators(self) -> tuple[int, IntPoly]:
        """Return ``(den, g)`` with ``self == g / den`` and g integral.

        ``den`` is the positive lcm of coefficient denominators; the zero
        polynomial yields ``(1, 0)``.  No content is removed from ``g``.
        """
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return den, IntPoly(tuple(int(c * den) for c in self.coeffs))

    def to_int_checked(self) -> IntPoly:
        """Convert to IntPoly, raising if any coefficient is fractional."""
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
        return IntPoly(tuple(int(c) for c in self.coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


# ---------------------------------------------------------------------------
# Resultant / discriminant (subresultant pseudo-remainder sequence)
# ---------------------------------------------------------------------------


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(da-db+1) * a == q*b + r with deg r < deg b."""
    rem = list(a)
    blc = b[-1]
    db = len(b) - 1
    steps = len(rem) - len(b) + 1
    for i in range(steps - 1, -1, -1):
        lead = rem[i + db]
        rem = [c * blc for c in rem]
        if lead:
            for j in range(len(b)):
                rem[i + j] -= lead * b[j]
        rem[i + db] = 0
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _int_content(c: Sequence[int]) -> int:
    g = 0
    for v in c:
        g = math.gcd(g, v)
    return g


def _subresultant_prs(A: list[int], B: list[int]) -> list[list[int]]:
    """The full subresultant remainder sequence, starting at [A, B]."""
    seq = [A, B]
    g, h = 1, 1
    a, b = A, B
    while len(b) - 1 > 0:
        delta = (len(a) - 1) - (len(b) - 1)
        r = _pseudo_rem(a, b)
        if not r:
            seq.append(r)
            break
        div = g * h**delta
        r = [c // div for c in r]
        seq.append(r)
        a, b = b, r
        g = a[-1]
        if delta:
            h = g**delta // h ** (delta - 1)
    return seq


def int_poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Gcd in Z[x], normalized primitive with positive leading coefficient
    times the gcd of the contents."""
    if a.is_zero():
        c, p, _ = b.content_primitive()
        return p * c
    if b.is_zero():
        c, p, _ = a.content_primitive()
        return p * c
    ca, pa, _ = a.content_primitive()
    cb, pb, _ = b.content_primitive()
    cg = math.gcd(ca, cb)
    A, B = list(pa.coeffs), list(pb.coeffs)
    if len(A) < len(B):
        A, B = B, A
    seq = _subresultant_prs(A, B)
    last = next(s for s in reversed(seq) if s)
    prim = IntPoly(last).primitive_part()
    return prim * cg


def _resultant_int(A: list[int], B: list[int]) -> int:
    """Resultant of two nonzero integer coefficient lists (ascending)."""
    da, db = len(A) - 1, len(B) - 1
    sign = 1
    if da < db:
        A, B = B, A
        da, db = db, da
        if da & db & 1:
            sign = -sign
    if db == 0:
        return sign * B[0] ** da
    ca, A = _int_content(A), A
    cb, B = _int_content(B), B
    A = [c // ca for c in A]
    B = [c // cb for c in B]
    scale = ca**db * cb**da
    s = sign
    g, h = 1, 1
    a, b = A, B
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da & db & 1:
            s = -s
        r = _pseudo_rem(a, b)
        if not r:
            return 0
        div = g * h**delta
        r = [c // div for c in r]
        a, b = b, r
        g = a[-1]
        if delta:
            h = g**delta // h ** (delta - 1)
        if len(b) - 1 == 0:
            # constant remainder: finish with the standard correction
            da = len(a) - 1
            hfin = b[0] ** da // h ** (da - 1) if da > 1 else b[0] ** da * h ** (1 - da)
            return s * scale * hfin


def resultant(a: RatPoly | IntPoly, b: RatPoly | IntPoly) -> Fraction:
    """res(a, b) with the Sylvester convention: res(x-1, x+1) == 2.

    Inputs may be integer or rational polynomials; the computation clears
    denominators and runs the subresultant sequence over Z.  Zero inputs
    (or a shared factor) give 0; two nonzero constants give 1.
    """
    ra = a.to_rat() if isinstance(a, IntPoly) else a
    rb = b.to_rat() if isinstance(b, IntPoly) else b
    if ra.is_zero() or rb.is_zero():
        return Fraction(0)
    da, db = ra.degree(), rb.degree()
    if da == 0 and db == 0:
        return Fraction(1)
    if da == 0:
        return Fraction(ra.coeffs[0] ** db)
    if db == 0:
        return Fraction(rb.coeffs[0] ** da)
    dena, A = ra.clear_denominators()
    denb, B = rb.clear_denominators()
    res = _resultant_int(list(A.coeffs), list(B.coeffs))
    return Fraction(res, dena**db * denb**da)


def discriminant(f: RatPoly | IntPoly) -> Fraction:
    """disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f), degree >= 1 required."""
    rf = f.to_rat() if isinstance(f, IntPoly) else f
    d = rf.degree()
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return Fraction(1)
    res = resultant(rf, rf.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res / rf.leading_coefficient()


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"""
    (?P<coeff>\d+(?:/\d+)?)?          # optional integer or a/b coefficient
    (?P<star>\*)?
    (?P<var>[A-Za-z_][A-Za-z_0-9]*)?  # variable name
    (?:\^(?P<power>\d+))?
    $""",
    re.VERBOSE,
)


def _format_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_poly(poly: _BasePoly, var: str = "x") -> str:
    """Human form, descending powers: ``x^4 + 24*x^3 + ... + 3024``."""
    if poly.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(poly.degree(), -1, -1):
        c = poly.coefficient(k)
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _format_coeff(mag)
        elif mag == 1:
            body = var if k == 1 else f"{var}^{k}"
        else:
            xpart = var if k == 1 else f"{var}^{k}"
            body = f"{_format_coeff(mag)}*{xpart}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def parse_poly(text: str) -> RatPoly:
    """Parse the human form back into a RatPoly (round-trips format_poly)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    if s == "0":
        return RatPoly.zero()
    s = s.replace("-", "+-").replace(" ", "")
    if s.startswith("+"):
        s = s[1:]
    terms: dict[int, Fraction] = {}
    varname = None
    for raw in s.split("+"):
        if not raw:
            raise ValueError(f"dangling operator in {text!r}")
        sign = 1
        if raw.startswith("-"):
            sign = -1
            raw = raw[1:]
        m = _TERM_RE.match(raw)
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise ValueError(f"cannot parse term {raw!r} in {text!r}")
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("var"):
            if varname is None:
                varname = m.group("var")
            elif varname != m.group("var"):
                raise ValueError(f"mixed variables in {text!r}")
            power = int(m.group("power")) if m.group("power") else 1
        else:
            if m.group("power") is not None or m.group("star"):
                raise ValueError(f"cannot parse term {raw!r} in {text!r}")
            power = 0
        terms[power] = terms.get(power, Fraction(0)) + sign * coeff
    size = max(terms) + 1
    coeffs = [Fraction(0)] * size
    for k, c in terms.items():
        coeffs[k] = c
    return RatPoly(coeffs)


def parse_int_poly(text: str) -> IntPoly:
    """Parse the human form, requiring integer coefficients."""
    return parse_poly(text).to_int_checked()


def coeff_strings(poly: _BasePoly) -> list[str]:
    """Machine form: ascending coefficient strings, exact round-trip."""
    return [_format_coeff(c) for c in poly.coeffs]


def int_poly_from_strings(strings: Iterable[str]) -> IntPoly:
    return IntPoly(tuple(int(s) for s in strings))


def rat_poly_from_strings(strings: Iterable[str]) -> RatPoly:
    return RatPoly(tuple(Fraction(s) for s in strings))
