"""Core polynomial arithmetic, resultants, discriminants, and text forms."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padegalois.polynomials import (
    IntPoly,
    RatPoly,
    coeff_strings,
    discriminant,
    format_poly,
    int_poly_from_strings,
    int_poly_gcd,
    parse_poly,
    resultant,
)

from .oracles import (
    disc_from_resultant,
    disc_from_roots,
    poly_from_roots,
    sylvester_resultant,
)

small_int = st.integers(min_value=-30, max_value=30)


def int_polys(max_degree=6, coeff=small_int):
    return st.lists(coeff, min_size=0, max_size=max_degree + 1).map(
        lambda cs: IntPoly(tuple(cs))
    )


class TestBasics:
    def test_zero_degree_sentinel(self):
        assert IntPoly.zero().degree() == -1
        assert IntPoly.zero().is_zero()
        assert IntPoly((0, 0, 0)).is_zero()

    def test_strip_trailing_zeros(self):
        assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)

    def test_eq_is_type_sensitive(self):
        assert IntPoly((1, 1)) != RatPoly((Fraction(1), Fraction(1)))
        assert IntPoly((1, 1)).to_rat() == RatPoly((Fraction(1), Fraction(1)))

    def test_arith(self):
        f = IntPoly((1, 2, 1))  # (x+1)^2
        g = IntPoly((1, 1))
        assert g * g == f
        assert f - g * g == IntPoly.zero()
        assert g**2 == f
        assert f.derivative() == IntPoly((2, 2))

    def test_evaluate(self):
        f = IntPoly((3, 0, 1))
        assert f.evaluate(2) == 7
        assert f.evaluate(Fraction(1, 2)) == Fraction(13, 4)

    def test_shift_argument(self):
        f = IntPoly((0, 0, 1))  # x^2
        assert f.shift_argument(1) == IntPoly((1, 2, 1))  # (x+1)^2
        g = IntPoly((5, -3, 2, 7))
        a = 4
        shifted = g.shift_argument(a)
        for x in range(-3, 4):
            assert shifted.evaluate(x) == g.evaluate(x + a)

    def test_content_primitive(self):
        c, p, s = IntPoly((-6, -9)).content_primitive()
        assert (c, p, s) == (3, IntPoly((2, 3)), -1)
        assert IntPoly.zero().content_primitive() == (0, IntPoly.zero(), 1)

    def test_divmod_exact(self):
        f = IntPoly((-1, 0, 1))
        g = IntPoly((1, 1))
        assert f.exact_div(g) == IntPoly((-1, 1))
        assert g.divides(f)
        assert not IntPoly((2, 1)).divides(f)

    def test_even_odd_parts(self):
        f = IntPoly((1, 0, -3, 0, 2))
        assert f.is_even_polynomial()
        assert f.even_part_compressed() == IntPoly((1, -3, 2))
        assert IntPoly((0, 1, 0, 5)).is_odd_polynomial()


class TestRatPoly:
    def test_divmod(self):
        x = RatPoly.monomial(1)
        x2 = RatPoly.monomial(2)
        q, r = divmod(x, x2)
        assert q.is_zero() and r == x

    def test_gcd_monic(self):
        f = RatPoly.from_int((-1, 0, 1))  # x^2-1
        g = RatPoly.from_int((1, 1)) * Fraction(7, 3)
        assert f.gcd(g) == RatPoly.from_int((1, 1))

    def test_clear_denominators(self):
        p = RatPoly((Fraction(1, 6), Fraction(1, 4)))
        den, ip = p.clear_denominators()
        assert den == 12 and ip == IntPoly((2, 3))

    def test_truncate(self):
        p = RatPoly.from_int((1, 2, 3, 4))
        assert p.truncate(2) == RatPoly.from_int((1, 2))


class TestResultant:
    def test_known_small(self):
        assert resultant(IntPoly((-1, 1)), IntPoly((1, 1))) == 2
        assert resultant(IntPoly((2, 2, 1)), IntPoly((2, 2))) == 4

    def test_multiplicative(self):
        f = IntPoly((1, 3, 1))
        g = IntPoly((-2, 0, 1))
        h = IntPoly((4, 1))
        assert resultant(f * g, h) == resultant(f, h) * resultant(g, h)

    def test_disc_known(self):
        # x^2 + 1 -> -4 ; x^2 - 1 -> 4 ; x^3 - x -> 4 ; x^3 + x + 1 -> -31
        assert discriminant(IntPoly((1, 0, 1))) == -4
        assert discriminant(IntPoly((-1, 0, 1))) == 4
        assert discriminant(IntPoly((0, -1, 0, 1))) == 4
        assert discriminant(IntPoly((1, 1, 0, 1))) == -31

    def test_disc_degree_one(self):
        assert discriminant(IntPoly((5, 3))) == 1

    def test_disc_from_roots(self):
        roots = [0, 1, -2, 5]
        f = poly_from_roots(roots)
        assert discriminant(f) == disc_from_roots(roots)

    @given(int_polys(max_degree=5), int_polys(max_degree=5))
    def test_resultant_vs_sylvester(self, a, b):
        if a.degree() < 1 or b.degree() < 1:
            return
        assert resultant(a, b) == sylvester_resultant(a, b)

    @given(int_polys(max_degree=6))
    def test_disc_vs_oracle(self, f):
        if f.degree() < 2:
            return
        assert discriminant(f) == disc_from_resultant(f)


class TestGcd:
    def test_common_factor(self):
        f = IntPoly((1, 1)) * IntPoly((3, 2)) * 4
        g = IntPoly((1, 1)) * IntPoly((-5, 1)) * 6
        assert int_poly_gcd(f, g) == IntPoly((2, 2))

    @given(int_polys(max_degree=4), int_polys(max_degree=3), int_polys(max_degree=3))
    def test_gcd_divides(self, h, a, b):
        f, g = h * a, h * b
        if f.is_zero() and g.is_zero():
            return
        d = int_poly_gcd(f, g)
        for p in (f, g):
            if not p.is_zero():
                assert d.divides(p)
        if h.degree() >= 1:
            assert d.degree() >= h.degree()


class TestTextFormats:
    def test_format_descending(self):
        f = IntPoly((3024, 1344, 252, 24, 1))
        assert format_poly(f) == "x^4 + 24*x^3 + 252*x^2 + 1344*x + 3024"

    def test_format_negative_and_fraction(self):
        f = RatPoly((Fraction(-1, 2), Fraction(0), Fraction(1)))
        assert format_poly(f) == "x^2 - 1/2"
        assert format_poly(IntPoly.zero()) == "0"
        assert format_poly(IntPoly((0, -1))) == "-x"

    def test_parse_round_trip(self):
        for f in (
            IntPoly((3024, 1344, 252, 24, 1)),
            IntPoly((0, -1)),
            IntPoly((7,)),
            IntPoly.zero(),
            IntPoly((-15120, 8400, -2100, 300, -25, 1)),
        ):
            assert parse_poly(format_poly(f)) == f.to_rat()

    def test_parse_rejects_garbage(self):
        for bad in ("x + y", "2**x", "x^", "^3", "1 +", "x^2 x"):
            with pytest.raises(ValueError):
                parse_poly(bad)

    def test_coeff_strings_round_trip(self):
        f = IntPoly((-15120, 8400, -2100, 300, -25, 1))
        assert int_poly_from_strings(coeff_strings(f)) == f

    @given(int_polys(max_degree=7, coeff=st.integers(-10**6, 10**6)))
    def test_format_parse_round_trip(self, f):
        assert parse_poly(format_poly(f)) == f.to_rat()
