from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vectop.arith import (
    QQ, PrimeField, Poly, count_real_roots, is_prime, is_squarefree, poly_gcd, poly_xgcd,
)

from conftest import small_rats


def test_rational_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    r = Fraction(-2, -4)
    assert (r.numerator, r.denominator) == (1, 2)
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 2) / 0


def test_poly_examples():
    x = Poly.x()
    assert (x - 1) * (x + 1) == Poly([-1, 0, 1])
    q, r = divmod(Poly([-2, 0, 1]), Poly([-1, 1]))
    assert q == Poly([1, 1]) and r == Poly([-1])
    f = Poly([3, 0, 5])
    assert f + Poly() == f
    with pytest.raises(ZeroDivisionError):
        divmod(f, Poly())


def test_gcd_examples():
    assert poly_gcd(Poly([-2, 0, 1]), Poly([-1, 1])) == Poly([1])
    assert poly_gcd(Poly([-1, 0, 1]), Poly([-1, 1])) == Poly([-1, 1])
    assert poly_gcd(Poly([-2, 0, 1]), Poly([0, 2])) == Poly([1])
    with pytest.raises(ValueError):
        poly_gcd(Poly(), Poly())


def test_squarefree_examples():
    assert is_squarefree(Poly([-2, 0, 1]))
    assert not is_squarefree(Poly([1, -2, 1]))
    assert is_squarefree(Poly([1, 0, 1]))
    with pytest.raises(ValueError):
        is_squarefree(Poly([3]))


def test_primality():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2 ** 31 - 1)
    with pytest.raises(ValueError):
        is_prime(2 ** 31)
    with pytest.raises(ValueError):
        PrimeField(9)


def test_sturm_counts():
    x = Poly.x()
    m = x * x - 2
    assert count_real_roots(m, -2, 2) == 2
    assert count_real_roots(m, 0, 3) == 1
    assert count_real_roots(x ** 3 - 2 * x, -2, 2) == 3


@given(small_rats, small_rats, small_rats)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1


gf7 = PrimeField(7)
gf_elems = st.integers(0, 6).map(gf7)


@given(gf_elems, gf_elems, gf_elems)
def test_prime_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == gf7.zero
    if a:
        assert a * a.inverse() == gf7.one
    else:
        with pytest.raises(ZeroDivisionError):
            a.inverse()


polys = st.lists(small_rats, max_size=5).map(Poly)


@given(polys, polys, polys)
def test_poly_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    if f and g:
        assert (f * g).degree == f.degree + g.degree


@given(polys, polys)
def test_divmod_contract(f, g):
    if not g:
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(polys, polys)
def test_gcd_divides_and_is_monic(f, g):
    if not f and not g:
        return
    h, s, t = poly_xgcd(f, g)
    assert h.lc == 1
    assert (f % h).is_zero() and (g % h).is_zero()
    assert s * f + t * g == h


mod_polys = st.lists(gf_elems, max_size=5).map(lambda cs: Poly(cs, gf7))


@given(mod_polys, mod_polys)
def test_gcd_over_prime_field(f, g):
    if not f and not g:
        return
    h = poly_gcd(f, g)
    assert h.lc == gf7.one
    assert (f % h).is_zero() and (g % h).is_zero()


@given(polys)
def test_canonical_idempotence(f):
    assert Poly(f.coeffs) == f
    assert Poly(Poly(f.coeffs).coeffs).coeffs == f.coeffs
    assert f.content_free().content_free() == f.content_free()
