from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from vectop.arith import QQ, PrimeField
from vectop.errors import DimensionError, ModelMismatchError, ZeroDivisorError
from vectop.fields import model_create
from vectop.linalg import (
    Subspace, left_kernel, rank, rref, subspace_contains, subspace_equal,
    subspace_from_generators, subspace_intersect, subspace_sum,
)

from conftest import generator_sets

K = model_create("arch", minpoly=[-2, 0, 1], interval=(1, 2))
A = K.gen


def kernel_intersection(s1, s2):
    """Independent route: (c1, c2) with c1 B1 + c2 B2 = 0 gives c1 B1 in the meet."""
    if s1.is_zero() or s2.is_zero():
        return Subspace.zero(s1.field, s1.n)
    ker = left_kernel(list(s1.basis) + list(s2.basis), s1.n, s1.field)
    r1 = s1.dim
    gens = []
    for c in ker.basis:
        gens.append([sum((ci * row[j] for ci, row in zip(c[:r1], s1.basis)), s1.field.zero)
                     for j in range(s1.n)])
    return Subspace.from_generators(s1.field, s1.n, gens)


def test_rref_examples():
    assert rref([[2, 4]], 2, QQ) == ([(1, 2)], (0,))
    rows, piv = rref([[1, A], [A, 2]], 2, K)
    assert rows == [(K(1), A)] and piv == (0,)
    assert rref([[0, 0], [0, 0]], 2, QQ) == ([], ())


def test_rref_rejects_ragged():
    with pytest.raises(DimensionError):
        rref([[1, 2], [3]], 2, QQ)


def test_subspace_from_generators_examples():
    s = subspace_from_generators(K, 2, [[2, 2 * A]])
    assert s.basis == ((K(1), A),)
    s = subspace_from_generators(QQ, 3, [[1, 0, 0], [0, 0, 1], [1, 0, 1]])
    assert s.basis == ((1, 0, 0), (0, 0, 1)) and s.pivots == (0, 2)
    assert subspace_from_generators(K, 2, []).is_zero()


def test_sum_and_intersection_examples():
    l1 = subspace_from_generators(K, 2, [[1, A]])
    l2 = subspace_from_generators(K, 2, [[1, -A]])
    assert subspace_sum(l1, l2) == Subspace.full(K, 2)
    assert subspace_intersect(l1, l2) == Subspace.zero(K, 2)
    assert l1 & l1 == l1 and l1 + l1 == l1


def test_containment_examples():
    l1 = subspace_from_generators(K, 2, [[1, A]])
    l2 = subspace_from_generators(K, 2, [[1, -A]])
    assert subspace_contains(l1, Subspace.zero(K, 2))
    assert subspace_contains(subspace_from_generators(K, 2, [[1, A], [0, 1]]), l1)
    assert not subspace_contains(l2, l1)
    assert subspace_equal(l1, subspace_from_generators(K, 2, [[A, 2]]))


def test_left_kernel_examples():
    assert left_kernel([[1, 0], [0, 1]], 2, QQ).is_zero()
    assert left_kernel([[1], [1]], 1, QQ) == subspace_from_generators(QQ, 2, [[1, -1]])
    assert left_kernel([[0, 0], [0, 0]], 2, QQ) == Subspace.full(QQ, 2)
    assert left_kernel([[], []], 0, QQ) == Subspace.full(QQ, 2)


def test_mismatches_raise():
    with pytest.raises(DimensionError):
        Subspace.zero(QQ, 2) + Subspace.zero(QQ, 3)
    with pytest.raises(ModelMismatchError):
        Subspace.zero(QQ, 2) & Subspace.zero(PrimeField(3), 2)


def test_zero_divisor_propagates_from_rref():
    k = model_create("arch", minpoly=[3, -4, 1], interval=(2, 4))
    with pytest.raises(ZeroDivisorError):
        rref([[k.gen - 1, 1]], 2, k)


def test_prime_field_rref():
    gf5 = PrimeField(5)
    rows, piv = rref([[2, 4, 1], [1, 2, 4]], 3, gf5)
    assert piv == (0, 2)
    assert rows[0] == (gf5(1), gf5(2), gf5(0))


gens4 = st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n), generator_sets(K, n), generator_sets(K, n), generator_sets(K, n)))


@settings(max_examples=80, deadline=None)
@given(gens4)
def test_lattice_laws(data):
    n, g1, g2, g3 = data
    s1, s2, s3 = (Subspace.from_generators(K, n, g) for g in (g1, g2, g3))
    assert s1 + s2 == s2 + s1 and s1 & s2 == s2 & s1
    assert (s1 + s2) + s3 == s1 + (s2 + s3)
    assert (s1 & s2) & s3 == s1 & (s2 & s3)
    assert s1 + (s1 & s2) == s1 and s1 & (s1 + s2) == s1
    assert s1 + s1 == s1 and s1 & s1 == s1
    assert s1.dim + s2.dim == (s1 + s2).dim + (s1 & s2).dim
    assert s1 & s2 == kernel_intersection(s1, s2)
    lo = s1 & s3  # lo is contained in s3
    assert lo + (s2 & s3) == (lo + s2) & s3


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), generator_sets(K, n))),
       st.randoms(use_true_random=False))
def test_canonical_form_is_deterministic(data, rnd):
    n, gens = data
    s = Subspace.from_generators(K, n, gens)
    shuffled = [list(g) for g in gens]
    rnd.shuffle(shuffled)
    scaled = [[x * (k + 1) * (1 + A) for x in g] for k, g in enumerate(shuffled)]
    assert Subspace.from_generators(K, n, scaled) == s
    for row, p in zip(s.basis, s.pivots):
        assert row[p] == 1
        assert all(not other[p] for other in s.basis if other is not row)
    assert list(s.pivots) == sorted(set(s.pivots))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 4).flatmap(lambda c: st.tuples(st.just(c), generator_sets(K, c, 5))))
def test_rank_nullity(data):
    c, rows = data
    assert rank(rows, c, K) == len(rows) - left_kernel(rows, c, K).dim
    ker = left_kernel(rows, c, K)
    for v in ker.basis:
        for j in range(c):
            assert sum((vi * r[j] for vi, r in zip(v, rows)), K.zero) == 0
