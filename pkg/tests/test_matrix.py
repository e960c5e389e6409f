"""Determinant backends, Smith forms, and minor gcd content."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotperiod.laurent import LaurentPoly
from knotperiod.matrix import (
    BAREISS_CUTOFF,
    det_int,
    det_poly,
    minors_gcd_content,
    smith_normal_form,
    snf_poly_field,
)
from knotperiod.rings import Fp, QQ, ZZ


def zpoly(coeffs, min_exp=0):
    return LaurentPoly.from_int_coeffs(ZZ, coeffs, min_exp)


def brute_det(rows, ring):
    """Leibniz expansion; only usable for tiny matrices."""
    from itertools import permutations

    n = len(rows)
    acc = LaurentPoly.zero(ring)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = LaurentPoly.one(ring)
        for i in range(n):
            term = term * rows[i][perm[i]]
        acc = acc + (term if sign > 0 else -term)
    return acc


small_entries = st.lists(st.integers(-4, 4), min_size=1, max_size=3)


@st.composite
def poly_matrices(draw, nmin=1, nmax=4):
    n = draw(st.integers(nmin, nmax))
    return [
        [zpoly(draw(small_entries), draw(st.integers(-1, 1))) for _ in range(n)]
        for _ in range(n)
    ]


@given(poly_matrices())
@settings(max_examples=40, deadline=None)
def test_det_poly_matches_leibniz(rows):
    assert det_poly(rows) == brute_det(rows, ZZ)


def test_det_poly_identity_and_zero():
    ident = [[LaurentPoly.one(ZZ) if i == j else LaurentPoly.zero(ZZ) for j in range(3)] for i in range(3)]
    assert det_poly(ident) == LaurentPoly.one(ZZ)
    ident[1] = list(ident[0])
    assert det_poly(ident).is_zero()


def test_det_poly_large_uses_modular_route():
    # build a matrix above the Bareiss cutoff with a known determinant:
    # upper triangular with (1 + t) on the diagonal.
    n = BAREISS_CUTOFF + 3
    rng = random.Random(5)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(zpoly([1, 1]))
            elif j > i:
                row.append(zpoly([rng.randrange(-3, 4)]))
            else:
                row.append(LaurentPoly.zero(ZZ))
        rows.append(row)
    assert det_poly(rows) == zpoly([1, 1]) ** n


def test_det_poly_modular_matches_bareiss_dense():
    rng = random.Random(11)
    n = BAREISS_CUTOFF + 2
    rows = [
        [zpoly([rng.randrange(-2, 3) for _ in range(2)], rng.randrange(-1, 2)) for _ in range(n)]
        for _ in range(n)
    ]
    from knotperiod.matrix import _det_bareiss

    assert det_poly(rows) == _det_bareiss([list(r) for r in rows], n, ZZ)


def test_det_int_small_and_large():
    assert det_int([[2, 0], [0, 3]]) == 6
    assert det_int([[1, 2], [3, 4]]) == -2
    assert det_int([]) == 1
    rng = random.Random(3)
    n = 18
    rows = [[rng.randrange(-50, 51) for _ in range(n)] for _ in range(n)]
    # compare against fraction-free Bareiss on scalars via poly wrapper
    prows = [[zpoly([v]) for v in row] for row in rows]
    from knotperiod.matrix import _det_bareiss

    expect = _det_bareiss(prows, n, ZZ)
    got = det_int(rows)
    assert zpoly([got]) == expect


def test_det_poly_negative_exponents():
    rows = [
        [zpoly([1], -2), zpoly([1])],
        [zpoly([1]), zpoly([1], 2)],
    ]
    assert det_poly(rows).is_zero()
    rows[1][1] = zpoly([2], 2)
    assert det_poly(rows) == zpoly([1])


def test_smith_normal_form_known():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]
    # trefoil presentation matrix for H_1 of the double branched cover
    assert smith_normal_form([[3]]) == [3]


def test_smith_normal_form_rectangular():
    assert smith_normal_form([[1, 0, 0], [0, 2, 0]]) == [1, 2]
    assert smith_normal_form([[1], [1]]) == [1]


@given(
    st.lists(
        st.lists(st.integers(-9, 9), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
@settings(max_examples=40, deadline=None)
def test_smith_divisibility_chain(rows):
    diag = smith_normal_form(rows)
    nonzero = [d for d in diag if d]
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    # product of invariant factors = |det| for square matrices
    prod = 1
    for d in diag:
        prod *= d
    det = det_int(rows)
    assert prod == abs(det)


def test_snf_poly_field_diagonalizes():
    t = LaurentPoly.from_int_coeffs(QQ, [0, 1])
    one = LaurentPoly.one(QQ)
    tm1 = LaurentPoly.from_int_coeffs(QQ, [-1, 1])
    rows = [[tm1, one - one], [one - one, tm1 * tm1]]
    factors = snf_poly_field(rows, QQ)
    assert factors[0] == tm1
    assert factors[1] == tm1 * tm1
    assert snf_poly_field([[t, t], [t, t]], QQ)[1].is_zero()


def test_snf_poly_field_requires_field():
    with pytest.raises(ValueError):
        snf_poly_field([[zpoly([1])]], ZZ)


def test_snf_poly_field_offdiagonal_mix():
    one = LaurentPoly.one(QQ)
    zero = LaurentPoly.zero(QQ)
    tm1 = LaurentPoly.from_int_coeffs(QQ, [-1, 1])
    tp1 = LaurentPoly.from_int_coeffs(QQ, [1, 1])
    rows = [[zero, tm1], [tp1, one]]
    factors = snf_poly_field(rows, QQ)
    assert factors[0] == one
    # det = -(t-1)(t+1), so the second factor is (t-1)(t+1) normalized monic
    assert factors[1] == tm1 * tp1


def test_minors_gcd_content():
    two = zpoly([2])
    zero = LaurentPoly.zero(ZZ)
    rows = [[two, zero], [zero, two], [two, two]]
    assert minors_gcd_content(rows, 2) == 4
    rows.append([zpoly([1]), zero])
    assert minors_gcd_content(rows, 2) == 2
    # early exit path: a unit minor
    rows.append([zpoly([1]), zpoly([1])])
    rows.append([zero, zpoly([1])])
    assert minors_gcd_content(rows, 2) == 1


def test_fp_determinant():
    ring = Fp(7)
    rows = [
        [LaurentPoly(ring, {0: 3}), LaurentPoly(ring, {1: 1})],
        [LaurentPoly(ring, {0: 1}), LaurentPoly(ring, {0: 5})],
    ]
    # det = 15 - t = 1 - t mod 7
    assert det_poly(rows) == LaurentPoly(ring, {0: 1, 1: 6})
