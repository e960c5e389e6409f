"""Free words, group ring arithmetic, and the Fox derivative identities."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotperiod.words import (
    FreeWord,
    GroupRingElement,
    Presentation,
    fox_derivative,
    fox_matrix,
)

NGEN = 3

letters = st.integers(-NGEN, NGEN).filter(lambda k: k != 0)
words = st.lists(letters, min_size=0, max_size=8).map(FreeWord)


def test_free_reduction():
    assert FreeWord([1, -1]).is_identity()
    assert FreeWord([1, 2, -2, -1]).is_identity()
    assert FreeWord([1, 2, -2, 3]).letters == (1, 3)
    with pytest.raises(ValueError):
        FreeWord([0])


@given(words, words)
@settings(max_examples=60)
def test_inverse_cancels(u, v):
    assert (u * u.inverse()).is_identity()
    assert (u * v).inverse() == v.inverse() * u.inverse()


def test_exponent_sum():
    w = FreeWord([1, 1, -2, 3])
    assert w.exponent_sum([(1,), (1,), (1,)]) == (2,)
    assert w.exponent_sum([(1, 0), (0, 1), (1, 1)]) == (3, 0)


def test_group_ring_basics():
    x = GroupRingElement.of_word(FreeWord([1]))
    y = GroupRingElement.of_word(FreeWord([2]))
    e = GroupRingElement.of_word(FreeWord())
    assert (x - x).is_zero()
    assert x * y == GroupRingElement.of_word(FreeWord([1, 2]))
    # (x + 1)(x - 1) = x^2 - 1
    assert (x + e) * (x - e) == GroupRingElement.of_word(FreeWord([1, 1])) - e


def test_fox_derivative_base_cases():
    x = FreeWord([1])
    assert fox_derivative(x, 0) == GroupRingElement.of_word(FreeWord())
    assert fox_derivative(x, 1).is_zero()
    assert fox_derivative(x.inverse(), 0) == GroupRingElement.of_word(
        x.inverse(), -1
    )
    assert fox_derivative(FreeWord(), 0).is_zero()


@given(words, words, st.integers(0, NGEN - 1))
@settings(max_examples=100)
def test_fox_product_rule(u, v, j):
    du = fox_derivative(u, j)
    dv = fox_derivative(v, j)
    left = fox_derivative(u * v, j)
    right = du + GroupRingElement.of_word(u) * dv
    assert left == right


@given(words, st.integers(0, NGEN - 1))
@settings(max_examples=60)
def test_fox_inverse_rule(w, j):
    # d(w^-1) = -w^-1 * dw
    lhs = fox_derivative(w.inverse(), j)
    rhs = -(GroupRingElement.of_word(w.inverse()) * fox_derivative(w, j))
    assert lhs == rhs


@given(words)
@settings(max_examples=60)
def test_fundamental_fox_identity(w):
    # sum_j (dw/dx_j) * (x_j - 1) = w - 1 in the group ring
    e = GroupRingElement.of_word(FreeWord())
    total = GroupRingElement.zero()
    for j in range(NGEN):
        xj = GroupRingElement.of_word(FreeWord([j + 1]))
        total = total + fox_derivative(w, j) * (xj - e)
    assert total == GroupRingElement.of_word(w) - e


def test_presentation_validation():
    r = FreeWord([1, 2, -1, -2])
    p = Presentation(2, [r])
    assert p.deficiency_ok()
    assert p.num_variables == 1
    with pytest.raises(ValueError):
        Presentation(1, [FreeWord([2])])
    with pytest.raises(ValueError):
        Presentation(2, [], weights=[(1,)])
    with pytest.raises(ValueError):
        Presentation(2, [], weights=[(1,), (1, 0)])


def test_fox_matrix_shape():
    x, y = FreeWord([1]), FreeWord([2])
    r = x * y * x * (y * x * y).inverse()
    p = Presentation(2, [r])
    fm = fox_matrix(p)
    assert len(fm) == 1 and len(fm[0]) == 2
    # trefoil relator: d/dx = 1 + xy*(yxy)^-1 terms; spot check nonzero
    assert not fm[0][0].is_zero()
    assert not fm[0][1].is_zero()
