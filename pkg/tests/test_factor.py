"""Factorization over F_p, Q, and the quadratic cyclotomic fields.

Brute-force reference factorizations over small prime fields pin down the
modular code; reassembly checks (product of factors times unit equals the
input) cover the rational and cyclotomic routes on random inputs.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotperiod.factor import (
    cyc_conjugate_poly,
    divisors_up_to_units,
    factor_mod_p,
    factor_over_cyclotomic,
    factor_over_q,
    is_power_substitution,
    scalar_divisors,
)
from knotperiod.laurent import LaurentPoly, exact_divide, normalize_up_to_unit
from knotperiod.rings import CycScalar, Fp, QQ, ZZ, cyclotomic_field


def zpoly(coeffs, min_exp=0):
    return LaurentPoly.from_int_coeffs(ZZ, coeffs, min_exp)


def reassemble(unit, factors):
    out = unit
    for f, m in factors:
        for _ in range(m):
            out = out * f
    return out


_IRREDUCIBLE_CACHE = {}


def irreducibles_mod_p(p, max_deg):
    """Monic irreducibles over F_p of degree <= max_deg, by trial division."""
    key = (p, max_deg)
    if key in _IRREDUCIBLE_CACHE:
        return _IRREDUCIBLE_CACHE[key]
    ring = Fp(p)
    found = []
    for deg in range(1, max_deg + 1):
        # nonzero constant term only: t itself is a unit in the Laurent ring
        for idx in range(p ** deg):
            if idx % p == 0:
                continue
            coeffs, rem = [], idx
            for _ in range(deg):
                coeffs.append(rem % p)
                rem //= p
            coeffs.append(1)
            m = LaurentPoly(ring, {i: c for i, c in enumerate(coeffs) if c})
            if all(
                exact_divide(m, g) is None
                for g in found
                if 2 * g.max_exp() <= deg
            ):
                found.append(m)
    _IRREDUCIBLE_CACHE[key] = found
    return found


def brute_force_factors_mod_p(poly, p):
    """Irreducible divisors with multiplicity by exhaustive trial division."""
    out = {}
    work = poly.shift(-poly.min_exp())
    for g in irreducibles_mod_p(p, work.max_exp()):
        while True:
            q = exact_divide(work, g)
            if q is None:
                break
            work = q
            key = tuple(sorted(g.terms.items()))
            out[key] = out.get(key, 0) + 1
    assert work.span() == 0
    return out


@given(st.lists(st.integers(0, 4), min_size=2, max_size=5))
@settings(max_examples=40, deadline=None)
def test_factor_mod_p_matches_brute_force(coeffs):
    p = 5
    ring = Fp(p)
    poly = LaurentPoly(ring, {i: c % p for i, c in enumerate(coeffs) if c % p})
    if poly.is_zero() or poly.span() == 0:
        return
    unit, factors = factor_mod_p(poly, p)
    assert reassemble(unit, factors) == poly
    got = {tuple(sorted(f.terms.items())): m for f, m in factors}
    assert got == brute_force_factors_mod_p(poly, p)


def test_factor_mod_p_perfect_power():
    p = 3
    ring = Fp(p)
    # (t + 1)^3 = t^3 + 1 mod 3
    poly = LaurentPoly(ring, {0: 1, 3: 1})
    unit, factors = factor_mod_p(poly, p)
    assert len(factors) == 1
    assert factors[0][1] == 3
    assert reassemble(unit, factors) == poly


def test_factor_mod_p_is_deterministic():
    ring = Fp(13)
    poly = LaurentPoly(ring, {0: 3, 1: 7, 2: 1, 4: 1, 6: 5})
    a = factor_mod_p(poly, 13)
    b = factor_mod_p(poly, 13)
    assert a[0] == b[0]
    assert [(f.terms, m) for f, m in a[1]] == [(f.terms, m) for f, m in b[1]]


def test_factor_over_q_known():
    # t^4 - 1 = (t-1)(t+1)(t^2+1)
    unit, factors = factor_over_q(zpoly([-1, 0, 0, 0, 1]))
    assert sorted(f.to_string() for f, _ in factors) == [
        "-1 + t",
        "1 + t",
        "1 + t^2",
    ]
    assert all(m == 1 for _, m in factors)
    assert reassemble(unit, factors) == zpoly([-1, 0, 0, 0, 1])


def test_factor_over_q_multiplicities_and_content():
    poly = zpoly([2]) * zpoly([1, 1]) ** 2 * zpoly([1, 0, 1])
    unit, factors = factor_over_q(poly)
    assert reassemble(unit, factors) == poly
    by_str = {f.to_string(): m for f, m in factors}
    assert by_str == {"1 + t": 2, "1 + t^2": 1}
    assert unit == zpoly([2])


def test_factor_over_q_cyclotomic_products():
    # t^12 - 1 factors into one irreducible per divisor of 12
    poly = zpoly([-1] + [0] * 11 + [1])
    _, factors = factor_over_q(poly)
    assert len(factors) == 6
    assert sorted(f.max_exp() for f, _ in factors) == [1, 1, 2, 2, 2, 4]


def test_factor_over_q_irreducible_stays_whole():
    # a Laurent shift and a sign flip come out in the unit
    poly = zpoly([3, -9, 11, -9, 3], min_exp=-2)
    unit, factors = factor_over_q(poly)
    assert len(factors) == 1
    assert factors[0][0] == zpoly([3, -9, 11, -9, 3])
    assert reassemble(unit, factors) == poly


def test_factor_over_q_rational_coeffs():
    poly = zpoly([1, 2, 1]).map_coeffs(QQ).scale(Fraction(1, 3))
    unit, factors = factor_over_q(poly)
    assert factors == [(zpoly([1, 1]), 2)]
    assert reassemble(unit, factors) == poly


@given(
    st.lists(st.integers(-5, 5), min_size=1, max_size=5),
    st.lists(st.integers(-5, 5), min_size=1, max_size=5),
)
@settings(max_examples=30, deadline=None)
def test_factor_over_q_roundtrip(a, b):
    poly = zpoly(a) * zpoly(b)
    if poly.is_zero():
        return
    unit, factors = factor_over_q(poly)
    assert reassemble(unit, factors) == poly
    for f, _ in factors:
        assert f.leading() > 0
        assert f.content_int() == 1


@pytest.mark.parametrize("q", [3, 4, 6])
def test_factor_over_cyclotomic_splits_rational_primes(q):
    field = cyclotomic_field(q)
    # t^2 - t + 1 = Phi_6 splits over Q(zeta_6), stays coupled otherwise
    phi6 = zpoly([1, -1, 1])
    unit, factors = factor_over_cyclotomic(phi6, q)
    prod = unit
    for f, m in factors:
        for _ in range(m):
            prod = prod * f
    assert prod == phi6.map_coeffs(field)
    if q in (3, 6):
        # the sixth roots of unity already live in these fields
        assert len(factors) == 2
        assert all(f.max_exp() == 1 for f, _ in factors)
        # the two linear factors are Galois conjugate
        a, b = (f for f, _ in factors)
        assert cyc_conjugate_poly(a, q) == b or cyc_conjugate_poly(b, q) == a
    else:
        assert [f.max_exp() for f, _ in factors] == [2]


def test_factor_over_cyclotomic_with_multiplicity():
    field = cyclotomic_field(3)
    z = CycScalar.root_power(3, 1)
    lin = LaurentPoly(field, {0: field.from_int(1), 1: field.one()})
    lin = LaurentPoly(
        field, {0: CycScalar(3, (Fraction(0), Fraction(1))), 1: field.one()}
    )
    poly = lin * lin * LaurentPoly(field, {0: field.from_int(2), 1: field.one()})
    unit, factors = factor_over_cyclotomic(poly, 3)
    prod = unit
    for f, m in factors:
        for _ in range(m):
            prod = prod * f
    assert prod == poly
    assert sorted(m for _, m in factors) == [1, 2]


def test_divisors_up_to_units():
    poly = zpoly([1, 1]) ** 2 * zpoly([1, -1, 1])
    divs = divisors_up_to_units(poly)
    assert len(divs) == 6
    strs = {normalize_up_to_unit(d).to_string() for d in divs}
    assert "1" in strs
    assert "1 + t" in strs
    with pytest.raises(ValueError):
        divisors_up_to_units(zpoly([1, 1]) ** 30, limit=10)


def test_scalar_divisors_integers():
    assert scalar_divisors(12) == [1, 2, 3, 4, 6, 12]
    assert scalar_divisors(-7) == [1, 7]
    with pytest.raises(ValueError):
        scalar_divisors(0)


def test_scalar_divisors_eisenstein():
    # 2 is inert in Z[zeta_3]; divisors of 2 are units and 2-associates
    divs = scalar_divisors(CycScalar.from_int(3, 2), q=3)
    norms = sorted(abs(Fraction(d.norm())) for d in divs)
    assert norms == [1, 4]
    # 3 ramifies: (1 - zeta)^2 times a unit
    divs3 = scalar_divisors(CycScalar.from_int(3, 3), q=3)
    norms3 = sorted(abs(Fraction(d.norm())) for d in divs3)
    assert norms3 == [1, 3, 9]


def test_scalar_divisors_gaussian():
    # 5 = (2+i)(2-i) in Z[i]
    divs = scalar_divisors(CycScalar.from_int(4, 5), q=4)
    norms = sorted(abs(Fraction(d.norm())) for d in divs)
    assert norms == [1, 5, 5, 25]


def test_is_power_substitution():
    p = zpoly([1, 0, 0, 2, 0, 0, 1])
    assert is_power_substitution(p, 3).to_string() == "1 + 2*t + t^2"
    assert is_power_substitution(p, 2) is None
    shifted = p.shift(-3)
    assert is_power_substitution(shifted, 3) is not None
    assert is_power_substitution(LaurentPoly.zero(ZZ), 5).is_zero()
