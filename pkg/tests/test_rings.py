"""Ring arithmetic tests: exactness, units, cyclotomic identities."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotperiod.rings import (
    CycScalar,
    Fp,
    QQ,
    ZZ,
    coercion,
    cyclotomic_field,
    cyclotomic_polynomial,
    cyclotomic_ring,
)

SMALL_Q = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 18, 20, 24, 30]


def test_cyclotomic_polynomial_known_values():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]
    # Phi_105 is the first with a coefficient of modulus 2.
    assert 2 in {abs(c) for c in cyclotomic_polynomial(105)}


@pytest.mark.parametrize("q", SMALL_Q)
def test_cyclotomic_product_rebuilds_t_q_minus_one(q):
    # prod over d | q of Phi_d(t) = t^q - 1
    prod = [1]
    for d in range(1, q + 1):
        if q % d == 0:
            phi_d = cyclotomic_polynomial(d)
            out = [0] * (len(prod) + len(phi_d) - 1)
            for i, a in enumerate(prod):
                for j, b in enumerate(phi_d):
                    out[i + j] += a * b
            prod = out
    expect = [0] * (q + 1)
    expect[0], expect[q] = -1, 1
    assert prod == expect


@pytest.mark.parametrize("q", [3, 4, 5, 6, 8, 12])
def test_root_power_order(q):
    z = CycScalar.root_power(q, 1)
    acc = CycScalar.from_int(q, 1)
    for k in range(1, q + 1):
        acc = acc * z
        if k < q:
            assert acc != CycScalar.from_int(q, 1)
    assert acc == CycScalar.from_int(q, 1)


def test_cyc_inverse_of_unit():
    ring = cyclotomic_ring(5)
    z = CycScalar.root_power(5, 2)
    inv = ring.inv(z)
    assert inv is not None
    assert ring.eq(ring.mul(z, inv), ring.one())


def test_cyc_nonunit_has_no_integral_inverse():
    ring = cyclotomic_ring(5)
    two = ring.from_int(2)
    assert ring.inv(two) is None
    # ... though the field version inverts it.
    field = cyclotomic_field(5)
    two_f = field.from_int(2)
    assert field.eq(field.mul(two_f, field.inv(two_f)), field.one())


def test_one_minus_zeta_p_has_norm_p():
    for p in (3, 5, 7, 11):
        a = CycScalar.from_int(p, 1) - CycScalar.root_power(p, 1)
        assert a.norm() == p


def test_galois_conjugate_is_ring_map():
    q = 7
    a = CycScalar(q, (1, 2, 0, -1, 0, 3))
    b = CycScalar(q, (0, 1, 1, 0, -2, 0))
    for j in (2, 3, 5):
        assert (a * b).conjugate(j) == a.conjugate(j) * b.conjugate(j)
        assert (a + b).conjugate(j) == a.conjugate(j) + b.conjugate(j)


def test_norm_is_multiplicative():
    q = 5
    a = CycScalar(q, (2, 1, 0, 0))
    b = CycScalar(q, (1, -1, 1, 0))
    assert (a * b).norm() == a.norm() * b.norm()


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_fp_matches_integer_arithmetic(a, b):
    p = 13
    ring = Fp(p)
    assert ring.add(a % p, b % p) == (a + b) % p
    assert ring.mul(a % p, b % p) == (a * b) % p
    assert ring.sub(a % p, b % p) == (a - b) % p


def test_divexact_over_z():
    assert ZZ.divexact(6, 3) == 2
    assert ZZ.divexact(7, 3) is None
    assert ZZ.divexact(0, 5) == 0
    assert ZZ.divexact(5, 0) is None


def test_canonical_unit_over_z():
    assert ZZ.canonical_unit(-7) == -1
    assert ZZ.canonical_unit(7) == 1
    assert ZZ.mul(ZZ.canonical_unit(-7), -7) == 7


def test_canonical_unit_over_fields_makes_monic():
    assert QQ.mul(QQ.canonical_unit(Fraction(3, 2)), Fraction(3, 2)) == 1
    ring = Fp(11)
    assert ring.mul(ring.canonical_unit(5), 5) == 1


def test_canonical_unit_cyc_idempotent_on_associates():
    # All associates u*a (u a torsion unit) normalize to the same element.
    ring = cyclotomic_ring(5)
    a = CycScalar(5, (1, 2, 0, -1))
    canon = ring.mul(ring.canonical_unit(a), a)
    for u in ring.torsion_units():
        b = u * a
        assert ring.mul(ring.canonical_unit(b), b) == canon


def test_torsion_units_count():
    # Z[zeta_q] has 2q torsion units for odd q (and q for even q since
    # -1 is already a power of zeta).
    assert len(cyclotomic_ring(5).torsion_units()) == 10
    assert len(cyclotomic_ring(8).torsion_units()) == 8


def test_coercion_paths():
    to_q = coercion(ZZ, QQ)
    assert to_q(3) == Fraction(3)
    to_fp = coercion(ZZ, Fp(7))
    assert to_fp(-1) == 6
    to_cyc = coercion(ZZ, cyclotomic_ring(3))
    assert to_cyc(2) == CycScalar.from_int(3, 2)
    lift = coercion(cyclotomic_ring(3), cyclotomic_field(3))
    z = CycScalar.root_power(3, 1)
    assert lift(z).coeffs == (Fraction(0), Fraction(1))
    assert coercion(QQ, ZZ) is None


def test_q_to_fp_rejects_bad_denominator():
    qmap = coercion(QQ, Fp(5))
    assert qmap(Fraction(3, 2)) == (3 * pow(2, 3, 5)) % 5
    with pytest.raises(ZeroDivisionError):
        qmap(Fraction(1, 5))


@given(st.integers(2, 30), st.integers(0, 60))
@settings(max_examples=60)
def test_root_power_reduction(q, m):
    assert CycScalar.root_power(q, m) == CycScalar.root_power(q, m % q)


def test_content_gcd():
    a = CycScalar(5, (6, -9, 0, 3))
    assert a.content() == 3
    assert CycScalar.from_int(5, 0).content() == 0
