"""Twisted Alexander invariants via Fox calculus.

Given a deficiency-one presentation with abelianization weights and a matrix
representation of its group, each group element g maps to rho(g) times the
deck monomial t^eps(g).  Applying this to the Fox matrix with one generator
column deleted gives the numerator determinant; dividing by the determinant
of I - rho*(x_j) for the deleted generator and multiplying by the gcd of the
maximal minors of the stacked meridian blocks yields the polynomial itself.

The two-variable variant keeps a second deck variable s for a second link
component (an encircling axis whose representation images are trivial) and
divides by (1 - s)^dim instead.
"""

import math
from fractions import Fraction

from .laurent import (
    BiLaurentPoly,
    LaurentPoly,
    exact_divide,
    normalize_up_to_unit,
)
from .matrix import det_poly, minors_gcd_content, snf_poly_field
from .reps import trivial_representation
from .rings import QQ, ZZ
from .words import fox_matrix


def twist_substitute(elem, rep, weights, bivariate=False):
    """Image of a group-ring element as a dim x dim matrix of polynomials."""
    d = rep.dim
    ring = rep.ring
    cells = [[{} for _ in range(d)] for _ in range(d)]
    for word, c in elem.terms.items():
        m = rep.image_of_word(word)
        es = word.exponent_sum(weights)
        key = (es[0], es[1]) if bivariate else es[0]
        cc = ring.from_int(c)
        for i in range(d):
            row = m[i]
            for j in range(d):
                v = ring.mul(cc, row[j])
                if ring.is_zero(v):
                    continue
                cell = cells[i][j]
                s = ring.add(cell.get(key, ring.zero()), v)
                if ring.is_zero(s):
                    cell.pop(key, None)
                else:
                    cell[key] = s
    make = BiLaurentPoly if bivariate else LaurentPoly
    return [[make(ring, cells[i][j]) for j in range(d)] for i in range(d)]


def meridian_block(presentation, rep, j, bivariate=False):
    """The block I - rho*(x_j) for generator j."""
    d = rep.dim
    ring = rep.ring
    es = presentation.weights[j]
    key = (es[0], es[1]) if bivariate else es[0]
    m = rep.images[j]
    make = BiLaurentPoly if bivariate else LaurentPoly
    zero_key = (0, 0) if bivariate else 0
    out = []
    for i in range(d):
        row = []
        for k in range(d):
            terms = {}
            if i == k:
                terms[zero_key] = ring.one()
            v = ring.neg(m[i][k])
            if not ring.is_zero(v):
                s = ring.add(terms.get(key, ring.zero()), v)
                if ring.is_zero(s):
                    terms.pop(key, None)
                else:
                    terms[key] = s
            row.append(make(ring, terms))
        out.append(row)
    return out


def twisted_fox_blocks(presentation, rep, delete, bivariate=False):
    """Rows of the twisted Fox matrix with one generator column removed."""
    fm = fox_matrix(presentation)
    d = rep.dim
    cols = [j for j in range(presentation.num_generators) if j != delete]
    rows = []
    for fox_row in fm:
        blocks = [
            twist_substitute(fox_row[j], rep, presentation.weights, bivariate)
            for j in cols
        ]
        for i in range(d):
            flat = []
            for blk in blocks:
                flat.extend(blk[i])
            rows.append(flat)
    return rows


def delta0(presentation, rep):
    """gcd of the dim x dim minors of the stacked blocks I - rho*(x_j).

    Over Z this is assembled from the monic gcd over Q (via invariant
    factors) and the gcd of the integer contents of the minors; over a field
    it is the product of the invariant factors directly.
    """
    ring = rep.ring
    d = rep.dim
    stacked = []
    for j in range(presentation.num_generators):
        stacked.extend(meridian_block(presentation, rep, j))
    if ring.kind == "Z":
        qrows = [[e.map_coeffs(QQ) for e in row] for row in stacked]
        factors = snf_poly_field(qrows, QQ)
        if len(factors) < d or any(f.is_zero() for f in factors):
            return LaurentPoly.zero(ZZ)
        prod = LaurentPoly.one(QQ)
        for f in factors:
            prod = prod * f
        den = 1
        for c in prod.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        primitive = LaurentPoly(
            ZZ, {e: int(c * den) for e, c in prod.terms.items()}
        ).primitive_part()
        content = minors_gcd_content(stacked, d)
        result = primitive.scale(content)
        return normalize_up_to_unit(result)
    if ring.is_field:
        factors = snf_poly_field(stacked, ring)
        if len(factors) < d or any(f.is_zero() for f in factors):
            return LaurentPoly.zero(ring)
        prod = LaurentPoly.one(ring)
        for f in factors:
            prod = prod * f
        return normalize_up_to_unit(prod)
    raise ValueError("delta0 needs Z or field coefficients, not %r" % (ring,))


def wada_pair(presentation, rep, delete=None):
    """Numerator and denominator determinants of the Wada quotient.

    Returns (num, den, j) for the first generator j (or the requested one)
    whose meridian block has nonzero determinant.
    """
    g = presentation.num_generators
    d = rep.dim
    expected = (g - 1) * d
    candidates = [delete] if delete is not None else list(range(g))
    for j in candidates:
        den = det_poly(meridian_block(presentation, rep, j), rep.ring)
        if den.is_zero():
            continue
        rows = twisted_fox_blocks(presentation, rep, j)
        if len(rows) != expected or any(len(r) != expected for r in rows):
            raise ValueError(
                "presentation must have deficiency one (%d relators for %d generators)"
                % (len(presentation.relators), g)
            )
        if expected == 0:
            num = LaurentPoly.one(rep.ring)
        else:
            num = det_poly(rows, rep.ring)
        return num, den, j
    raise ValueError("every twisted meridian determinant vanishes")


def twisted_alexander(presentation, rep, ring=None, delete=None):
    """The twisted Alexander polynomial, in unit-normal form.

    When ring is given the representation is coerced there first.
    """
    if ring is not None and ring != rep.ring:
        rep = rep.change_ring(ring)
    num, den, _ = wada_pair(presentation, rep, delete)
    d0 = delta0(presentation, rep)
    if d0.is_zero():
        raise ValueError("the degree-zero divisor vanishes; invariant undefined")
    q = exact_divide(num * d0, den)
    if q is None:
        raise ArithmeticError("meridian determinant must divide the numerator")
    return normalize_up_to_unit(q)


def classical_alexander(diagram):
    """Alexander polynomial of a diagram (trivial one-dimensional twist).

    >>> from .diagrams import braid_closure_diagram
    >>> d, _ = braid_closure_diagram([1, 1, 1])
    >>> classical_alexander(d).to_string()
    '1 - t + t^2'
    """
    from .diagrams import wirtinger_presentation

    pres = wirtinger_presentation(diagram)
    rep = trivial_representation(pres.num_generators)
    return twisted_alexander(pres, rep)


def axis_determinant(rep, axis_word, lam):
    """det(I - rho(A) t^lam) for a group element A given as a word."""
    if lam <= 0:
        raise ValueError("the axis weight must be positive")
    m = rep.image_of_word(axis_word)
    ring = rep.ring
    d = rep.dim
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            terms = {}
            if i == j:
                terms[0] = ring.one()
            v = ring.neg(m[i][j])
            if not ring.is_zero(v):
                terms[lam] = v
            row.append(LaurentPoly(ring, terms))
        rows.append(row)
    return det_poly(rows, ring)


def classical_axis_factor(lam, ring=ZZ):
    """(1 - t^lam) / (1 - t), the untwisted axis determinant contribution."""
    return LaurentPoly(ring, {e: ring.one() for e in range(lam)})


def two_variable_invariant(presentation, rep, axis_generator):
    """The two-variable Wada invariant of a link with a distinguished axis.

    The axis generator must carry weight (0, 1) and map to the identity;
    the determinant of the Fox matrix without its column is then divisible
    by (1 - s)^dim, and the quotient G(t, s) is returned.
    """
    if presentation.num_variables != 2:
        raise ValueError("need a two-variable presentation")
    if tuple(presentation.weights[axis_generator]) != (0, 1):
        raise ValueError("the deleted generator must be an axis meridian")
    from .reps import identity_matrix, mat_eq

    img = [list(row) for row in rep.images[axis_generator]]
    if not mat_eq(rep.ring, img, identity_matrix(rep.ring, rep.dim)):
        raise ValueError("axis meridians must act trivially")
    rows = twisted_fox_blocks(presentation, rep, axis_generator, bivariate=True)
    if not rows:
        raise ValueError("empty twisted matrix")
    det = _det_bilaurent(rows, rep.ring)
    g = det.divide_by_one_minus_s(rep.dim)
    if g is None:
        raise ArithmeticError("determinant must vanish to order dim at s = 1")
    return g


def _det_bilaurent(rows, ring):
    """Determinant of a square BiLaurentPoly matrix by interpolation in s."""
    if ring.kind not in ("Z", "Q"):
        raise ValueError("two-variable determinants need Z or Q coefficients")
    n = len(rows)
    s_shift = 0
    shifted = []
    for row in rows:
        lo = 0
        for e in row:
            if e.terms:
                lo = min(lo, min(es for _, es in e.terms))
        if lo:
            s_shift += lo
            row = [
                BiLaurentPoly(ring, {(et, es - lo): c for (et, es), c in e.terms.items()})
                for e in row
            ]
        shifted.append(list(row))
    s_deg = 0
    for row in shifted:
        hi = 0
        for e in row:
            if e.terms:
                hi = max(hi, max(es for _, es in e.terms))
        s_deg += hi
    values = []
    for x in range(s_deg + 1):
        single = []
        for row in shifted:
            srow = []
            for e in row:
                terms = {}
                for (et, es), c in e.terms.items():
                    v = ring.add(
                        terms.get(et, ring.zero()),
                        ring.mul(c, ring.from_int(x ** es)),
                    )
                    if ring.is_zero(v):
                        terms.pop(et, None)
                    else:
                        terms[et] = v
                srow.append(LaurentPoly(ring, terms))
            single.append(srow)
        values.append(det_poly(single, ring))
    t_exps = sorted({e for v in values for e in v.terms})
    out = {}
    for et in t_exps:
        pts = [v.coeff(et) for v in values]
        if ring.kind == "Z":
            pts = [Fraction(p) for p in pts]
        coeffs = _newton_coefficients(pts)
        for es, c in enumerate(coeffs):
            if c == 0:
                continue
            if ring.kind == "Z":
                if c.denominator != 1:
                    raise AssertionError("interpolated determinant must be integral")
                out[(et, es + s_shift)] = int(c)
            else:
                out[(et, es + s_shift)] = c
    return BiLaurentPoly(ring, out)


def _newton_coefficients(values):
    """Coefficients of the interpolating polynomial through (i, values[i])."""
    n = len(values)
    dd = list(values)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / level
    coeffs = [values[0] * 0] * n
    basis = [values[0] * 0 + 1]
    for i in range(n):
        for d, b in enumerate(basis):
            coeffs[d] = coeffs[d] + dd[i] * b
        new_basis = [values[0] * 0] * (len(basis) + 1)
        for d, b in enumerate(basis):
            new_basis[d + 1] = new_basis[d + 1] + b
            new_basis[d] = new_basis[d] - b * i
        basis = new_basis
    return coeffs


if __name__ == "__main__":
    import doctest

    doctest.testmod()
