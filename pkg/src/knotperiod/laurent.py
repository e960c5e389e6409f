"""Laurent polynomials in one and two variables over exact coefficient rings.

A LaurentPoly is a finite map exponent -> coefficient over a RingSpec ring;
a BiLaurentPoly maps (exponent_t, exponent_s) pairs.  Zero coefficients are
never stored.  The unit-normal form used throughout for comparing invariants
up to units lives here as ``normalize_up_to_unit``.
"""

from fractions import Fraction

from .rings import CycScalar, RingSpec, ZZ, QQ, coercion

__all__ = [
    "LaurentPoly",
    "BiLaurentPoly",
    "normalize_up_to_unit",
    "exact_divide",
    "cyc_eval",
    "laurent_gcd",
]


class LaurentPoly:
    """A Laurent polynomial sum of c_e * t^e with exact coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        clean = {}
        if terms:
            for e, c in terms.items():
                if not ring.is_zero(c):
                    clean[int(e)] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def one(cls, ring):
        return cls(ring, {0: ring.one()})

    @classmethod
    def t_power(cls, ring, e, coeff=None):
        return cls(ring, {e: ring.one() if coeff is None else coeff})

    @classmethod
    def from_int_coeffs(cls, ring, coeffs, min_exp=0):
        """Build from an ascending list of small integers."""
        return cls(ring, {min_exp + i: ring.from_int(c) for i, c in enumerate(coeffs) if c})

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {0: c})

    # -- basic queries ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def min_exp(self):
        return min(self.terms) if self.terms else 0

    def max_exp(self):
        return max(self.terms) if self.terms else 0

    def span(self):
        """max_exp - min_exp, the exponent breadth (0 for constants and 0)."""
        return self.max_exp() - self.min_exp() if self.terms else 0

    def coeff(self, e):
        return self.terms.get(e, self.ring.zero())

    def leading(self):
        """Coefficient of the highest power."""
        if not self.terms:
            return self.ring.zero()
        return self.terms[self.max_exp()]

    def trailing(self):
        if not self.terms:
            return self.ring.zero()
        return self.terms[self.min_exp()]

    def is_unit_monomial(self):
        """True when the polynomial is u * t^k with u a unit."""
        return len(self.terms) == 1 and self.ring.is_unit(self.leading())

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.ring != other.ring or set(self.terms) != set(other.terms):
            return False
        return all(self.ring.eq(c, other.terms[e]) for e, c in self.terms.items())

    def __hash__(self):
        return hash((self.ring, frozenset((e, _hashable(c)) for e, c in self.terms.items())))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        ring = self.ring
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = ring.add(out.get(e, ring.zero()), c)
            if ring.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(ring, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        ring = self.ring
        return LaurentPoly(ring, {e: ring.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        ring = self.ring
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                prod = ring.mul(c1, c2)
                if e in out:
                    s = ring.add(out[e], prod)
                    if ring.is_zero(s):
                        del out[e]
                    else:
                        out[e] = s
                elif not ring.is_zero(prod):
                    out[e] = prod
        return LaurentPoly(ring, out)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers only for unit monomials")
        result = LaurentPoly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        ring = self.ring
        return LaurentPoly(ring, {e: ring.mul(co, c) for e, co in self.terms.items()})

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPoly(self.ring, {e + k: c for e, c in self.terms.items()})

    def mirror(self):
        """Substitute t -> 1/t."""
        return LaurentPoly(self.ring, {-e: c for e, c in self.terms.items()})

    def subs_power(self, k):
        """Substitute t -> t^k for a nonzero integer k."""
        if k == 0:
            raise ValueError("k must be nonzero")
        return LaurentPoly(self.ring, {e * k: c for e, c in self.terms.items()})

    def derivative(self):
        ring = self.ring
        out = {}
        for e, c in self.terms.items():
            if e != 0:
                d = ring.mul(c, ring.from_int(e))
                if not ring.is_zero(d):
                    out[e - 1] = d
        return LaurentPoly(ring, out)

    def eval_scalar(self, x, ring=None):
        """Evaluate at a ring element x (which must be a unit if min_exp < 0)."""
        ring = ring or self.ring
        lo = self.min_exp()
        if lo < 0:
            xin = ring.inv(x)
            if xin is None:
                raise ValueError("evaluation point must be a unit for Laurent terms")
        acc = ring.zero()
        # Horner on the shifted polynomial, then multiply by x^lo.
        for e in range(self.max_exp(), lo - 1, -1):
            acc = ring.add(ring.mul(acc, x), self.coeff(e))
        if lo > 0:
            for _ in range(lo):
                acc = ring.mul(acc, x)
        elif lo < 0:
            for _ in range(-lo):
                acc = ring.mul(acc, xin)
        return acc

    def map_coeffs(self, dst_ring, fn=None):
        """Apply a coefficient map (default: the canonical coercion)."""
        if fn is None:
            fn = coercion(self.ring, dst_ring)
            if fn is None:
                raise ValueError("no coercion from %r to %r" % (self.ring, dst_ring))
        return LaurentPoly(dst_ring, {e: fn(c) for e, c in self.terms.items()})

    def content_int(self):
        """gcd of integer coefficients (ring Z only)."""
        import math

        if self.ring.kind != "Z":
            raise ValueError("content is defined over Z")
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def primitive_part(self):
        g = self.content_int()
        if g in (0, 1):
            return self
        return LaurentPoly(self.ring, {e: c // g for e, c in self.terms.items()})

    # -- display ----------------------------------------------------------

    def to_string(self):
        """Canonical text form: terms in ascending exponent order.

        >>> LaurentPoly.from_int_coeffs(ZZ, [1, -1, 1]).to_string()
        '1 - t + t^2'
        """
        if not self.terms:
            return "0"
        ring = self.ring
        parts = []
        for e in sorted(self.terms):
            cs = ring.coeff_str(self.terms[e])
            if e == 0:
                parts.append(cs)
                continue
            t = "t" if e == 1 else "t^%d" % e
            if cs == "1":
                parts.append(t)
            elif cs == "-1":
                parts.append("-" + t)
            else:
                parts.append("%s*%s" % (cs, t))
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return "<LaurentPoly %s over %r>" % (self.to_string(), self.ring)


def _hashable(c):
    if isinstance(c, CycScalar):
        return (c.q,) + tuple(c.coeffs)
    return c


def normalize_up_to_unit(poly):
    """Canonical representative of poly up to multiplication by units u*t^k.

    The minimum exponent is shifted to 0.  Over Z the top coefficient is made
    positive; over the fields Q, F_p, Q(zeta) the polynomial is made monic;
    over Z[zeta] the top coefficient becomes its canonical associate under
    multiplication by +-zeta^j (lexicographically least coefficient vector).

    >>> p = LaurentPoly.from_int_coeffs(ZZ, [-1, 1, -1], min_exp=-3)
    >>> normalize_up_to_unit(p).to_string()
    '1 - t + t^2'
    """
    if poly.is_zero():
        return poly
    shifted = poly.shift(-poly.min_exp())
    u = poly.ring.canonical_unit(shifted.leading())
    return shifted.scale(u)


def exact_divide(num, den):
    """num / den when den divides num exactly in ring[t, 1/t]; None otherwise.

    Works over any of the supported rings; over Z the division fails unless
    every intermediate coefficient quotient is integral.
    """
    if den.is_zero():
        return None
    if num.is_zero():
        return LaurentPoly.zero(num.ring)
    ring = num.ring
    shift = num.min_exp() - den.min_exp()
    n = dict(num.shift(-num.min_exp()).terms)
    d = den.shift(-den.min_exp()).terms
    d_deg = max(d)
    d_lead = d[d_deg]
    out = {}
    while n:
        n_deg = max(n)
        if n_deg < d_deg:
            return None
        c = ring.divexact(n[n_deg], d_lead)
        if c is None:
            return None
        e = n_deg - d_deg
        out[e] = c
        for de, dc in d.items():
            k = e + de
            v = ring.sub(n.get(k, ring.zero()), ring.mul(c, dc))
            if ring.is_zero(v):
                n.pop(k, None)
            else:
                n[k] = v
    return LaurentPoly(ring, out).shift(shift)


def laurent_gcd(a, b):
    """Monic gcd over a coefficient field (Euclidean algorithm)."""
    if not a.ring.is_field:
        raise ValueError("gcd requires a field coefficient ring")
    ring = a.ring
    f = a.shift(-a.min_exp()) if not a.is_zero() else a
    g = b.shift(-b.min_exp()) if not b.is_zero() else b
    while not g.is_zero():
        f, g = g, _poly_mod(f, g)
    if f.is_zero():
        return f
    return normalize_up_to_unit(f)


def _poly_mod(f, g):
    """Remainder of f by g over a field (both with min_exp >= 0)."""
    ring = f.ring
    r = dict(f.terms)
    g_deg = g.max_exp()
    g_lead_inv = ring.inv(g.leading())
    while r:
        r_deg = max(r)
        if r_deg < g_deg:
            break
        c = ring.mul(r[r_deg], g_lead_inv)
        e = r_deg - g_deg
        for ge, gc in g.terms.items():
            k = e + ge
            v = ring.sub(r.get(k, ring.zero()), ring.mul(c, gc))
            if ring.is_zero(v):
                r.pop(k, None)
            else:
                r[k] = v
    return LaurentPoly(ring, r)


def cyc_eval(poly, q, power=1):
    """Evaluate a Laurent polynomial over Z or Q at t = zeta_q^power.

    Returns a CycScalar over the matching base ring.

    >>> p = LaurentPoly.from_int_coeffs(ZZ, [1, 1])   # 1 + t
    >>> str(cyc_eval(p, 6))                            # 1 + zeta_6
    'z'
    """
    if poly.ring.kind not in ("Z", "Q"):
        raise ValueError("cyc_eval expects coefficients in Z or Q")
    base_q = poly.ring.kind == "Q"
    ring = RingSpec("Cyc", q=q, base="Q" if base_q else "Z")
    acc = ring.zero()
    for e, c in poly.terms.items():
        term = CycScalar.root_power(q, (e * power) % q)
        if base_q:
            term = CycScalar(q, tuple(Fraction(x) for x in term.coeffs))
        acc = ring.add(acc, term.scale(c))
    return acc


class BiLaurentPoly:
    """A Laurent polynomial in two variables t, s over an exact ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        clean = {}
        if terms:
            for (et, es), c in terms.items():
                if not ring.is_zero(c):
                    clean[(int(et), int(es))] = c
        self.terms = clean

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def one(cls, ring):
        return cls(ring, {(0, 0): ring.one()})

    @classmethod
    def monomial(cls, ring, et, es, coeff=None):
        return cls(ring, {(et, es): ring.one() if coeff is None else coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        if self.ring != other.ring or set(self.terms) != set(other.terms):
            return False
        return all(self.ring.eq(c, other.terms[k]) for k, c in self.terms.items())

    def __add__(self, other):
        ring = self.ring
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = ring.add(out.get(k, ring.zero()), c)
            if ring.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return BiLaurentPoly(ring, out)

    def __neg__(self):
        ring = self.ring
        return BiLaurentPoly(ring, {k: ring.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        ring = self.ring
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                prod = ring.mul(c1, c2)
                if k in out:
                    s = ring.add(out[k], prod)
                    if ring.is_zero(s):
                        del out[k]
                    else:
                        out[k] = s
                elif not ring.is_zero(prod):
                    out[k] = prod
        return BiLaurentPoly(ring, out)

    def s_degrees(self):
        return (min(es for _, es in self.terms), max(es for _, es in self.terms))

    def eval_s_one(self):
        """Set s = 1, returning a LaurentPoly in t."""
        ring = self.ring
        out = {}
        for (et, _), c in self.terms.items():
            s = ring.add(out.get(et, ring.zero()), c)
            if ring.is_zero(s):
                out.pop(et, None)
            else:
                out[et] = s
        return LaurentPoly(ring, out)

    def eval_s_root_of_unity(self, q, power):
        """Set s = zeta_q^power, returning a LaurentPoly over Cyclotomic(q)."""
        if self.ring.kind not in ("Z", "Q"):
            raise ValueError("root-of-unity evaluation expects Z or Q coefficients")
        base = "Q" if self.ring.kind == "Q" else "Z"
        ring = RingSpec("Cyc", q=q, base=base)
        out = LaurentPoly.zero(ring)
        for (et, es), c in self.terms.items():
            z = CycScalar.root_power(q, (es * power) % q)
            if base == "Q":
                z = CycScalar(q, tuple(Fraction(x) for x in z.coeffs))
            out = out + LaurentPoly(ring, {et: z.scale(c)})
        return out

    def divide_by_one_minus_s(self, n=1):
        """Exact division by (1 - s)^n, or None when not divisible.

        Dividing by (1 - s) sends sum f_j s^j to the prefix sums g_j =
        f_0 + ... + f_j; the division is exact precisely when the total sum
        vanishes (equivalently, the polynomial vanishes at s = 1).
        """
        ring = self.ring
        cur = self
        for _ in range(n):
            if cur.is_zero():
                return cur
            s_lo = min(es for _, es in cur.terms)
            rows = {}
            for (et, es), c in cur.terms.items():
                rows.setdefault(es - s_lo, {})[et] = c
            s_hi = max(rows)
            out = {}
            run = {}
            for j in range(s_hi + 1):
                for et, c in rows.get(j, {}).items():
                    v = ring.add(run.get(et, ring.zero()), c)
                    if ring.is_zero(v):
                        run.pop(et, None)
                    else:
                        run[et] = v
                if j < s_hi:
                    for et, c in run.items():
                        out[(et, j + s_lo)] = c
            if run:
                return None
            cur = BiLaurentPoly(ring, out)
        return cur

    def to_string(self):
        if not self.terms:
            return "0"
        ring = self.ring
        parts = []
        for (et, es) in sorted(self.terms):
            cs = ring.coeff_str(self.terms[(et, es)])
            factors = []
            if et:
                factors.append("t" if et == 1 else "t^%d" % et)
            if es:
                factors.append("s" if es == 1 else "s^%d" % es)
            if not factors:
                parts.append(cs)
                continue
            body = "*".join(factors)
            if cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (cs, body))
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return "<BiLaurentPoly %s over %r>" % (self.to_string(), self.ring)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
