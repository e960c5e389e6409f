"""Exact coefficient rings for Laurent polynomial computations.

Four families of coefficient rings are supported, described by a RingSpec:

* ``Z``       -- arbitrary precision integers (Python int)
* ``Q``       -- rationals (fractions.Fraction)
* ``Fp(p)``   -- the prime field Z/p, elements stored as ints in [0, p)
* ``Cyc(q)``  -- the cyclotomic ring Z[zeta_q] or field Q(zeta_q), elements
                 stored as coefficient vectors of length phi(q) in the power
                 basis 1, zeta, ..., zeta^(phi(q)-1), reduced mod Phi_q

All arithmetic is exact.  Elements are plain ints, Fractions, or CycScalar
instances; the RingSpec carries the operations so that polynomial code can
stay generic.
"""

from fractions import Fraction

__all__ = [
    "RingSpec",
    "CycScalar",
    "ZZ",
    "QQ",
    "Fp",
    "cyclotomic_ring",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "coercion",
]


def _poly_divmod_int(num, den):
    """Divide integer coefficient lists (ascending), den monic. Returns (q, r)."""
    num = list(num)
    dn = len(den) - 1
    if dn < 0 or den[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * max(0, len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            q[k - dn] = c
            for i, d in enumerate(den):
                num[k - dn + i] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


_cyclo_cache = {}


def cyclotomic_polynomial(q):
    """Coefficient list (ascending) of the q-th cyclotomic polynomial Phi_q.

    >>> cyclotomic_polynomial(1)
    [-1, 1]
    >>> cyclotomic_polynomial(6)
    [1, -1, 1]
    >>> cyclotomic_polynomial(12)
    [1, 0, -1, 0, 1]
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    if q in _cyclo_cache:
        return list(_cyclo_cache[q])
    # (t^q - 1) divided by the product of Phi_d over proper divisors d of q.
    num = [0] * (q + 1)
    num[0], num[q] = -1, 1
    for d in range(1, q):
        if q % d == 0:
            num, rem = _poly_divmod_int(num, cyclotomic_polynomial(d))
            if rem:
                raise AssertionError("cyclotomic division must be exact")
    _cyclo_cache[q] = list(num)
    return num


def _euler_phi(q):
    n, result, p = q, q, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


_power_table_cache = {}


def _power_table(q):
    """zeta_q^m in the power basis, m = 0 .. max(2*phi(q), q-1)."""
    if q in _power_table_cache:
        return _power_table_cache[q]
    phi = _euler_phi(q)
    mod = cyclotomic_polynomial(q)
    table = []
    cur = [1]
    for _ in range(max(2 * phi + 1, q)):
        row = list(cur) + [0] * (phi - len(cur))
        table.append(tuple(row[:phi]))
        cur = [0] + cur
        _, cur = _poly_divmod_int(cur, mod)
    _power_table_cache[q] = tuple(table)
    return _power_table_cache[q]


class CycScalar:
    """An element of Z[zeta_q] or Q(zeta_q) in the power basis mod Phi_q."""

    __slots__ = ("q", "coeffs")

    def __init__(self, q, coeffs):
        phi = _euler_phi(q)
        coeffs = tuple(coeffs)
        if len(coeffs) != phi:
            raise ValueError("coefficient vector must have length phi(q)=%d" % phi)
        self.q = q
        self.coeffs = coeffs

    @classmethod
    def from_int(cls, q, n):
        phi = _euler_phi(q)
        return cls(q, (n,) + (0,) * (phi - 1))

    @classmethod
    def root_power(cls, q, m):
        """zeta_q^m as a CycScalar (m may be any integer)."""
        return cls(q, _power_table(q)[m % q])

    def __add__(self, other):
        return CycScalar(self.q, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return CycScalar(self.q, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycScalar(self.q, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        phi = len(a)
        prod = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        table = _power_table(self.q)
        out = [0] * phi
        for k, c in enumerate(prod):
            if c:
                if k < phi:
                    out[k] += c
                else:
                    for idx, t in enumerate(table[k]):
                        if t:
                            out[idx] += c * t
        return CycScalar(self.q, tuple(out))

    def scale(self, c):
        return CycScalar(self.q, tuple(a * c for a in self.coeffs))

    def is_zero(self):
        return all(a == 0 for a in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.q == other.q and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.q,) + tuple(Fraction(a) for a in self.coeffs))

    def conjugate(self, j):
        """Apply the Galois map zeta -> zeta^j (gcd(j, q) must be 1)."""
        import math

        if math.gcd(j, self.q) > 1:
            raise ValueError("j must be coprime to q")
        table = _power_table(self.q)
        phi = len(self.coeffs)
        out = [0] * phi
        for i, a in enumerate(self.coeffs):
            if a:
                for idx, t in enumerate(table[(i * j) % self.q]):
                    if t:
                        out[idx] += a * t
        return CycScalar(self.q, tuple(out))

    def norm(self):
        """Field norm down to the base ring (an int or Fraction)."""
        import math

        prod = CycScalar.from_int(self.q, 1)
        for j in range(1, self.q + 1):
            if math.gcd(j, self.q) == 1:
                prod = prod * self.conjugate(j)
        if any(c != 0 for c in prod.coeffs[1:]):
            raise AssertionError("norm must land in the base ring")
        return prod.coeffs[0]

    def content(self):
        """gcd of the integer coordinates (integral elements only)."""
        import math

        g = 0
        for c in self.coeffs:
            g = math.gcd(g, int(c))
        return g

    def __repr__(self):
        return "CycScalar(q=%d, %r)" % (self.q, list(self.coeffs))

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                z = "z" if i == 1 else "z^%d" % i
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append("-" + z)
                else:
                    parts.append("%s*%s" % (c, z))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


class RingSpec:
    """Description of a coefficient ring, carrying its exact operations."""

    __slots__ = ("kind", "p", "q", "base")

    def __init__(self, kind, p=None, q=None, base=None):
        self.kind = kind
        self.p = p
        self.q = q
        self.base = base

    def __eq__(self, other):
        if not isinstance(other, RingSpec):
            return NotImplemented
        return (self.kind, self.p, self.q, self.base) == (other.kind, other.p, other.q, other.base)

    def __hash__(self):
        return hash((self.kind, self.p, self.q, self.base))

    def __repr__(self):
        if self.kind == "Fp":
            return "Fp(%d)" % self.p
        if self.kind == "Cyc":
            return "Cyc(%d, base=%s)" % (self.q, self.base)
        return self.kind

    @property
    def is_field(self):
        return self.kind in ("Q", "Fp") or (self.kind == "Cyc" and self.base == "Q")

    # -- element constructors ------------------------------------------------

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        if self.kind == "Z":
            return int(n)
        if self.kind == "Q":
            return Fraction(n)
        if self.kind == "Fp":
            return n % self.p
        if self.kind == "Cyc":
            n = Fraction(n) if self.base == "Q" else int(n)
            return CycScalar.from_int(self.q, n)
        raise AssertionError(self.kind)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        if self.kind == "Fp":
            return (a + b) % self.p
        return a + b

    def sub(self, a, b):
        if self.kind == "Fp":
            return (a - b) % self.p
        return a - b

    def mul(self, a, b):
        if self.kind == "Fp":
            return (a * b) % self.p
        return a * b

    def neg(self, a):
        if self.kind == "Fp":
            return (-a) % self.p
        return -a

    def is_zero(self, a):
        if self.kind == "Cyc":
            return a.is_zero()
        return a == 0

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))

    def inv(self, a):
        """Multiplicative inverse, or None when a is not invertible."""
        if self.is_zero(a):
            return None
        if self.kind == "Q":
            return 1 / a
        if self.kind == "Fp":
            return pow(a, self.p - 2, self.p)
        if self.kind == "Z":
            return a if a in (1, -1) else None
        if self.kind == "Cyc":
            inv = _cyc_inverse(a)
            if inv is None:
                return None
            if self.base == "Q":
                return CycScalar(a.q, tuple(Fraction(c) for c in inv.coeffs))
            if all(Fraction(c).denominator == 1 for c in inv.coeffs):
                return CycScalar(a.q, tuple(int(c) for c in inv.coeffs))
            return None
        raise AssertionError(self.kind)

    def is_unit(self, a):
        return self.inv(a) is not None

    def divexact(self, a, b):
        """a / b when the quotient lies in the ring, else None."""
        if self.is_zero(b):
            return None
        if self.kind == "Z":
            if a % b == 0:
                return a // b
            return None
        if self.kind in ("Q", "Fp"):
            return self.mul(a, self.inv(b))
        if self.kind == "Cyc":
            inv = _cyc_inverse(b)
            if inv is None:
                return None
            quo = a * CycScalar(b.q, tuple(inv.coeffs))
            if self.base == "Q":
                return CycScalar(quo.q, tuple(Fraction(c) for c in quo.coeffs))
            coeffs = [Fraction(c) for c in quo.coeffs]
            if all(c.denominator == 1 for c in coeffs):
                return CycScalar(quo.q, tuple(int(c) for c in coeffs))
            return None
        raise AssertionError(self.kind)

    # -- units and normalization ----------------------------------------------

    def torsion_units(self):
        """The finite unit set used for canonical associates.

        For Z this is {1, -1}; for Cyc it is {+-zeta^j} (the torsion part of
        the unit group).  Fields normalize to monic instead and do not use it.
        """
        if self.kind == "Z":
            return [1, -1]
        if self.kind == "Cyc":
            out = []
            seen = set()
            for sign in (1, -1):
                for j in range(self.q):
                    u = CycScalar.root_power(self.q, j)
                    if sign < 0:
                        u = -u
                    if self.base == "Q":
                        u = CycScalar(u.q, tuple(Fraction(c) for c in u.coeffs))
                    key = u.coeffs
                    if key not in seen:
                        seen.add(key)
                        out.append(u)
            return out
        raise ValueError("torsion_units only for Z and Cyc")

    def canonical_unit(self, a):
        """Unit u such that u*a is the canonical associate of a.

        Over fields this makes a equal to 1 (so polynomials become monic).
        Over Z it makes a positive.  Over integral Cyc it picks, among the
        multiples of a by +-zeta^j, the one with lexicographically least
        coefficient vector.
        """
        if self.is_zero(a):
            return self.one()
        if self.kind in ("Q", "Fp") or (self.kind == "Cyc" and self.base == "Q"):
            return self.inv(a)
        if self.kind == "Z":
            return 1 if a > 0 else -1
        if self.kind == "Cyc":
            best_u, best_key = None, None
            for u in self.torsion_units():
                key = tuple((u * a).coeffs)
                if best_key is None or key < best_key:
                    best_key, best_u = key, u
            return best_u
        raise AssertionError(self.kind)

    def coeff_str(self, a):
        if self.kind == "Cyc":
            return "(%s)" % str(a)
        return str(a)


def _cyc_inverse(a):
    """Inverse of a CycScalar over the fraction field, or None if a == 0.

    Returned coefficients are Fractions; callers check integrality as needed.
    """
    q = a.q
    mod = [Fraction(c) for c in cyclotomic_polynomial(q)]
    f = [Fraction(c) for c in a.coeffs]
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return None
    # Extended Euclid in Q[x]: s*f + t*mod = gcd
    r0, r1 = mod, f
    s0, s1 = [Fraction(0)], [Fraction(1)]

    def polymul(u, v):
        out = [Fraction(0)] * (len(u) + len(v) - 1) if u and v else []
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    out[i + j] += ui * vj
        return out

    def polysub(u, v):
        out = list(u) + [Fraction(0)] * (len(v) - len(u))
        for i, vi in enumerate(v):
            out[i] -= vi
        while out and out[-1] == 0:
            out.pop()
        return out

    def polydivmod(u, v):
        u = list(u)
        quo = [Fraction(0)] * max(0, len(u) - len(v) + 1)
        inv_lead = 1 / v[-1]
        for k in range(len(u) - 1, len(v) - 2, -1):
            c = u[k] * inv_lead
            if c:
                quo[k - len(v) + 1] = c
                for i, vi in enumerate(v):
                    u[k - len(v) + 1 + i] -= c * vi
        while u and u[-1] == 0:
            u.pop()
        return quo, u

    while r1:
        quo, rem = polydivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, polysub(s0, polymul(quo, s1))
    # r0 = gcd (a nonzero constant, since Phi_q is irreducible and f != 0)
    if len(r0) != 1:
        raise AssertionError("gcd with irreducible modulus must be constant")
    c = r0[0]
    phi = len(a.coeffs)
    inv = [x / c for x in s0] + [Fraction(0)] * phi
    _, inv = _poly_divmod_frac(inv, mod)
    inv = inv + [Fraction(0)] * (phi - len(inv))
    return CycScalar(q, tuple(inv[:phi]))


def _poly_divmod_frac(num, den):
    num = list(num)
    dn = len(den) - 1
    quo = [Fraction(0)] * max(0, len(num) - dn)
    inv_lead = 1 / den[-1]
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k] * inv_lead
        if c:
            quo[k - dn] = c
            for i, d in enumerate(den):
                num[k - dn + i] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return quo, num


ZZ = RingSpec("Z")
QQ = RingSpec("Q")


def Fp(p):
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    return RingSpec("Fp", p=p)


def cyclotomic_ring(q):
    """Z[zeta_q]."""
    return RingSpec("Cyc", q=q, base="Z")


def cyclotomic_field(q):
    """Q(zeta_q)."""
    return RingSpec("Cyc", q=q, base="Q")


def coercion(src, dst):
    """A coefficient map src -> dst for the supported embeddings, or None.

    Supported: identity, Z -> Q, Z -> Fp, Z -> Cyc(q, Z/Q), Q -> Cyc(q, Q),
    Cyc(q, Z) -> Cyc(q, Q), and Z/Q reductions composed with those.
    """
    if src == dst:
        return lambda a: a
    if src.kind == "Z":
        if dst.kind == "Q":
            return lambda a: Fraction(a)
        if dst.kind == "Fp":
            return lambda a: a % dst.p
        if dst.kind == "Cyc":
            return lambda a: dst.from_int(a)
    if src.kind == "Q":
        if dst.kind == "Cyc" and dst.base == "Q":
            phi = _euler_phi(dst.q)
            return lambda a: CycScalar(dst.q, (Fraction(a),) + (Fraction(0),) * (phi - 1))
        if dst.kind == "Fp":
            p = dst.p

            def qmap(a):
                if a.denominator % p == 0:
                    raise ZeroDivisionError("denominator not invertible mod %d" % p)
                return a.numerator * pow(a.denominator, p - 2, p) % p

            return qmap
    if src.kind == "Cyc" and dst.kind == "Cyc" and src.q == dst.q:
        if src.base == "Z" and dst.base == "Q":
            return lambda a: CycScalar(a.q, tuple(Fraction(c) for c in a.coeffs))
    return None


if __name__ == "__main__":
    import doctest

    doctest.testmod()
