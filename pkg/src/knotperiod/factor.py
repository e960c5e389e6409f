"""Exact polynomial factorization for the rings the obstruction tests need.

Factorization over F_p uses distinct-degree splitting followed by
Cantor-Zassenhaus equal-degree splitting with a generator seeded from the
input, so results are deterministic.  Factorization over Q runs Yun's
squarefree decomposition, factors each part modulo a good prime, lifts the
modular factors with a Hensel tree, and recombines subsets under the
Mignotte bound.  Quadratic cyclotomic fields (orders 3, 4, 6) are handled by
the norm construction: factor the norm of a shifted polynomial over Q and
pull every factor back with a gcd.

Dense integer coefficient lists (ascending degree) are used internally;
the public API speaks LaurentPoly.
"""

import hashlib
import math
import random
from fractions import Fraction

from .laurent import LaurentPoly, laurent_gcd, normalize_up_to_unit
from .rings import CycScalar, ZZ, cyclotomic_field, cyclotomic_ring

__all__ = [
    "factor_mod_p",
    "factor_over_q",
    "factor_over_cyclotomic",
    "divisors_up_to_units",
    "scalar_divisors",
    "cyc_conjugate_poly",
    "is_power_substitution",
]


# -- dense helpers over Z and Q ------------------------------------------------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _scale(a, c):
    return _trim([x * c for x in a])


def _deriv(a):
    return _trim([i * a[i] for i in range(1, len(a))])


def _content(a):
    g = 0
    for x in a:
        g = math.gcd(g, x if isinstance(x, int) else 0)
    return g


def _primitive(a):
    g = _content(a)
    if g > 1:
        a = [x // g for x in a]
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _divmod_q(a, b):
    """Division with remainder over Q (inputs int or Fraction lists)."""
    r = _trim([Fraction(x) for x in a])
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    inv = Fraction(1) / Fraction(b[-1])
    while len(r) >= len(b):
        c = r[-1] * inv
        d = len(r) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            r[d + i] -= c * Fraction(y)
        _trim(r)
    return _trim(q), r


def _divexact_z(a, b):
    """a // b when b divides a over Z, else None."""
    q, r = _divmod_q(a, b)
    if _trim(list(r)):
        return None
    out = []
    for c in q:
        if c.denominator != 1:
            return None
        out.append(int(c))
    return _trim(out)


def _gcd_z(a, b):
    """Primitive gcd of integer polynomials via rational Euclid."""
    a, b = list(a), list(b)
    while _trim(b):
        _, r = _divmod_q(a, b)
        a, b = b, [Fraction(x) for x in r]
        # renormalize to integers to keep sizes sane
        if b:
            den = 1
            for x in b:
                den = den * x.denominator // math.gcd(den, x.denominator)
            b = [int(x * den) for x in b]
            b = _primitive(_trim(b))
    return _primitive([int(x) for x in a]) if a else []


def _squarefree_z(f):
    """Yun decomposition of a primitive integer polynomial: [(g, mult)]."""
    out = []
    d = _gcd_z(f, _deriv(f))
    e = _divexact_z(f, d)
    i = 1
    while len(e) > 1:
        y = _gcd_z(e, d)
        a = _divexact_z(e, y)
        if len(a) > 1:
            out.append((a, i))
        e = y
        d = _divexact_z(d, y)
        i += 1
    return out


# -- arithmetic mod p ----------------------------------------------------------


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pdivmod(a, b, p):
    r = [x % p for x in a]
    _trim(r)
    q = [0] * max(len(r) - len(b) + 1, 0)
    inv = pow(b[-1], p - 2, p)
    while len(r) >= len(b):
        c = r[-1] * inv % p
        d = len(r) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            r[d + i] = (r[d + i] - c * y) % p
        _trim(r)
    return _trim(q), r


def _pgcd(a, b, p):
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b:
        _, r = _pdivmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _pmonic(a, p):
    a = _trim([x % p for x in a])
    if a and a[-1] != 1:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _factor_squarefree_mod_p(f, p, rng):
    """Irreducible monic factors of a squarefree monic polynomial mod p."""
    factors = []
    # distinct-degree
    stages = []
    h = [0, 1]  # x
    v = list(f)
    d = 0
    while len(v) - 1 > 0:
        d += 1
        if 2 * d > len(v) - 1:
            stages.append((v, len(v) - 1))
            break
        h = _ppowmod(h, p, v, p)
        g = _pgcd(_sub(h, [0, 1]), v, p)
        if len(g) > 1:
            stages.append((g, d))
            v = _pdivmod(v, g, p)[0]
            h = _pdivmod(h, v, p)[1]
    for g, d in stages:
        factors.extend(_equal_degree_split(g, d, p, rng))
    return sorted(factors)


def _equal_degree_split(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    if p == 2:
        raise ValueError("equal-degree splitting requires an odd prime")
    while True:
        r = [rng.randrange(p) for _ in range(n)] + [1]
        g = _pgcd(f, r, p)
        if 1 < len(g) < len(f):
            break
        w = _ppowmod(r, (p ** d - 1) // 2, f, p)
        g = _pgcd(_sub(w, [1]), f, p)
        if 1 < len(g) < len(f):
            break
    left = _equal_degree_split(g, d, p, rng)
    right = _equal_degree_split(_pdivmod(f, g, p)[0], d, p, rng)
    return left + right


def _seed_for(coeffs, p):
    digest = hashlib.sha256(repr((tuple(coeffs), p)).encode()).digest()
    return int.from_bytes(digest[:8], "big")


def factor_mod_p(poly, p):
    """Factor a LaurentPoly over F_p into monic irreducibles.

    Returns (unit, [(factor, multiplicity)]) with unit a monomial times a
    scalar, so that poly equals unit times the product.  Deterministic: the
    equal-degree splitting RNG is seeded from the input.
    """
    ring = poly.ring
    if ring.kind != "Fp" or ring.p != p:
        raise ValueError("polynomial must live over F_p")
    if poly.is_zero():
        raise ValueError("cannot factor zero")
    shift = poly.min_exp()
    f = [poly.coeff(e) % p for e in range(shift, poly.max_exp() + 1)]
    rng = random.Random(_seed_for(f, p))
    lead = f[-1]
    f = _pmonic(f, p)
    # peel squarefree layers: irreducibles of the squarefree part are divided
    # out to their full multiplicity; a vanishing derivative means a perfect
    # p-th power, handled by exponent division
    factorsstore = {}

    def run(g, mult):
        g = _pmonic(g, p)
        if len(g) <= 1:
            return
        dg = _trim([i * g[i] % p for i in range(1, len(g))])
        if not dg:
            root = [g[i] for i in range(0, len(g), p)]
            run(root, mult * p)
            return
        sf = _pdivmod(g, _pgcd(g, dg, p), p)[0]
        rest = g
        for irr in _factor_squarefree_mod_p(_pmonic(sf, p), p, rng):
            count = 0
            while True:
                q, r = _pdivmod(rest, irr, p)
                if r:
                    break
                rest = q
                count += 1
            key = tuple(irr)
            factorsstore[key] = factorsstore.get(key, 0) + count * mult
        if len(rest) > 1:
            run(rest, mult)

    run(f, 1)
    out = []
    for key in sorted(factorsstore):
        fac = LaurentPoly(ring, {i: c for i, c in enumerate(key) if c})
        out.append((fac, factorsstore[key]))
    unit = LaurentPoly(ring, {shift: lead % p})
    return unit, out


# -- Hensel lifting and factorization over Q -----------------------------------


def _hensel_pair(f, g, h, s, t, p, k):
    """Lift f = g h (mod p^k) to mod p^(2k), keeping s g + t h = 1."""
    q = p ** k
    q2 = q * q

    def red(a, m):
        return _trim([x % m for x in a])

    e = _sub(f, _mul(g, h))
    e = red(e, q2)
    gq, gr = _divmod_q_mod(_mul(s, e), h, q2)
    g1 = red(_add(g, _add(_mul(t, e), _mul(gq, g))), q2)
    h1 = red(_add(h, gr), q2)
    b = _sub(_add(_mul(s, g1), _mul(t, h1)), [1])
    b = red(b, q2)
    cq, cr = _divmod_q_mod(_mul(s, b), h1, q2)
    s1 = red(_sub(s, cr), q2)
    t1 = red(_sub(_sub(t, _mul(t, b)), _mul(cq, g1)), q2)
    return g1, h1, s1, t1


def _divmod_q_mod(a, b, m):
    """Division with remainder mod m; b must be monic."""
    r = [x % m for x in a]
    _trim(r)
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = r[-1] % m
        d = len(r) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            r[d + i] = (r[d + i] - c * y) % m
        _trim(r)
    return _trim(q), r


def _hensel_tree(f, mod_factors, p, target_k):
    """Lift the monic factorization of f mod p to mod p^target_k (f monic)."""
    if len(mod_factors) == 1:
        return [_monic_mod(f, p ** target_k)]
    half = len(mod_factors) // 2
    g = [1]
    for fac in mod_factors[:half]:
        g = _pmul(g, fac, p)
    h = [1]
    for fac in mod_factors[half:]:
        h = _pmul(h, fac, p)
    s, t = _bezout_mod_p(g, h, p)
    k = 1
    while k < target_k:
        g, h, s, t = _hensel_pair(f, g, h, s, t, p, k)
        k *= 2
    q = p ** target_k
    g = _trim([x % q for x in g])
    h = _trim([x % q for x in h])
    left = _hensel_tree(g, mod_factors[:half], p, target_k)
    right = _hensel_tree(h, mod_factors[half:], p, target_k)
    return left + right


def _monic_mod(f, m):
    inv = pow(f[-1], -1, m)
    return _trim([x * inv % m for x in f])


def _bezout_mod_p(g, h, p):
    """s, t with s g + t h = 1 mod p for coprime g, h."""
    r0, r1 = list(g), list(h)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _trim([(a - b) % p for a, b in _pairs(s0, _pmul(q, s1, p))])
        t0, t1 = t1, _trim([(a - b) % p for a, b in _pairs(t0, _pmul(q, t1, p))])
    if len(r0) != 1:
        raise ValueError("factors are not coprime mod p")
    inv = pow(r0[0], p - 2, p)
    return [x * inv % p for x in s0], [x * inv % p for x in t0]


def _pairs(a, b):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)


def _symmetric(a, m):
    return [x - m if x > m // 2 else x for x in a]


def _degree_multiset_mod_p(f, p):
    """Degrees of the irreducible factors of monic squarefree f mod p.

    Only the distinct-degree stage is needed: the degree-d slice splits
    into deg/d irreducible pieces.
    """
    degrees = []
    work = list(f)
    x = [0, 1]
    h = x
    d = 0
    while len(work) > 1:
        d += 1
        if 2 * d > len(work) - 1:
            degrees.append(len(work) - 1)
            break
        h = _ppowmod(h, p, work, p)
        g = _pgcd(work, _sub(h, x), p)
        if len(g) > 1:
            degrees.extend([d] * ((len(g) - 1) // d))
            work = _pdivmod(work, g, p)[0]
            if len(h) >= len(work):
                h = _pdivmod(h, work, p)[1]
    return degrees


def _subset_degree_mask(degrees, n):
    """Bitmask of degrees realizable as subset sums of the multiset."""
    mask = 1
    for d in degrees:
        mask |= mask << d
    return mask & ((1 << (n + 1)) - 1)


def _factor_squarefree_z(f):
    """Irreducible factors of a primitive squarefree integer polynomial."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    # sample primes keeping f squarefree with unchanged degree; intersect
    # the modular factor degree patterns to bound the rational divisors
    samples = []
    allowed = (1 << (n + 1)) - 1
    p = 3
    while len(samples) < 6:
        if f[-1] % p:
            fp = _pmonic(f, p)
            if len(fp) == len(f) and len(_pgcd(fp, _deriv(fp), p)) == 1:
                degs = _degree_multiset_mod_p(fp, p)
                samples.append((len(degs), p))
                allowed &= _subset_degree_mask(degs, n)
        p = _next_odd_prime(p)
    if allowed & ~((1 << n) | 1) == 0:
        return [f]
    samples.sort()
    p = samples[0][1]
    rng = random.Random(_seed_for(f, p))
    mod_factors = _factor_squarefree_mod_p(_pmonic(f, p), p, rng)
    if len(mod_factors) == 1:
        return [f]
    # Mignotte-style bound on factor coefficients
    norm2 = math.isqrt(sum(c * c for c in f)) + 1
    bound = (2 ** n) * norm2 * abs(f[-1])
    target_k = 1
    while p ** target_k <= 2 * bound:
        target_k *= 2
    q = p ** target_k
    monic_f = _monic_mod([x % q for x in f], q)
    lifted = _hensel_tree(monic_f, mod_factors, p, target_k)
    # recombine
    result = []
    remaining = list(range(len(lifted)))
    current = list(f)
    size = 1
    from itertools import combinations

    while 2 * size <= len(remaining):
        found = False
        for subset in combinations(remaining, size):
            deg = sum(len(lifted[i]) - 1 for i in subset)
            if not (allowed >> deg) & 1:
                continue
            prod = [current[-1] % q]
            for i in subset:
                prod = _trim([x % q for x in _mul(prod, lifted[i])])
            cand = _primitive(_symmetric(prod, q))
            quo = _divexact_z(current, cand)
            if quo is not None:
                result.append(cand)
                for i in subset:
                    remaining.remove(i)
                current = quo
                found = True
                break
        if not found:
            size += 1
    if len(current) > 1:
        result.append(_primitive(current))
    return result


def _next_odd_prime(p):
    from .matrix import _miller_rabin

    p += 2
    while not _miller_rabin(p):
        p += 2
    return p


def factor_over_q(poly):
    """Factor a LaurentPoly over Z or Q into primitive irreducible integer
    polynomials with positive leading coefficients.

    Returns (unit, [(factor, multiplicity)]) where unit is a LaurentPoly
    over the input ring (a monomial times a scalar) and poly equals
    unit times the product of the factor powers.
    """
    ring = poly.ring
    if ring.kind not in ("Z", "Q"):
        raise ValueError("rational factorization expects Z or Q coefficients")
    if poly.is_zero():
        raise ValueError("cannot factor zero")
    shift = poly.min_exp()
    if ring.kind == "Q":
        den = 1
        for c in poly.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(poly.coeff(e) * den) for e in range(shift, poly.max_exp() + 1)]
    else:
        den = 1
        ints = [poly.coeff(e) for e in range(shift, poly.max_exp() + 1)]
    cont = _content(ints)
    sign = 1 if ints[-1] > 0 else -1
    prim = [x * sign // cont for x in ints]
    factors = []
    for g, mult in _squarefree_z(prim):
        for irr in _factor_squarefree_z(_primitive(g)):
            factors.append((irr, mult))
    factors.sort(key=lambda fm: (len(fm[0]), fm[0]))
    out = []
    for coeffs, mult in factors:
        out.append(
            (LaurentPoly(ZZ, {i: c for i, c in enumerate(coeffs) if c}), mult)
        )
    if ring.kind == "Q":
        unit_scalar = Fraction(sign * cont, den)
    else:
        unit_scalar = sign * cont
    unit = LaurentPoly(ring, {shift: unit_scalar})
    return unit, out


# -- quadratic cyclotomic fields ------------------------------------------------


def factor_over_cyclotomic(poly, q):
    """Factor a LaurentPoly over the q-th cyclotomic field, q in {3, 4, 6}.

    Returns (unit, [(monic factor, multiplicity)]).  Uses the norm map down
    to Q: for a suitable integer shift s the norm of f(x - s zeta) is
    squarefree, its rational factors pull back by gcds.
    """
    if q not in (3, 4, 6):
        raise ValueError("only the quadratic cyclotomic fields are supported")
    field = cyclotomic_field(q)
    if poly.ring.kind == "Cyc":
        if poly.ring.q != q or poly.ring.base != "Q":
            raise ValueError("polynomial must live over the matching field")
        f = poly
    else:
        f = poly.map_coeffs(field)
    if f.is_zero():
        raise ValueError("cannot factor zero")
    shift = f.min_exp()
    f = f.shift(-shift)
    lead = f.leading()
    f = f.scale(field.inv(lead))
    factors = []
    work = f
    sq = _squarefree_cyc(f, field)
    for part, mult in sq:
        for irr in _factor_squarefree_cyc(part, field, q):
            count = 0
            while True:
                quo = _exact_divide_field(work, irr, field)
                if quo is None:
                    break
                work = quo
                count += 1
            if count:
                factors.append((irr, count))
    unit = LaurentPoly(field, {shift: lead})
    factors.sort(key=lambda fm: (fm[0].max_exp(), sorted(map(str, fm[0].terms.values()))))
    return unit, factors


def _exact_divide_field(a, b, field):
    from .matrix import _poly_divmod_field

    if a.is_zero():
        return None
    qv, r = _poly_divmod_field(a, b, field)
    if r.is_zero():
        return qv
    return None


def _squarefree_cyc(f, field):
    out = []
    d = laurent_gcd(f, f.derivative())
    e = _exact_divide_field(f, d, field)
    i = 1
    while e is not None and e.max_exp() > 0:
        y = laurent_gcd(e, d)
        a = _exact_divide_field(e, y, field)
        if a is not None and a.max_exp() > 0:
            out.append((a, i))
        e = y
        d = _exact_divide_field(d, y, field)
        if d is None:
            d = LaurentPoly.one(field)
        i += 1
    return out


def _factor_squarefree_cyc(f, field, q):
    """Trager: factor a squarefree monic poly over Q(zeta_q), q quadratic."""
    deg = f.max_exp()
    if deg <= 1:
        return [f]
    for s in range(0, 10):
        shifted = _compose_shift(f, s, field, q)
        norm = _norm_to_q(shifted, field, q)
        # squarefree test over Q
        ints = _laurent_q_to_ints(norm)
        if len(_gcd_z(ints, _deriv(ints))) == 1:
            break
    else:
        raise ArithmeticError("no squarefree norm shift found")
    _, nfactors = factor_over_q(norm)
    out = []
    for nf, _mult in nfactors:
        nf_field = nf.map_coeffs(field)
        back = _compose_unshift(nf_field, s, field, q)
        g = laurent_gcd(f, back)
        if g.max_exp() > 0:
            out.append(g)
    return out


def _compose_shift(f, s, field, q):
    """f(x - s*zeta) over the field."""
    if s == 0:
        return f
    z = CycScalar(q, tuple(Fraction(c) for c in CycScalar.root_power(q, 1).coeffs))
    neg = field.mul(field.from_int(-s), z)
    # Horner: f(x + c) with c = -s*zeta
    coeffs = [f.coeff(e) for e in range(f.max_exp() + 1)]
    out = [field.zero()]
    for c in reversed(coeffs):
        # out = out * (x + neg) + c
        new = [field.zero()] * (len(out) + 1)
        for i, v in enumerate(out):
            new[i + 1] = field.add(new[i + 1], v)
            new[i] = field.add(new[i], field.mul(v, neg))
        new[0] = field.add(new[0], c)
        out = new
        while len(out) > 1 and field.is_zero(out[-1]):
            out.pop()
    return LaurentPoly(field, {i: c for i, c in enumerate(out)})


def _compose_unshift(f, s, field, q):
    """f(x + s*zeta) over the field."""
    if s == 0:
        return f
    z = CycScalar(q, tuple(Fraction(c) for c in CycScalar.root_power(q, 1).coeffs))
    pos = field.mul(field.from_int(s), z)
    coeffs = [f.coeff(e) for e in range(f.max_exp() + 1)]
    out = [field.zero()]
    for c in reversed(coeffs):
        new = [field.zero()] * (len(out) + 1)
        for i, v in enumerate(out):
            new[i + 1] = field.add(new[i + 1], v)
            new[i] = field.add(new[i], field.mul(v, pos))
        new[0] = field.add(new[0], c)
        out = new
        while len(out) > 1 and field.is_zero(out[-1]):
            out.pop()
    return LaurentPoly(field, {i: c for i, c in enumerate(out)})


def _norm_to_q(f, field, q):
    """Product of f with its Galois conjugate; coefficients drop to Q."""
    from .rings import QQ

    conj = LaurentPoly(
        field, {e: c.conjugate(-1) for e, c in f.terms.items()}
    )
    prod = f * conj
    out = {}
    for e, c in prod.terms.items():
        if any(x != 0 for x in c.coeffs[1:]):
            raise ArithmeticError("norm must have rational coefficients")
        if c.coeffs[0]:
            out[e] = Fraction(c.coeffs[0])
    return LaurentPoly(QQ, out)


def _laurent_q_to_ints(poly):
    den = 1
    for c in poly.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(poly.coeff(e) * den) for e in range(0, poly.max_exp() + 1)]


# -- divisor enumeration and power substitution ---------------------------------


def divisors_up_to_units(poly, q=1, limit=20000):
    """All monic/primitive divisors of poly up to units, from its
    factorization over Q (q = 1) or over the q-th cyclotomic field.

    The count is the product of multiplicity + 1 over the irreducible
    factors; a limit guards against combinatorial blowups.
    """
    if q == 1:
        _, factors = factor_over_q(poly)
    else:
        _, factors = factor_over_cyclotomic(poly, q)
    total = 1
    for _, m in factors:
        total *= m + 1
    if total > limit:
        raise ValueError("too many divisors to enumerate (%d)" % total)
    ring = factors[0][0].ring if factors else (ZZ if q == 1 else cyclotomic_field(q))
    divisors = [LaurentPoly.one(ring)]
    for fac, mult in factors:
        powers = [LaurentPoly.one(ring)]
        for _ in range(mult):
            powers.append(powers[-1] * fac)
        divisors = [d * pw for d in divisors for pw in powers]
    return divisors


def scalar_divisors(value, q=1):
    """Divisors of a nonzero cyclotomic integer, one per associate class.

    q = 1 takes a rational integer and lists positive divisors.  For
    q in {3, 4, 6} the ring of integers is the rank-2 lattice spanned by
    1 and zeta; candidates come from a bounded coordinate search filtered
    by exact division.
    """
    if q == 1:
        v = int(value)
        if v == 0:
            raise ValueError("zero has no divisor set")
        v = abs(v)
        out = [d for d in range(1, v + 1) if v % d == 0]
        return out
    if q not in (3, 4, 6):
        raise ValueError("scalar divisors only for Z and the quadratic rings")
    coeffs = []
    for c in value.coeffs:
        frac = Fraction(c)
        if frac.denominator != 1:
            raise ValueError("divisor search expects integral coordinates")
        coeffs.append(int(frac))
    if not any(coeffs):
        raise ValueError("zero has no divisor set")
    target = CycScalar(q, tuple(Fraction(c) for c in coeffs))
    nv = abs(Fraction(target.norm()))
    units = cyclotomic_ring(q).torsion_units()
    bound = math.isqrt(int(4 * nv) // 3) + 1
    seen = {}
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if a == 0 and b == 0:
                continue
            d = CycScalar(q, (Fraction(a), Fraction(b)))
            nd = abs(Fraction(d.norm()))
            if nd == 0 or nv % nd != 0:
                continue
            quo = target * _cyc_field_inverse(d)
            if any(Fraction(c).denominator != 1 for c in quo.coeffs):
                continue
            key = min(tuple(Fraction(c) for c in (d * u).coeffs) for u in units)
            if key not in seen:
                seen[key] = CycScalar(q, key)
    return sorted(seen.values(), key=lambda s: (abs(Fraction(s.norm())), s.coeffs))


def _cyc_field_inverse(d):
    field = cyclotomic_field(d.q)
    return field.inv(CycScalar(d.q, tuple(Fraction(c) for c in d.coeffs)))


def cyc_conjugate_poly(poly, q):
    """Apply the nontrivial automorphism zeta -> zeta^(q-1) coefficientwise."""
    return poly.map_coeffs(poly.ring, fn=lambda c: c.conjugate(q - 1))


def is_power_substitution(poly, q):
    """The polynomial a with poly = unit * a(t^q), or None.

    The exponents of a unit-normalized polynomial must all be divisible
    by q.

    >>> p = LaurentPoly.from_int_coeffs(ZZ, [1, 0, 0, 2, 0, 0, 1])
    >>> is_power_substitution(p, 3).to_string()
    '1 + 2*t + t^2'
    """
    if poly.is_zero():
        return poly
    base = poly.shift(-poly.min_exp())
    if any(e % q for e in base.terms):
        return None
    return LaurentPoly(poly.ring, {e // q: c for e, c in base.terms.items()})


if __name__ == "__main__":
    import doctest

    doctest.testmod()
