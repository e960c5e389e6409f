"""Periodicity and free-periodicity obstructions.

Every test here returns an ObstructionVerdict instead of a bare boolean:
a status, the criterion name, and a certificate recording what was searched
and what survived.  "obstructed" means the hypothesis (a symmetry of the
stated order) is impossible, "consistent" means a witness satisfying every
checked constraint was found, and "inconclusive" means part of the search
space was out of reach, so nothing can be claimed either way.
"""

import math
from fractions import Fraction

from .factor import (
    cyc_conjugate_poly,
    divisors_up_to_units,
    factor_over_cyclotomic,
    factor_over_q,
    is_power_substitution,
    scalar_divisors,
)
from .laurent import LaurentPoly, cyc_eval, exact_divide, normalize_up_to_unit
from .matrix import _miller_rabin
from .rings import (
    QQ,
    ZZ,
    CycScalar,
    Fp,
    cyclotomic_polynomial,
    cyclotomic_ring,
)
from .twisted import classical_axis_factor

__all__ = [
    "OBSTRUCTED",
    "CONSISTENT",
    "INCONCLUSIVE",
    "ObstructionVerdict",
    "murasugi_modp",
    "murasugi_zeta",
    "twisted_murasugi_rational",
    "twisted_murasugi_modp",
    "period_obstruction_pipeline",
    "degree_feasibility",
    "orbit_criterion",
    "index_p_subgroup_count",
    "transfer_fixed_bound",
    "hartley_relation_check",
    "hartley_screen",
    "free_period_small_q",
    "free_period_large_q",
    "noncyclotomic_factors",
    "FreePeriodReport",
    "free_period_report",
]

OBSTRUCTED = "obstructed"
CONSISTENT = "consistent"
INCONCLUSIVE = "inconclusive"


def _is_prime(n):
    return n >= 2 and _miller_rabin(n)


def _prime_factors(n):
    n = abs(int(n))
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.add(n)
    return out


def _jsonable(value):
    if isinstance(value, ObstructionVerdict):
        return value.to_json()
    if isinstance(value, LaurentPoly):
        return value.to_string()
    if isinstance(value, CycScalar):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set)):
        return [_jsonable(v) for v in value]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    return str(value)


class ObstructionVerdict:
    """Outcome of one obstruction test."""

    __slots__ = ("criterion", "status", "certificate")

    def __init__(self, criterion, status, certificate=None):
        self.criterion = criterion
        self.status = status
        self.certificate = certificate if certificate is not None else {}

    @property
    def obstructed(self):
        return self.status == OBSTRUCTED

    @property
    def consistent(self):
        return self.status == CONSISTENT

    def to_json(self):
        return {
            "criterion": self.criterion,
            "status": self.status,
            "certificate": _jsonable(self.certificate),
        }

    def __repr__(self):
        return "ObstructionVerdict(%r, %r)" % (self.criterion, self.status)


def _check_prime_power(q, p):
    if not _is_prime(p):
        raise ValueError("p must be prime")
    r = 0
    qq = q
    while qq % p == 0:
        qq //= p
        r += 1
    if qq != 1 or r == 0:
        raise ValueError("q must be a positive power of p")
    return r


# -- congruence tests for honest (non-free) periods -----------------------------


def murasugi_modp(delta, q, p, lambda_max=None):
    """Mod-p congruence test for a period q = p^r.

    A knot with period q and axis linking number lambda satisfies, up to a
    unit and mod p,

        delta = (1 + t + ... + t^(lambda-1))^(q-1) * a(t^q)

    for some integer polynomial a (the Frobenius collapses the q-th power of
    the quotient polynomial into a substitution).  All lambda coprime to q
    up to lambda_max are tried; by default lambda_max is the largest value
    for which the axis factor still fits under deg(delta mod p).
    """
    _check_prime_power(q, p)
    field = Fp(p)
    dp = delta.map_coeffs(field)
    if dp.is_zero():
        raise ValueError("the polynomial vanishes mod p")
    dp = normalize_up_to_unit(dp)
    deg = dp.max_exp()
    if lambda_max is None:
        lambda_max = deg // (q - 1) + 1
    tried = []
    witnesses = []
    for lam in range(1, lambda_max + 1):
        if math.gcd(lam, q) != 1:
            continue
        tried.append(lam)
        ax = normalize_up_to_unit(classical_axis_factor(lam, field) ** (q - 1))
        quo = exact_divide(dp, ax)
        if quo is None:
            continue
        a = is_power_substitution(normalize_up_to_unit(quo), q)
        if a is not None:
            witnesses.append({"lambda": lam, "quotient_mod_p": a})
    status = CONSISTENT if witnesses else OBSTRUCTED
    certificate = {
        "q": q,
        "p": p,
        "delta_mod_p": dp,
        "lambda_tried": tried,
        "witnesses": witnesses,
    }
    return ObstructionVerdict("murasugi-modp", status, certificate)


def _poly_key(poly):
    items = []
    for e in sorted(poly.terms):
        c = poly.terms[e]
        if isinstance(c, CycScalar):
            items.append((e, tuple(Fraction(x) for x in c.coeffs)))
        else:
            items.append((e, Fraction(c)))
    return tuple(items)


def _splits_as_conjugate_pair(quotient, q):
    """Does quotient factor as F * F^sigma over the q-th cyclotomic field?

    Works for q in {3, 4, 6} where the field is quadratic: the grouping
    exists iff every self-conjugate irreducible factor has even multiplicity
    and conjugate factors occur with equal multiplicities.  Content only
    contributes a sign, which the unit normalization absorbs.
    """
    _, factors = factor_over_cyclotomic(quotient, q)
    mult = {}
    polys = {}
    for g, m in factors:
        k = _poly_key(normalize_up_to_unit(g))
        mult[k] = mult.get(k, 0) + m
        polys[k] = g
    for k, g in polys.items():
        ks = _poly_key(normalize_up_to_unit(cyc_conjugate_poly(g, q)))
        if ks == k:
            if mult[k] % 2:
                return False
        elif mult.get(ks) != mult[k]:
            return False
    return True


def murasugi_zeta(delta, q, candidates=None):
    """Root-of-unity refinement of the quotient condition for a period q.

    The quotient delta / dbar of a period-q polynomial by its quotient-knot
    polynomial splits as F * F^sigma over Q(zeta_q).  Candidates for dbar
    default to the divisors of delta over Q.  q = 2 imposes nothing beyond
    divisibility (the conjugation is trivial); q = 3 is decided by quadratic
    cyclotomic factorization; for larger prime q only a unit quotient can be
    certified here, so other candidates stay undecided.
    """
    if not _is_prime(q):
        raise ValueError("the refined quotient condition expects a prime period")
    if candidates is None:
        candidates = divisors_up_to_units(delta)
    base = normalize_up_to_unit(delta)
    survivors = []
    undecided = []
    rejected = []
    for cand in candidates:
        candn = normalize_up_to_unit(cand)
        quo = exact_divide(base, candn)
        if quo is None:
            rejected.append(cand)
            continue
        if q == 2:
            survivors.append(cand)
            continue
        if normalize_up_to_unit(quo).is_unit_monomial():
            survivors.append(cand)
            continue
        if q == 3:
            if _splits_as_conjugate_pair(quo, q):
                survivors.append(cand)
            else:
                rejected.append(cand)
        else:
            undecided.append(cand)
    if survivors:
        status = CONSISTENT
    elif undecided:
        status = INCONCLUSIVE
    else:
        status = OBSTRUCTED
    certificate = {
        "q": q,
        "candidates": len(candidates),
        "survivors": survivors,
        "undecided": undecided,
        "rejected": rejected,
    }
    return ObstructionVerdict("murasugi-zeta", status, certificate)


def twisted_murasugi_rational(delta, q):
    """Quotient splitting test over Q(zeta_q) applied to a twisted polynomial.

    Enumerates the rational divisors of delta and keeps those whose quotient
    admits the F * F^sigma grouping.  The surviving candidates feed the mod-p
    congruence test.
    """
    inner = murasugi_zeta(delta, q, candidates=divisors_up_to_units(delta))
    return ObstructionVerdict("twisted-murasugi-rational", inner.status, inner.certificate)


def twisted_murasugi_modp(
    delta,
    delta0,
    q,
    p,
    n,
    lambda_max=None,
    candidates=None,
    search_limit=10 ** 5,
):
    """Mod-p congruence for the twisted polynomial of a period-q knot.

    Cross-multiplied so no divisibility assumption is needed:

        delta * delta0^(q-1)  =  dbar(t^q) * ax^(q-1)   (mod p, up to a unit)

    where ax is the characteristic factor of the axis: an unknown polynomial
    of degree exactly n*lambda with constant term 1 and top coefficient +-1
    (the axis image is an integral matrix of determinant +-1).  For each
    admissible lambda the interior coefficient space has size p^(n*lambda-1);
    spaces up to search_limit are searched exhaustively, and when candidates
    for dbar are supplied, larger spaces are still decided by comparing
    degrees.  Without candidates an unsearchably large space leaves that
    lambda undecided.
    """
    _check_prime_power(q, p)
    if n < 1:
        raise ValueError("the representation dimension must be positive")
    field = Fp(p)
    lhs = delta.map_coeffs(field)
    if delta0 is not None and not delta0.is_zero():
        lhs = lhs * delta0.map_coeffs(field) ** (q - 1)
    if lhs.is_zero():
        raise ValueError("the congruence degenerates mod p")
    lhs = normalize_up_to_unit(lhs)
    deg = lhs.max_exp()
    lam_bound = deg // ((q - 1) * n)
    lam_cap = lam_bound if lambda_max is None else lambda_max
    cand_degrees = None
    cand_mod = None
    if candidates is not None:
        cand_mod = []
        for c in candidates:
            cm = c.map_coeffs(field)
            if cm.is_zero():
                continue
            cand_mod.append(normalize_up_to_unit(cm))
        cand_degrees = sorted({cm.max_exp() for cm in cand_mod})
    witness = None
    eliminated = []
    undecided = []
    for lam in range(1, max(lam_cap, 0) + 1):
        if math.gcd(lam, q) != 1:
            continue
        d_ax = n * lam
        rem = deg - (q - 1) * d_ax
        if rem < 0:
            eliminated.append({"lambda": lam, "reason": "degree"})
            continue
        if cand_degrees is not None:
            if not any(q * d == rem for d in cand_degrees):
                eliminated.append({"lambda": lam, "reason": "degree"})
                continue
        elif rem % q:
            eliminated.append({"lambda": lam, "reason": "degree"})
            continue
        space = p ** max(d_ax - 1, 0)
        if space > search_limit:
            undecided.append({"lambda": lam, "search_space": 2 * space})
            continue
        found = _search_axis_factor(lhs, q, p, field, d_ax, cand_mod)
        if found is not None:
            ax, dbar = found
            witness = {"lambda": lam, "axis_factor": ax, "quotient_mod_p": dbar}
            break
        eliminated.append({"lambda": lam, "reason": "search"})
    if witness is not None:
        status = CONSISTENT
    elif undecided:
        status = INCONCLUSIVE
    else:
        status = OBSTRUCTED
    certificate = {
        "q": q,
        "p": p,
        "n": n,
        "lhs_mod_p": lhs,
        "lhs_degree": deg,
        "lambda_bound": lam_bound,
        "candidate_degrees": cand_degrees,
        "eliminated": eliminated,
        "undecided": undecided,
        "witness": witness,
    }
    return ObstructionVerdict("twisted-murasugi-modp", status, certificate)


def _search_axis_factor(lhs, q, p, field, d_ax, cand_mod):
    """Exhaust axis factors of degree d_ax over F_p against lhs."""
    interior = [0] * max(d_ax - 1, 0)
    tops = (1,) if p == 2 else (1, p - 1)
    while True:
        for top in tops:
            terms = {0: field.one(), d_ax: field.from_int(top)}
            for i, c in enumerate(interior):
                if c:
                    terms[i + 1] = field.from_int(c)
            ax = LaurentPoly(field, terms)
            quo = exact_divide(lhs, normalize_up_to_unit(ax ** (q - 1)))
            if quo is None:
                continue
            quo = normalize_up_to_unit(quo)
            if cand_mod is not None:
                for cm in cand_mod:
                    if quo == cm.subs_power(q):
                        return ax, cm
                continue
            dbar = is_power_substitution(quo, q)
            if dbar is not None:
                return ax, normalize_up_to_unit(dbar)
        # odometer over the interior coefficients
        pos = 0
        while pos < len(interior):
            interior[pos] += 1
            if interior[pos] < p:
                break
            interior[pos] = 0
            pos += 1
        else:
            return None


def period_obstruction_pipeline(
    classical_delta,
    q,
    p=None,
    twisted_delta=None,
    delta0=None,
    n=None,
    lambda_max=None,
):
    """Chain of period-q tests, strongest conclusion wins.

    Runs the classical mod-p screen, then (when a twisted polynomial is
    supplied) the rational quotient splitting and the mod-p congruence with
    the surviving candidates.  The pipeline is obstructed as soon as any
    stage is.
    """
    if p is None:
        p = min(_prime_factors(q))
    stages = []
    v = murasugi_modp(classical_delta, q, p, lambda_max=lambda_max)
    stages.append(v)
    if not v.obstructed and twisted_delta is not None:
        if n is None:
            raise ValueError("the representation dimension is required")
        v2 = twisted_murasugi_rational(twisted_delta, q)
        stages.append(v2)
        if not v2.obstructed:
            survivors = v2.certificate["survivors"] or None
            v3 = twisted_murasugi_modp(
                twisted_delta,
                delta0,
                q,
                p,
                n,
                lambda_max=lambda_max,
                candidates=survivors,
            )
            stages.append(v3)
    if any(s.obstructed for s in stages):
        status = OBSTRUCTED
    elif any(s.status == INCONCLUSIVE for s in stages):
        status = INCONCLUSIVE
    else:
        status = CONSISTENT
    certificate = {"q": q, "p": p, "stages": stages}
    return ObstructionVerdict("period-pipeline", status, certificate)


# -- arithmetic counting criteria ------------------------------------------------


def degree_feasibility(deg_delta, q, n, deg_delta0=0, lambda_max=None):
    """Pure degree count for the period-q congruence.

    The cross-multiplied congruence forces

        deg_delta = k*q + (n*lambda - deg_delta0)*(q - 1)

    with k >= 0 the degree of the quotient polynomial, equivalently
    (k + n*lambda - deg_delta0) * q = deg_delta + (n*lambda - deg_delta0).
    Every admissible lambda is tested; an empty solution list rules the
    period out on degrees alone.
    """
    if lambda_max is None:
        lambda_max = max((deg_delta + (q - 1) * deg_delta0) // ((q - 1) * n), 1)
    solutions = []
    equations = []
    for lam in range(1, max(lambda_max, 0) + 1):
        if math.gcd(lam, q) != 1:
            continue
        shift = n * lam - deg_delta0
        total = deg_delta + shift
        eq = "(k + %d) * %d = %d" % (shift, q, total)
        k = total // q - shift if total % q == 0 else None
        if k is not None and k >= 0:
            solutions.append({"lambda": lam, "k": k})
            equations.append({"lambda": lam, "equation": eq, "k": k})
        else:
            equations.append({"lambda": lam, "equation": eq, "k": None})
    status = CONSISTENT if solutions else OBSTRUCTED
    certificate = {
        "q": q,
        "n": n,
        "deg_delta": deg_delta,
        "deg_delta0": deg_delta0,
        "equations": equations,
        "solutions": solutions,
    }
    return ObstructionVerdict("degree-feasibility", status, certificate)


def orbit_criterion(d, m, q, fixed_class_bound):
    """Orbit count bound for a Z/q action on m objects.

    If at most fixed_class_bound of the m objects are fixed, any invariant
    set of d distinct objects chosen one per orbit satisfies
    d <= max_f (f + (m - f) // q) over f <= fixed_class_bound.
    """
    if m < 0 or d < 0 or q < 2:
        raise ValueError("need m, d >= 0 and q >= 2")
    best = None
    best_f = None
    for f in range(0, min(fixed_class_bound, m) + 1):
        v = f + (m - f) // q
        if best is None or v > best:
            best, best_f = v, f
    if best is None:
        best, best_f = 0, 0
    status = OBSTRUCTED if d > best else CONSISTENT
    certificate = {
        "d": d,
        "m": m,
        "q": q,
        "fixed_class_bound": fixed_class_bound,
        "orbit_bound": best,
        "bound_attained_at": best_f,
    }
    return ObstructionVerdict("orbit-count", status, certificate)


def index_p_subgroup_count(h1_factors, p):
    """Number of index-p subgroups of the abelian group with the given
    cyclic factor orders: (p^k - 1)/(p - 1) where k is the p-rank."""
    k = sum(1 for f in h1_factors if f % p == 0)
    if k == 0:
        raise ValueError("p does not divide the group order")
    return (p ** k - 1) // (p - 1)


def transfer_fixed_bound(h1_factors, p, quotient_delta_is_one):
    """Bound on index-p subgroups fixed by the deck transformation.

    When the quotient polynomial is trivial the transfer argument kills
    every invariant index-p subgroup, so the bound is 0; otherwise nothing
    is gained and the bound is the full subgroup count.
    """
    m = index_p_subgroup_count(h1_factors, p)
    return 0 if quotient_delta_is_one else m


# -- free periods ----------------------------------------------------------------


def hartley_relation_check(delta, dbar, q):
    """Does prod_{i<q} dbar(zeta^i t) equal delta(t^q) up to +-t^e over Z?

    The product is expanded in Z[zeta_q][t]; it must come out with plain
    integer coefficients and match exactly after unit normalization.
    Returns (ok, product) with the product as an integer polynomial, or
    (False, None) when the product is not rational.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if delta.ring.kind != "Z" or dbar.ring.kind != "Z":
        raise ValueError("the relation is checked over Z")
    ring = cyclotomic_ring(q)
    prod = LaurentPoly.one(ring)
    for i in range(q):
        terms = {}
        for e, c in dbar.terms.items():
            terms[e] = CycScalar.root_power(q, (i * e) % q).scale(c)
        prod = prod * LaurentPoly(ring, terms)
    int_terms = {}
    for e, c in prod.terms.items():
        if any(x != 0 for x in c.coeffs[1:]):
            return False, None
        int_terms[e] = int(c.coeffs[0])
    zz_prod = LaurentPoly(ZZ, int_terms)
    target = delta.subs_power(q)
    ok = normalize_up_to_unit(zz_prod) == normalize_up_to_unit(target)
    return ok, zz_prod


def hartley_screen(delta, q, limit=20000):
    """Free-period screen at q via the product relation.

    A free period q forces delta(t^q) = prod_i dbar(zeta^i t) for some
    integer polynomial dbar, necessarily a divisor of delta(t^q) of the
    same degree as delta.  All such divisors are enumerated from the
    rational factorization and checked one by one.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    base = normalize_up_to_unit(delta)
    if base.is_zero():
        raise ValueError("cannot screen the zero polynomial")
    deg = base.max_exp()
    divisors = divisors_up_to_units(base.subs_power(q), limit=limit)
    candidates = [d for d in divisors if d.max_exp() - d.min_exp() == deg]
    survivors = []
    failed = []
    for cand in candidates:
        ok, _ = hartley_relation_check(base, cand, q)
        if ok:
            survivors.append(cand)
        else:
            failed.append(cand)
    status = CONSISTENT if survivors else OBSTRUCTED
    certificate = {
        "q": q,
        "degree": deg,
        "candidates": candidates,
        "survivors": survivors,
        "failed": failed,
    }
    return ObstructionVerdict("hartley-screen", status, certificate)


def free_period_small_q(f, q, limit=20000):
    """The product-relation screen applied to a factor of a twisted
    polynomial; a free period q must pass it for f as well."""
    inner = hartley_screen(f, q, limit=limit)
    return ObstructionVerdict("free-period-small-q", inner.status, inner.certificate)


_EVAL_POINTS = ((1, 0), (2, 1), (4, 1), (3, 1), (3, 2), (6, 1), (6, 5))
_SCALAR_FIELD = {1: 1, 2: 1, 3: 3, 4: 4, 6: 6}


def _cyclotomic_orders_dividing(poly, max_degree):
    """Greedily divide out cyclotomic polynomials of degree <= max_degree.

    Returns (orders with multiplicity, remainder).  The remainder is a unit
    iff poly is a product of cyclotomics, which is the only reliable test;
    probing a single substitution prime can lie in both directions.
    """
    rem = normalize_up_to_unit(poly)
    orders = []
    m = 1
    cap = 4 * max_degree * max_degree + 8
    while m <= cap:
        phi = cyclotomic_polynomial(m)
        if len(phi) - 1 <= max_degree:
            cyc = LaurentPoly(ZZ, {i: c for i, c in enumerate(phi) if c})
            while True:
                quo = exact_divide(rem, cyc)
                if quo is None:
                    break
                rem = quo
                orders.append(m)
        m += 1
    return orders, normalize_up_to_unit(rem)


def free_period_large_q(f, small_prime_ceiling=11):
    """Uniform obstruction to all sufficiently large prime free periods.

    f must be monic with constant term 1.  At each root of unity alpha of
    order 1, 2, 3, 4 or 6 the hypothetical quotient value g(alpha) is a
    unit multiple of a divisor of some Galois conjugate value of f, and is
    congruent to f(alpha) mod any prime free period q.  The primes dividing
    the coordinate content of a nonzero difference f(alpha) - candidate are
    collected as exceptional; for prime q beyond them the congruence forces
    g(alpha) = f(alpha) on the nose.  With enough evaluation points g - f
    has more roots than its degree allows, so g = f, and the relation then
    requires f | f(t^q).  A non-cyclotomic f has a root off the unit circle,
    which rules that out for every q >= 2 at once; the division witness at
    the threshold prime is still checked rather than assumed.
    """
    base = normalize_up_to_unit(f)
    if base.ring.kind != "Z":
        raise ValueError("the uniform argument runs over Z")
    if base.leading() != 1 or base.coeff(0) != 1:
        raise ValueError("need a monic factor with constant term 1")
    deg = base.max_exp()
    values = {}
    for m, j in _EVAL_POINTS:
        values[(m, j)] = cyc_eval(base, m, power=j)
    # a zero value means f has the corresponding cyclotomic factor; the
    # divisor argument gives no constraint there, so the point drops out
    live_points = [(m, j) for (m, j) in _EVAL_POINTS if not values[(m, j)].is_zero()]
    closure = set()
    for m, j in live_points:
        closure.add((m, j % m))
        closure.add((m, (m - j) % m))
    root_budget = 1 + len(closure)
    if root_budget < deg:
        certificate = {"degree": deg, "root_budget": root_budget}
        return ObstructionVerdict(
            "free-period-large-q",
            INCONCLUSIVE,
            dict(certificate, reason="not enough evaluation points to pin the quotient"),
        )
    divisor_classes = {}
    exceptional = set()
    for m, j in live_points:
        sq = _SCALAR_FIELD[m]
        target = values[(m, j)]
        ring = cyclotomic_ring(m)
        units = ring.torsion_units()
        classes = []
        seen = set()
        for r in range(1, m + 1):
            if math.gcd(r, m) != 1:
                continue
            v = cyc_eval(base, m, power=(j * r) % m)
            if sq == 1:
                divs = scalar_divisors(int(v.coeffs[0]), 1)
                divs = [CycScalar.from_int(m, d) for d in divs]
            else:
                divs = scalar_divisors(v, sq)
            for d in divs:
                for u in units:
                    cand = d * u
                    key = tuple(cand.coeffs)
                    if key in seen:
                        continue
                    seen.add(key)
                    classes.append(cand)
                    diff = target - cand
                    if not diff.is_zero():
                        exceptional |= _prime_factors(diff.content())
        divisor_classes[(m, j)] = classes
    floor = max([small_prime_ceiling] + sorted(exceptional))
    q0 = floor + 1
    while not _is_prime(q0):
        q0 += 1
    gap_primes = [p for p in range(small_prime_ceiling + 1, q0) if _is_prime(p)]
    certificate = {
        "degree": deg,
        "root_budget": root_budget,
        "values": {"%d^%d" % (m, j): v for (m, j), v in values.items()},
        "divisor_classes": {
            "%d^%d" % (m, j): v for (m, j), v in divisor_classes.items()
        },
        "exceptional_primes": sorted(exceptional),
        "threshold_prime": q0,
        "gap_primes": gap_primes,
    }
    orders, rem = _cyclotomic_orders_dividing(base, deg)
    if rem.is_unit_monomial():
        # purely cyclotomic: the forced relation f | f(t^q) actually holds
        # for suitable q, so nothing is obstructed
        coprime = q0
        while any(coprime % o == 0 for o in set(orders)) or not _is_prime(coprime):
            coprime += 1
        witness = exact_divide(base.subs_power(coprime), base)
        certificate.update(
            {
                "cyclotomic_orders": orders,
                "witness_prime": coprime,
                "witness_divides": witness is not None,
                "reason": "cyclotomic factor satisfies the relation",
            }
        )
        return ObstructionVerdict("free-period-large-q", INCONCLUSIVE, certificate)
    certificate["cyclotomic_orders"] = orders
    certificate["noncyclotomic_remainder_degree"] = rem.max_exp()
    witness = exact_divide(base.subs_power(q0), base)
    if witness is not None:
        certificate["reason"] = "division witness unexpectedly succeeded"
        return ObstructionVerdict("free-period-large-q", INCONCLUSIVE, certificate)
    certificate["witness_division_fails_at"] = q0
    certificate["conclusion"] = "all prime periods >= %d are obstructed" % q0
    return ObstructionVerdict("free-period-large-q", OBSTRUCTED, certificate)


def noncyclotomic_factors(poly):
    """Irreducible rational factors of poly that are not cyclotomic,
    as (factor, multiplicity) pairs."""
    _, factors = factor_over_q(poly)
    out = []
    for g, m in factors:
        _, rem = _cyclotomic_orders_dividing(g, g.max_exp() - g.min_exp())
        if not rem.is_unit_monomial():
            out.append((g, m))
    return out


class FreePeriodReport:
    """Per-prime free-period verdicts plus the uniform tail."""

    __slots__ = ("per_prime", "large_q", "factor", "overall")

    def __init__(self, per_prime, large_q, factor, overall):
        self.per_prime = per_prime
        self.large_q = large_q
        self.factor = factor
        self.overall = overall

    def to_json(self):
        return {
            "per_prime": {
                str(q): {"method": method, "verdict": v.to_json()}
                for q, (method, v) in sorted(self.per_prime.items())
            },
            "large_q": self.large_q.to_json() if self.large_q is not None else None,
            "factor": self.factor.to_string() if self.factor is not None else None,
            "no_free_periods": self.overall,
        }

    def __repr__(self):
        return "FreePeriodReport(no_free_periods=%r)" % self.overall


def free_period_report(classical_delta, twisted_delta=None, small_primes=(2, 3, 5, 7, 11), limit=20000):
    """Free-period survey: small primes individually, large primes at once.

    Each small prime is screened with the classical polynomial first; where
    that is silent, a non-cyclotomic irreducible factor of the twisted
    polynomial takes over.  Primes past the threshold of the uniform
    argument are obstructed together, and any primes falling in the gap
    between the small list and the threshold are screened individually.
    The overall flag is True only when every prime is obstructed.
    """
    factor = None
    if twisted_delta is not None:
        pieces = noncyclotomic_factors(twisted_delta)
        for g, _ in pieces:
            if g.leading() == 1 and g.coeff(g.min_exp()) == 1:
                factor = normalize_up_to_unit(g)
                break
        if factor is None and pieces:
            factor = normalize_up_to_unit(pieces[0][0])
    per_prime = {}
    for q in small_primes:
        v = hartley_screen(classical_delta, q, limit=limit)
        if v.obstructed or factor is None:
            per_prime[q] = ("classical", v)
            continue
        per_prime[q] = ("twisted", free_period_small_q(factor, q, limit=limit))
    large = None
    if factor is not None:
        try:
            large = free_period_large_q(factor, small_prime_ceiling=max(small_primes))
        except ValueError as exc:
            large = ObstructionVerdict(
                "free-period-large-q", INCONCLUSIVE, {"reason": str(exc)}
            )
        if large.status == OBSTRUCTED:
            for p in large.certificate.get("gap_primes", []):
                if p not in per_prime:
                    per_prime[p] = ("twisted", free_period_small_q(factor, p, limit=limit))
    overall = (
        large is not None
        and large.obstructed
        and all(v.obstructed for _, v in per_prime.values())
    )
    return FreePeriodReport(per_prime, large, factor, overall)
