"""Determinants and Smith normal forms for matrices of Laurent polynomials.

Two determinant strategies are used.  The generic route is fraction-free
Bareiss elimination, exact over any of the supported integral domains.  Over
the integers, large matrices instead go through modular evaluation and
interpolation: the determinant is computed at enough points modulo enough
word-sized primes (through the selected kernel backend) and reconstructed by
Lagrange interpolation and the Chinese remainder theorem, with a permanent
bound guaranteeing the reconstruction window.
"""

import math

from . import detkernel
from .laurent import LaurentPoly, exact_divide, normalize_up_to_unit
from .rings import ZZ

__all__ = [
    "det_poly",
    "det_int",
    "smith_normal_form",
    "snf_poly_field",
    "minors_gcd_content",
]

# Above this size, integer determinants switch from Bareiss to the modular
# evaluation-interpolation route (the Bareiss entries grow too fast to pay).
BAREISS_CUTOFF = 12


def _miller_rabin(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_prime_cache = []


def _crt_primes(count):
    """The first `count` primes below 2**29 (descending)."""
    p = _prime_cache[-1] - 2 if _prime_cache else (1 << 29) - 1
    while len(_prime_cache) < count:
        while not _miller_rabin(p):
            p -= 2
        _prime_cache.append(p)
        p -= 2
    return _prime_cache[:count]


def det_int(rows):
    """Exact determinant of a square integer matrix via CRT over the kernel."""
    n = len(rows)
    if n == 0:
        return 1
    bound = 1
    for row in rows:
        s = math.isqrt(sum(x * x for x in row))
        bound *= s + 1
    target = 2 * bound + 1
    flat = [x for row in rows for x in row]
    residues, modulus = [], 1
    k = 1
    while modulus < target:
        primes = _crt_primes(k)
        p = primes[k - 1]
        residues.append((detkernel.det_mod(flat, n, p), p))
        modulus *= p
        k += 1
    return _crt_signed(residues)


def _crt_signed(residues):
    """Combine (residue, prime) pairs into the signed integer of least size."""
    x, m = 0, 1
    for r, p in residues:
        # solve x' = x mod m, x' = r mod p
        t = (r - x) * pow(m, -1, p) % p
        x += m * t
        m *= p
    if x > m // 2:
        x -= m
    return x


def det_poly(rows, ring=None):
    """Determinant of a square matrix of LaurentPoly entries (exact).

    Over Z, matrices larger than BAREISS_CUTOFF use the modular
    evaluation-interpolation route; everything else uses Bareiss.
    """
    n = len(rows)
    if n == 0:
        if ring is None:
            raise ValueError("empty matrix needs an explicit ring")
        return LaurentPoly.one(ring)
    ring = ring if ring is not None else rows[0][0].ring
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if ring.kind == "Z" and n > BAREISS_CUTOFF:
        return _det_modular_z(rows, n)
    return _det_bareiss(rows, n, ring)


def _det_bareiss(rows, n, ring):
    shift = 0
    m = []
    for row in rows:
        lo = min((e.min_exp() for e in row if not e.is_zero()), default=0)
        if lo:
            shift += lo
            m.append([e.shift(-lo) for e in row])
        else:
            m.append(list(row))
    sign = 1
    prev = LaurentPoly.one(ring)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if pivot_row is None:
                return LaurentPoly.zero(ring)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = exact_divide(num, prev)
                if q is None:
                    raise AssertionError("Bareiss division must be exact")
                m[i][j] = q
        prev = m[k][k]
    det = m[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det.shift(shift)


def _det_modular_z(rows, n):
    shift = 0
    m = []
    for row in rows:
        lo = min((e.min_exp() for e in row if not e.is_zero()), default=0)
        shift += lo
        m.append([e.shift(-lo) for e in row])
    # degree bound: sum over rows of the max entry degree
    deg = 0
    for row in m:
        deg += max((e.max_exp() for e in row if not e.is_zero()), default=0)
    # coefficient bound: product over rows of the summed l1 norms (a bound on
    # the permanent of the l1-norm matrix, hence on every determinant coeff)
    bound = 1
    for row in m:
        s = sum(sum(abs(c) for c in e.terms.values()) for e in row)
        bound *= max(s, 1)
    target = 2 * bound + 1
    npts = deg + 1
    coeff_residues = []
    modulus, k = 1, 0
    while modulus < target:
        k += 1
        p = _crt_primes(k)[k - 1]
        values = []
        for x in range(npts):
            flat = []
            powers = _powers_mod(x, deg, p)
            for row in m:
                for e in row:
                    acc = 0
                    for ex, c in e.terms.items():
                        acc += c * powers[ex]
                    flat.append(acc % p)
            values.append(detkernel.det_mod(flat, n, p))
        coeff_residues.append((_interpolate_mod(values, p), p))
        modulus *= p
    coeffs = []
    for i in range(npts):
        res = [(cr[i], p) for cr, p in coeff_residues]
        coeffs.append(_crt_signed(res))
    out = LaurentPoly(ZZ, {i: c for i, c in enumerate(coeffs) if c})
    return out.shift(shift)


def _powers_mod(x, deg, p):
    powers = [1] * (deg + 1)
    for i in range(1, deg + 1):
        powers[i] = powers[i - 1] * x % p
    return powers


def _interpolate_mod(values, p):
    """Coefficients of the polynomial through (i, values[i]) mod p (Newton)."""
    n = len(values)
    # divided differences; nodes are 0, 1, ..., n-1
    dd = list(values)
    inv = [0] * (n + 1)
    for i in range(1, n + 1):
        inv[i] = pow(i, p - 2, p)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) * inv[level] % p
    # expand Newton form: sum dd[i] * prod_{j<i} (x - j)
    coeffs = [0] * n
    basis = [1]  # coefficients of prod_{j<i} (x - j)
    for i in range(n):
        for d, b in enumerate(basis):
            coeffs[d] = (coeffs[d] + dd[i] * b) % p
        new_basis = [0] * (len(basis) + 1)
        for d, b in enumerate(basis):
            new_basis[d + 1] = (new_basis[d + 1] + b) % p
            new_basis[d] = (new_basis[d] - b * i) % p
        basis = new_basis
    return coeffs


def smith_normal_form(rows):
    """Invariant factors of an integer matrix (nonnegative, d1 | d2 | ...).

    Returns the full diagonal of the Smith normal form, zeros included.

    >>> smith_normal_form([[2, 0], [0, 3]])
    [1, 6]
    """
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    diag = []
    top = 0
    while top < min(nr, nc):
        # find a nonzero entry of least absolute value in the submatrix
        best = None
        for i in range(top, nr):
            for j in range(top, nc):
                v = m[i][j]
                if v and (best is None or abs(v) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        m[top], m[i0] = m[i0], m[top]
        for row in m:
            row[top], row[j0] = row[j0], row[top]
        while True:
            pivot = m[top][top]
            done = True
            for i in range(top + 1, nr):
                q = m[i][top] // pivot
                if q:
                    for j in range(top, nc):
                        m[i][j] -= q * m[top][j]
                if m[i][top]:
                    m[top], m[i] = m[i], m[top]
                    done = False
                    break
            if not done:
                continue
            for j in range(top + 1, nc):
                q = m[top][j] // pivot
                if q:
                    for i in range(top, nr):
                        m[i][j] -= q * m[i][top]
                if m[top][j]:
                    for row in m:
                        row[top], row[j] = row[j], row[top]
                    done = False
                    break
            if done:
                break
        # pivot must divide the rest of the submatrix; if not, fold and redo
        pivot = m[top][top]
        offender = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if m[i][j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, nc):
                m[top][j] += m[offender][j]
            continue
        diag.append(abs(pivot))
        top += 1
    while len(diag) < min(nr, nc):
        diag.append(0)
    # normalize divisibility is guaranteed by construction (pivot divides rest)
    return diag


def snf_poly_field(rows, ring):
    """Invariant factors (monic) of a matrix of LaurentPoly over a field.

    Zero invariant factors are returned as zero polynomials at the tail.
    """
    if not ring.is_field:
        raise ValueError("snf_poly_field needs a field coefficient ring")
    m = []
    for row in rows:
        m.append([e.shift(-e.min_exp()) if not e.is_zero() else e for e in row])
    nr = len(m)
    nc = len(m[0]) if nr else 0
    factors = []
    top = 0
    while top < min(nr, nc):
        best = None
        for i in range(top, nr):
            for j in range(top, nc):
                if not m[i][j].is_zero():
                    d = m[i][j].span()
                    if best is None or d < best[0]:
                        best = (d, i, j)
        if best is None:
            break
        _, i0, j0 = best
        m[top], m[i0] = m[i0], m[top]
        for row in m:
            row[top], row[j0] = row[j0], row[top]
        while True:
            pivot = m[top][top]
            changed = False
            for i in range(top + 1, nr):
                if m[i][top].is_zero():
                    continue
                q, r = _poly_divmod_field(m[i][top], pivot, ring)
                for j in range(top, nc):
                    m[i][j] = m[i][j] - q * m[top][j]
                if not r.is_zero():
                    m[top], m[i] = m[i], m[top]
                    changed = True
                    break
            if changed:
                continue
            for j in range(top + 1, nc):
                if m[top][j].is_zero():
                    continue
                q, r = _poly_divmod_field(m[top][j], pivot, ring)
                for i in range(top, nr):
                    m[i][j] = m[i][j] - m[i][top] * q
                if not r.is_zero():
                    for row in m:
                        row[top], row[j] = row[j], row[top]
                    changed = True
                    break
            if not changed:
                break
        pivot = m[top][top]
        offender = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if not _poly_divides_field(pivot, m[i][j], ring):
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, nc):
                m[top][j] = m[top][j] + m[offender][j]
            continue
        factors.append(normalize_up_to_unit(pivot))
        top += 1
    while len(factors) < min(nr, nc):
        factors.append(LaurentPoly.zero(ring))
    return factors


def _poly_divmod_field(f, g, ring):
    """Division with remainder over a field; entries must have min_exp >= 0."""
    f = f.shift(-f.min_exp()) if not f.is_zero() and f.min_exp() < 0 else f
    r = dict(f.terms)
    g_deg = g.max_exp()
    g_lead_inv = ring.inv(g.leading())
    q = {}
    while r:
        r_deg = max(r)
        if r_deg < g_deg:
            break
        c = ring.mul(r[r_deg], g_lead_inv)
        e = r_deg - g_deg
        q[e] = c
        for ge, gc in g.terms.items():
            kk = e + ge
            v = ring.sub(r.get(kk, ring.zero()), ring.mul(c, gc))
            if ring.is_zero(v):
                r.pop(kk, None)
            else:
                r[kk] = v
    return LaurentPoly(ring, q), LaurentPoly(ring, r)


def _poly_divides_field(g, f, ring):
    if f.is_zero():
        return True
    _, r = _poly_divmod_field(f, g, ring)
    return r.is_zero()


def minors_gcd_content(rows, n):
    """gcd of the integer contents of all n x n minors of an integer-poly
    matrix (LaurentPoly over Z), with early exit once the gcd reaches 1.

    Minors are enumerated in deterministic lexicographic order of row
    subsets; the Laurent shift of a row changes minors only by units, which
    do not affect contents.
    """
    from itertools import combinations

    nrows = len(rows)
    g = 0
    for subset in combinations(range(nrows), n):
        sub = [rows[i] for i in subset]
        d = _det_bareiss([list(r) for r in sub], n, ZZ)
        if not d.is_zero():
            g = math.gcd(g, d.content_int())
            if g == 1:
                return 1
    return g


if __name__ == "__main__":
    import doctest

    doctest.testmod()
