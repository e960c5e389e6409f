"""Finite representations of diagram groups.

Two sources of representations are provided: Fox colorings modulo an odd
prime p, lifted integrally to (p-1)-dimensional dihedral representations,
and permutation representations with all meridians in a chosen conjugacy
class.  Both are enumerated up to the natural equivalence so the resulting
class counts are diagram invariants.
"""

from fractions import Fraction
from itertools import permutations

from .rings import ZZ, coercion


# -- small matrix helpers over a RingSpec ------------------------------------


def identity_matrix(ring, n):
    z, o = ring.zero(), ring.one()
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def mat_mul(ring, a, b):
    n, m, k = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = ring.zero()
            for l in range(k):
                acc = ring.add(acc, ring.mul(ai[l], b[l][j]))
            row.append(acc)
        out.append(row)
    return out


def mat_eq(ring, a, b):
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if not ring.eq(x, y):
                return False
    return True


def mat_inverse(ring, m):
    """Inverse of an invertible matrix over Z, Q, or a prime field."""
    n = len(m)
    if ring.kind == "Z":
        a = [[Fraction(x) for x in row] for row in m]
    else:
        a = [list(row) for row in m]
    if ring.kind == "Z":
        inv = _gauss_inverse_fraction(a)
        out = []
        for row in inv:
            orow = []
            for x in row:
                if x.denominator != 1:
                    raise ValueError("matrix is not invertible over the integers")
                orow.append(int(x))
            out.append(orow)
        return out
    if ring.is_field:
        return _gauss_inverse_field(ring, a)
    raise ValueError("matrix inversion unsupported over %r" % (ring,))


def _gauss_inverse_fraction(a):
    n = len(a)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        d = aug[col][col]
        aug[col] = [x / d for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _gauss_inverse_field(ring, a):
    n = len(a)
    z, o = ring.zero(), ring.one()
    aug = [list(row) + [o if i == j else z for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not ring.is_zero(aug[r][col])), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        d = ring.inv(aug[col][col])
        aug[col] = [ring.mul(d, x) for x in aug[col]]
        for r in range(n):
            if r != col and not ring.is_zero(aug[r][col]):
                f = aug[r][col]
                aug[r] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class Representation:
    """Matrix images for each generator of a presentation."""

    __slots__ = ("ring", "dim", "images", "inv_images")

    def __init__(self, ring, images, inv_images=None):
        self.ring = ring
        self.images = [tuple(tuple(x for x in row) for row in m) for m in images]
        if not self.images:
            raise ValueError("need at least one generator image")
        self.dim = len(self.images[0])
        for m in self.images:
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise ValueError("images must be square of equal size")
        if inv_images is None:
            inv_images = [mat_inverse(ring, m) for m in self.images]
        self.inv_images = [
            tuple(tuple(x for x in row) for row in m) for m in inv_images
        ]

    def image_letter(self, k):
        """Image of the signed generator letter k (1-based, negative inverse)."""
        return self.images[k - 1] if k > 0 else self.inv_images[-k - 1]

    def image_of_word(self, word):
        m = identity_matrix(self.ring, self.dim)
        for k in word.letters:
            m = mat_mul(self.ring, m, self.image_letter(k))
        return m

    def verify(self, presentation):
        ident = identity_matrix(self.ring, self.dim)
        for r in presentation.relators:
            if not mat_eq(self.ring, self.image_of_word(r), ident):
                return False
        return True

    def change_ring(self, new_ring):
        f = coercion(self.ring, new_ring)
        imgs = [[[f(x) for x in row] for row in m] for m in self.images]
        invs = [[[f(x) for x in row] for row in m] for m in self.inv_images]
        return Representation(new_ring, imgs, invs)


def trivial_representation(num_generators, ring=ZZ):
    one = [[ring.one()]]
    return Representation(ring, [one] * num_generators)


# -- Fox colorings and dihedral lifts ----------------------------------------


def coloring_space(diagram, p):
    """Basis of the space of Fox p-colorings (arc colors with
    in + out = 2 * over at every crossing), as vectors over F_p."""
    n = diagram.num_arcs
    rows = []
    for i, (t, os) in enumerate(zip(diagram.tuples, diagram.over_slots)):
        u = diagram.arc_of_edge[t[0]]
        v = diagram.arc_of_edge[t[2]]
        o = diagram.arc_of_edge[t[os]]
        row = [0] * n
        row[u] += 1
        row[v] += 1
        row[o] -= 2
        rows.append([x % p for x in row])
    return _nullspace_mod(rows, n, p)


def _nullspace_mod(rows, n, p):
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(n):
        piv = next(
            (r for r in range(rank, len(rows)) if rows[r][col] % p != 0), None
        )
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p != 0:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rows[r][fc]) % p
        basis.append(tuple(v))
    return basis


def coloring_classes(diagram, p):
    """Nontrivial Fox p-colorings up to affine equivalence c -> a c + b.

    Returns a sorted list of representative colorings (tuples of arc colors).
    """
    basis = coloring_space(diagram, p)
    k = len(basis)
    n = diagram.num_arcs
    seen = set()
    reps = []
    coeffs = [0] * k

    def all_vectors():
        # iterate F_p^k
        total = p ** k
        for idx in range(total):
            v = [0] * n
            rem = idx
            for b in basis:
                c = rem % p
                rem //= p
                if c:
                    for j in range(n):
                        v[j] = (v[j] + c * b[j]) % p
            yield tuple(v)

    for v in all_vectors():
        if len(set(v)) == 1:
            continue
        canon = min(
            tuple((a * c + b) % p for c in v)
            for a in range(1, p)
            for b in range(p)
        )
        if canon not in seen:
            seen.add(canon)
            reps.append(canon)
    expected, rem = divmod(p ** k - p, p * (p - 1))
    if rem != 0 or len(reps) != expected:
        raise AssertionError("coloring class count must match the orbit count")
    return sorted(reps)


def _companion_root_of_unity(p):
    """Multiplication by a primitive p-th root of unity on Z[x]/(1+x+...+x^(p-1)),
    in the power basis, together with the inversion x -> x^-1 matrix."""
    n = p - 1
    z = [[0] * n for _ in range(n)]
    for j in range(n - 1):
        z[j + 1][j] = 1
    for i in range(n):
        z[i][n - 1] = -1
    c = [[0] * n for _ in range(n)]
    c[0][0] = 1
    for i in range(n):
        c[i][1] = -1 if n > 1 else c[i][1]
    for j in range(2, n):
        c[p - j][j] = 1
    return z, c


def dihedral_lift(coloring, p):
    """Integral dihedral representation attached to a Fox p-coloring.

    The meridian of arc i maps to the order-two matrix C Z^(2 c_i) acting on
    the ring of integers of the p-th cyclotomic field, where Z multiplies by
    a primitive root of unity and C inverts it.  All images are involutions,
    so the representation never sees crossing signs.
    """
    z, c = _companion_root_of_unity(p)
    powers = [identity_matrix(ZZ, p - 1)]
    for _ in range(p - 1):
        powers.append(mat_mul(ZZ, powers[-1], z))
    images = []
    for col in coloring:
        m = mat_mul(ZZ, c, powers[(2 * col) % p])
        images.append(m)
    return Representation(ZZ, images, inv_images=images)


def dihedral_classes(diagram, p):
    """The dihedral representations of the diagram group mod p, one per
    coloring class."""
    return [dihedral_lift(col, p) for col in coloring_classes(diagram, p)]


# -- permutation representations ---------------------------------------------


def perm_compose(a, b):
    """a after b: (a*b)(i) = a[b[i]]."""
    return tuple(a[x] for x in b)


def perm_inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def cycle_type(perm):
    seen = [False] * len(perm)
    lens = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        l, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            l += 1
        lens.append(l)
    return tuple(sorted(lens))


def perm_class(n, ctype):
    """All permutations of degree n with the given sorted cycle type."""
    target = tuple(sorted(ctype))
    if sum(target) != n:
        raise ValueError("cycle type must partition the degree")
    return [p for p in permutations(range(n)) if cycle_type(p) == target]


def perm_parity(perm):
    """0 for even permutations, 1 for odd."""
    return (len(perm) - len(cycle_type(perm))) % 2


def _partitions(n, least=1):
    if n == 0:
        yield ()
        return
    for part in range(least, n + 1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def _wirtinger_constraints(presentation):
    """Extract (over, sign, under_in, under_out) from length-4 relators of
    the shape o^e u o^-e v^-1; other relators give None (verify-only)."""
    out = []
    for r in presentation.relators:
        ls = r.letters
        if (
            len(ls) == 4
            and ls[0] == -ls[2]
            and ls[1] > 0
            and ls[3] < 0
            and abs(ls[0]) != ls[1]
        ):
            o = abs(ls[0]) - 1
            e = 1 if ls[0] > 0 else -1
            u = ls[1] - 1
            v = -ls[3] - 1
            out.append((o, e, u, v))
        else:
            out.append(None)
    return out


class PermRep:
    """A permutation representation: one permutation per generator."""

    __slots__ = ("degree", "images")

    def __init__(self, degree, images):
        self.degree = degree
        self.images = tuple(tuple(p) for p in images)

    def image_of_word(self, word):
        m = tuple(range(self.degree))
        for k in word.letters:
            p = self.images[k - 1] if k > 0 else perm_inverse(self.images[-k - 1])
            m = perm_compose(m, p)
        return m

    def verify(self, presentation):
        ident = tuple(range(self.degree))
        return all(self.image_of_word(r) == ident for r in presentation.relators)

    def group_order(self):
        ident = tuple(range(self.degree))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for g in frontier:
                for h in self.images:
                    gh = perm_compose(g, h)
                    if gh not in seen:
                        seen.add(gh)
                        nxt.append(gh)
            frontier = nxt
        return len(seen)

    def canonical_key(self):
        """Lexicographically least image tuple over simultaneous conjugation."""
        best = None
        n = self.degree
        for s in permutations(range(n)):
            si = perm_inverse(s)
            key = tuple(
                perm_compose(s, perm_compose(p, si)) for p in self.images
            )
            if best is None or key < best:
                best = key
        return best

    def to_matrices(self, ring=ZZ):
        z, o = ring.zero(), ring.one()
        mats = []
        invs = []
        for p in self.images:
            m = [[z] * self.degree for _ in range(self.degree)]
            for j, i in enumerate(p):
                m[i][j] = o
            mats.append(m)
            invs.append([list(row) for row in zip(*m)])
        return Representation(ring, mats, invs)


def enumerate_perm_reps(presentation, meridian_pool, group_order=None):
    """All representations sending every generator into meridian_pool and
    satisfying the relators, up to simultaneous conjugation by the symmetric
    group.  group_order, when given, keeps only representations whose image
    subgroup has exactly that order.

    Propagates Wirtinger relations (two known images force the third) and
    branches only when stuck, so the search stays small.
    """
    n_gens = presentation.num_generators
    if not meridian_pool:
        return []
    degree = len(meridian_pool[0])
    pool = [tuple(p) for p in meridian_pool]
    pool_set = set(pool)
    constraints = [c for c in _wirtinger_constraints(presentation) if c]
    found = []

    def propagate(images):
        changed = True
        while changed:
            changed = False
            for o, e, u, v in constraints:
                po, pu, pv = images[o], images[u], images[v]
                if po is not None:
                    poi = perm_inverse(po)
                    a, b = (po, poi) if e > 0 else (poi, po)
                    if pu is not None:
                        w = perm_compose(a, perm_compose(pu, b))
                        if pv is None:
                            if w not in pool_set:
                                return False
                            images[v] = w
                            changed = True
                        elif pv != w:
                            return False
                    elif pv is not None:
                        w = perm_compose(b, perm_compose(pv, a))
                        if w not in pool_set:
                            return False
                        images[u] = w
                        changed = True
        return True

    def search(images):
        free = next((i for i in range(n_gens) if images[i] is None), None)
        if free is None:
            rep = PermRep(degree, images)
            if rep.verify(presentation):
                if group_order is None or rep.group_order() == group_order:
                    found.append(rep)
            return
        base = list(images)
        for cand in pool:
            trial = list(base)
            trial[free] = cand
            if propagate(trial):
                search(trial)

    start = [None] * n_gens
    # fix the first generator's image to kill most of the conjugation action
    first = [None] * n_gens
    first[0] = pool[0]
    if propagate(first):
        search(first)
    # remaining conjugation symmetry: dedupe by canonical form
    seen = set()
    out = []
    for rep in found:
        key = rep.canonical_key()
        if key not in seen:
            seen.add(key)
            out.append(rep)
    return out


def enumerate_perm_rep_classes(presentation, degree, image="any"):
    """Permutation representations of the given degree, one search per
    nontrivial meridian conjugacy class, up to simultaneous conjugation.

    All Wirtinger generators are conjugate, so their images share a cycle
    type; the search runs once per type.  image narrows the result:

      "any"          every representation found
      "alternating"  image subgroup is the full alternating group
      "symmetric"    image subgroup is the full symmetric group
    """
    from math import factorial

    full = factorial(degree)
    out = []
    for ctype in _partitions(degree):
        if all(l == 1 for l in ctype):
            continue  # identity meridians carry no information
        pool = perm_class(degree, ctype)
        if image == "alternating" and perm_parity(pool[0]):
            continue  # odd meridians cannot land in the alternating group
        for rep in enumerate_perm_reps(presentation, pool):
            if image == "alternating" and rep.group_order() != full // 2:
                continue
            if image == "symmetric" and rep.group_order() != full:
                continue
            out.append(rep)
    return out
