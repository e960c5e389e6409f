# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled modular matrix kernels.

Same API as ``_kernels_py``: word-sized modular determinants and the braid
word scan.  Primes must stay below 2**30 so that k products fit in int64.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef int64_t _pow_mod(int64_t a, int64_t e, int64_t p) nogil:
    cdef int64_t r = 1
    a = a % p
    while e:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


cdef int64_t _det_mod_c(int64_t* a, int n, int64_t p) nogil:
    """Determinant mod p; destroys the buffer.  Entries must lie in [0, p)."""
    cdef int col, r, c, pivot
    cdef int64_t det = 1, piv, inv, f, tmp, v
    for col in range(n):
        pivot = -1
        for r in range(col, n):
            if a[r * n + col] != 0:
                pivot = r
                break
        if pivot < 0:
            return 0
        if pivot != col:
            for c in range(col, n):
                tmp = a[col * n + c]
                a[col * n + c] = a[pivot * n + c]
                a[pivot * n + c] = tmp
            det = p - det
        piv = a[col * n + col]
        det = det * piv % p
        inv = _pow_mod(piv, p - 2, p)
        for r in range(col + 1, n):
            f = a[r * n + col] * inv % p
            if f != 0:
                for c in range(col, n):
                    v = (a[r * n + c] - f * a[col * n + c]) % p
                    if v < 0:
                        v += p
                    a[r * n + c] = v
    if det == p:
        det = 0
    return det


def det_mod(flat, int n, p):
    """Determinant of an n x n integer matrix (row-major flat list) mod p."""
    cdef int64_t pp = p
    cdef int64_t* buf = <int64_t*> malloc(n * n * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    try:
        for i in range(n * n):
            buf[i] = flat[i] % p
        return _det_mod_c(buf, n, pp)
    finally:
        free(buf)


cdef void _matmul(int64_t* a, int64_t* b, int64_t* out, int k, int64_t p) nogil:
    cdef int i, j, m
    cdef int64_t s
    for i in range(k):
        for j in range(k):
            s = 0
            for m in range(k):
                s += a[i * k + m] * b[m * k + j]
            out[i * k + j] = s % p


cdef int64_t _det_minus_identity(int64_t* m, int k, int64_t p) nogil:
    cdef int64_t buf[64]
    cdef int i
    for i in range(k * k):
        buf[i] = m[i]
    for i in range(k):
        buf[i * k + i] = buf[i * k + i] - 1
        if buf[i * k + i] < 0:
            buf[i * k + i] += p
    return _det_mod_c(buf, k, p)


def scan_words(int num_letters, int k, int length, p, mats, perms, inv_of,
               gen_of, int num_gens, targets, int first_letter,
               bint require_cycle, int limit):
    """DFS over words of letter matrices; see _kernels_py.scan_words."""
    cdef int64_t pp = p
    cdef int npts = len(mats)
    cdef int ntarg = len(targets)
    cdef int kk = k * k
    cdef int b = k + 1
    if k > 8 or npts > 8 or num_letters > 31 or length > 30 or num_gens > 15:
        raise ValueError("scan parameters out of range")

    # letter matrices: [pt][letter][k*k]
    cdef int64_t* lmats = <int64_t*> malloc(npts * num_letters * kk * sizeof(int64_t))
    # prefix products: [depth][pt][k*k]
    cdef int64_t* prefix = <int64_t*> malloc((length + 1) * npts * kk * sizeof(int64_t))
    # permutations: letters then the prefix stack, each of size b
    cdef int* lperm = <int*> malloc(num_letters * b * sizeof(int))
    cdef int* pperm = <int*> malloc((length + 1) * b * sizeof(int))
    cdef int* c_inv = <int*> malloc(num_letters * sizeof(int))
    cdef int* c_gen = <int*> malloc(num_letters * sizeof(int))
    cdef int64_t* c_targ = <int64_t*> malloc((ntarg if ntarg else 1) * sizeof(int64_t))
    cdef int* counts = <int*> malloc((num_gens if num_gens else 1) * sizeof(int))
    cdef int* word = <int*> malloc((length if length else 1) * sizeof(int))
    if (lmats == NULL or prefix == NULL or lperm == NULL or pperm == NULL or
            c_inv == NULL or c_gen == NULL or c_targ == NULL or counts == NULL or word == NULL):
        raise MemoryError()

    cdef int i, j, pt, ell, depth, t, seen, cur, ok, deficit
    cdef int64_t d1, d2
    matches = []
    try:
        for pt in range(npts):
            row = mats[pt]
            for ell in range(num_letters):
                m = row[ell]
                for i in range(kk):
                    lmats[(pt * num_letters + ell) * kk + i] = m[i] % pp
        for ell in range(num_letters):
            pm = perms[ell]
            for i in range(b):
                lperm[ell * b + i] = pm[i]
            c_inv[ell] = inv_of[ell]
            c_gen[ell] = gen_of[ell]
        for t in range(ntarg):
            c_targ[t] = targets[t] % pp
        for i in range(num_gens):
            counts[i] = 0
        for pt in range(npts):
            for i in range(kk):
                prefix[pt * kk + i] = 0
            for i in range(k):
                prefix[pt * kk + i * k + i] = 1
        for i in range(b):
            pperm[i] = i

        # iterative DFS; word[depth] holds the current letter at each depth
        depth = 0
        word[0] = first_letter if first_letter >= 0 else 0
        while depth >= 0:
            ell = word[depth]
            if ell >= num_letters or (depth == 0 and first_letter >= 0 and ell > first_letter):
                depth -= 1
                if depth >= 0:
                    counts[c_gen[word[depth]]] -= 1
                    word[depth] += 1
                continue
            # prune: adjacent inverse letters
            if depth > 0 and c_inv[ell] == word[depth - 1]:
                word[depth] += 1
                continue
            counts[c_gen[ell]] += 1
            # prune: unused generator classes cannot fit in remaining slots
            deficit = 0
            for i in range(num_gens):
                if counts[i] < 2:
                    deficit += 2 - counts[i]
            if deficit > length - depth - 1:
                counts[c_gen[ell]] -= 1
                word[depth] += 1
                continue
            for pt in range(npts):
                _matmul(prefix + (depth * npts + pt) * kk,
                        lmats + (pt * num_letters + ell) * kk,
                        prefix + ((depth + 1) * npts + pt) * kk, k, pp)
            for i in range(b):
                pperm[(depth + 1) * b + i] = lperm[ell * b + pperm[depth * b + i]]
            if depth + 1 == length:
                ok = 1
                if c_inv[word[length - 1]] == word[0]:
                    ok = 0
                if ok:
                    for i in range(num_gens):
                        if counts[i] < 2:
                            ok = 0
                            break
                if ok and require_cycle:
                    seen = 1
                    cur = pperm[length * b]
                    while cur != 0 and seen <= b:
                        cur = pperm[length * b + cur]
                        seen += 1
                    if seen != b:
                        ok = 0
                if ok:
                    for t in range(ntarg):
                        d1 = _det_minus_identity(prefix + (length * npts + 2 * t) * kk, k, pp)
                        d2 = _det_minus_identity(prefix + (length * npts + 2 * t + 1) * kk, k, pp)
                        if d1 * d2 % pp != c_targ[t]:
                            ok = 0
                            break
                if ok:
                    out = []
                    for i in range(length):
                        out.append(word[i])
                    matches.append(tuple(out))
                    if len(matches) >= limit:
                        return matches
                counts[c_gen[ell]] -= 1
                word[depth] += 1
            else:
                depth += 1
                word[depth] = 0
    finally:
        free(lmats)
        free(prefix)
        free(lperm)
        free(pperm)
        free(c_inv)
        free(c_gen)
        free(c_targ)
        free(counts)
        free(word)
    return matches
