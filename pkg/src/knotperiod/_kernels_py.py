"""Pure-Python modular matrix kernels.

Reference implementations of the hot numeric loops: determinants of integer
matrices modulo a word-sized prime, and a depth-first scan over words in a
free monoid of matrices (used to sieve braid closures by evaluated
determinant invariants).  The compiled module ``_kernels`` provides the same
API; ``detkernel`` picks whichever is available at import time.
"""

BACKEND = "python"


def det_mod(flat, n, p):
    """Determinant of an n x n integer matrix (row-major flat list) mod p."""
    a = [x % p for x in flat]
    det = 1
    for col in range(n):
        pivot = -1
        for r in range(col, n):
            if a[r * n + col]:
                pivot = r
                break
        if pivot < 0:
            return 0
        if pivot != col:
            for c in range(col, n):
                a[col * n + c], a[pivot * n + c] = a[pivot * n + c], a[col * n + c]
            det = (-det) % p
        piv = a[col * n + col]
        det = det * piv % p
        inv = pow(piv, p - 2, p)
        for r in range(col + 1, n):
            f = a[r * n + col]
            if f:
                f = f * inv % p
                for c in range(col, n):
                    a[r * n + c] = (a[r * n + c] - f * a[col * n + c]) % p
    return det % p


def _matmul(a, b, k, p):
    out = [0] * (k * k)
    for i in range(k):
        for j in range(k):
            s = 0
            for m in range(k):
                s += a[i * k + m] * b[m * k + j]
            out[i * k + j] = s % p
    return out


def _det_minus_identity(m, k, p):
    flat = list(m)
    for i in range(k):
        flat[i * k + i] = (flat[i * k + i] - 1) % p
    return det_mod(flat, k, p)


def scan_words(num_letters, k, length, p, mats, perms, inv_of, gen_of, num_gens,
               targets, first_letter, require_cycle, limit):
    """DFS over words of the given length; collect words passing all sieves.

    mats: per evaluation point, a list of num_letters flat k x k matrices
          (list of lists); every point uses the same prime p.
    perms: per letter, the strand permutation as a tuple of length k + 1.
    inv_of: per letter, the index of its inverse letter (adjacent-inverse
          words are pruned, and words whose last letter inverts the first).
    gen_of: per letter, its generator class in [0, num_gens); a word must use
          every class at least twice (closures where some generator appears
          once reduce to fewer strands and are found by smaller scans).
    targets: per pair of evaluation points (2i, 2i+1), the required value of
          det(M(x) - I) * det(M(1/x) - I) mod p.
    first_letter: forced letter index at position 0 (or -1 for free).
    require_cycle: when true, only words whose permutation is a full cycle
          on k + 1 strands are reported.
    limit: stop after this many matches.

    Returns a list of words (tuples of letter indices).
    """
    npts = len(mats)
    identity = [0] * (k * k)
    for i in range(k):
        identity[i * k + i] = 1

    matches = []
    word = [0] * length
    # prefix[d][pt] = product of letter matrices word[0..d-1] at that point
    prefix = [[identity] * npts]
    perm0 = tuple(range(k + 1))
    perm_stack = [perm0]
    counts = [0] * num_gens

    def rec(depth):
        if len(matches) >= limit:
            return
        if depth == length:
            if any(c < 2 for c in counts):
                return
            if inv_of[word[-1]] == word[0]:
                return
            perm = perm_stack[-1]
            if require_cycle:
                seen, cur = 1, perm[0]
                while cur != 0:
                    cur = perm[cur]
                    seen += 1
                if seen != k + 1:
                    return
            prods = prefix[-1]
            for t in range(len(targets)):
                d1 = _det_minus_identity(prods[2 * t], k, p)
                d2 = _det_minus_identity(prods[2 * t + 1], k, p)
                if d1 * d2 % p != targets[t]:
                    return
            matches.append(tuple(word))
            return
        # prune: remaining slots must fit the unused generator classes
        deficit = sum(max(0, 2 - c) for c in counts)
        if deficit > length - depth:
            return
        choices = [first_letter] if (depth == 0 and first_letter >= 0) else range(num_letters)
        for ell in choices:
            if depth > 0 and inv_of[ell] == word[depth - 1]:
                continue
            word[depth] = ell
            counts[gen_of[ell]] += 1
            prev = prefix[-1]
            prefix.append([_matmul(prev[pt], mats[pt][ell], k, p) for pt in range(npts)])
            pperm = perm_stack[-1]
            lperm = perms[ell]
            perm_stack.append(tuple(lperm[pperm[i]] for i in range(k + 1)))
            rec(depth + 1)
            prefix.pop()
            perm_stack.pop()
            counts[gen_of[ell]] -= 1
            if len(matches) >= limit:
                return

    rec(0)
    return matches
