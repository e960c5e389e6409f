"""Benchmark the determinant and scan kernels, compiled vs pure Python.

Run as: python benchmarks/bench_det.py
"""

import random
import time

from knotperiod.detkernel import both_backends

P = 99991


def bench_det(mod, size, reps):
    rng = random.Random(7)
    mats = [
        [rng.randrange(P) for _ in range(size * size)] for _ in range(reps)
    ]
    t0 = time.perf_counter()
    acc = 0
    for flat in mats:
        acc ^= mod.det_mod(list(flat), size, P)
    dt = time.perf_counter() - t0
    return dt, acc


def bench_scan(mod, strands, length):
    n = strands
    letters = 2 * (n - 1)
    k = n - 1
    points = [17, pow(17, -1, P), 3141, pow(3141, -1, P)]

    def burau(j, x):
        m = [[1 if a == b else 0 for b in range(k)] for a in range(k)]
        c = j - 1
        m[c][c] = (-x) % P
        if c >= 1:
            m[c - 1][c] = x % P
        if c + 1 < k:
            m[c + 1][c] = 1
        return m

    def inv(mat):
        size = len(mat)
        aug = [row[:] + [1 if i == j else 0 for j in range(size)] for i, row in enumerate(mat)]
        for col in range(size):
            piv = next(i for i in range(col, size) if aug[i][col] % P)
            aug[col], aug[piv] = aug[piv], aug[col]
            s = pow(aug[col][col], P - 2, P)
            aug[col] = [v * s % P for v in aug[col]]
            for i in range(size):
                if i != col and aug[i][col]:
                    f = aug[i][col]
                    aug[i] = [(a - f * b) % P for a, b in zip(aug[i], aug[col])]
        return [row[size:] for row in aug]

    mats = []
    for x in points:
        tab = []
        for j in range(1, n):
            b = burau(j, x)
            tab.append(b)
            tab.append(inv(b))
        # interleave: letter 2(j-1) is sigma_j, 2(j-1)+1 its inverse
        mats.append([tab[2 * (jj // 2) + (jj % 2)] for jj in range(letters)])
    perms = []
    for j in range(1, n):
        pr = list(range(n))
        pr[j - 1], pr[j] = pr[j], pr[j - 1]
        perms.extend([tuple(pr), tuple(pr)])
    inv_of = [l ^ 1 for l in range(letters)]
    gen_of = [l // 2 for l in range(letters)]
    targets = [1, 1]
    t0 = time.perf_counter()
    words = mod.scan_words(
        letters, k, length, P, mats, perms, inv_of, gen_of, n - 1,
        targets, 0, True, 1000,
    )
    dt = time.perf_counter() - t0
    return dt, len(words)


def main():
    backends = both_backends()
    print("backends available:", ", ".join(name for name, _ in backends))
    print()
    print("det_mod, random matrices mod %d" % P)
    for size, reps in ((8, 2000), (24, 300), (48, 60)):
        row = ["  %2dx%-2d x%-5d" % (size, size, reps)]
        base = None
        for name, mod in backends:
            dt, _ = bench_det(mod, size, reps)
            if base is None:
                base = dt
            row.append("%s %.3fs" % (name, dt))
        if len(backends) == 2:
            row.append("(x%.1f)" % ((dt / base) if base else 0.0))
        print(" ".join(row))
    print()
    print("scan_words, 3-strand braid surface")
    for length in (12, 14):
        row = ["  L=%-3d" % length]
        base = None
        for name, mod in backends:
            dt, hits = bench_scan(mod, 3, length)
            if base is None:
                base = dt
            row.append("%s %.3fs (%d hits)" % (name, dt, hits))
        if len(backends) == 2:
            row.append("(x%.1f)" % ((dt / base) if base else 0.0))
        print(" ".join(row))


if __name__ == "__main__":
    main()
