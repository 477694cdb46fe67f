"""Independent reference computations used to freeze and cross-check expected values.

Nothing here calls into the Smith normal form code; these are the slow,
obviously-correct routes (rational elimination, minors, brute force).
"""

import itertools
from fractions import Fraction
from math import gcd

import numpy as np


def det_fraction(m):
    """Determinant by rational Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return int(det)


def rank_fraction(m):
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def minors_gcd(m, k):
    """gcd of all k x k minors (0 if all vanish); stops early once it reaches 1."""
    rows, cols = len(m), len(m[0])
    g = 0
    for rs in itertools.combinations(range(rows), k):
        for cs in itertools.combinations(range(cols), k):
            g = gcd(g, det_fraction([[m[i][j] for j in cs] for i in rs]))
            if g == 1:
                return 1
    return g


def invariant_factors_by_minors(m):
    """Diagonal of the Smith form via e_i = g_i / g_{i-1}, zeros for i > rank."""
    rows, cols = len(m), len(m[0])
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = minors_gcd(m, k)
        if g == 0:
            out.extend([0] * (min(rows, cols) - k + 1))
            break
        out.append(g // prev)
        prev = g
    return out


def cokernel_order_and_exponent(m):
    """For a nonsingular square integer matrix: |Z^n / M Z^n| and its exponent.

    The exponent is the least k with k * M^{-1} integral.
    """
    n = len(m)
    order = abs(det_fraction(m))
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    inv = [row[n:] for row in aug]
    k = 1
    for row in inv:
        for x in row:
            k = k * x.denominator // gcd(k, x.denominator)
    return order, k


def rational_kernel_dim(m):
    return len(m[0]) - rank_fraction(m)


def solve_rational_particular(lap, d):
    """Some rational f with lap f = d (lap of rank n-1), or None if d is outside the image."""
    n = len(lap)
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(lap, d)]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, n) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(n):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    if any(a[i][n] != 0 for i in range(r, n)):
        return None
    f = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        f[c] = a[i][n]
    return f


def principal_by_rationals(lap, r, d):
    """Is d = lap f for integer f?  General solution is f0 + t r, t rational."""
    f0 = solve_rational_particular(lap, d)
    if f0 is None:
        return False
    j = next(i for i, x in enumerate(r) if x)
    for m in range(abs(r[j])):
        t = (m - f0[j]) / r[j]
        if all((x + t * y).denominator == 1 for x, y in zip(f0, r)):
            return True
    return False


def count_classes_bruteforce(lap, r, box):
    """|Div^0 / Prin| by sorting box divisors into classes with the rational oracle."""
    n = len(r)
    reps = []
    for d in itertools.product(range(-box, box + 1), repeat=n):
        if sum(x * y for x, y in zip(d, r)) != 0:
            continue
        if not any(principal_by_rationals(lap, r, [a - b for a, b in zip(d, e)]) for e in reps):
            reps.append(d)
    return len(reps)


def structures_bruteforce(neighbors, max_r):
    """All (r, s) with r in [1, max_r]^n, gcd 1, and r(v) dividing the neighbour sum."""
    n = len(neighbors)
    out = []
    for r in itertools.product(range(1, max_r + 1), repeat=n):
        g = 0
        for x in r:
            g = gcd(g, x)
        if g != 1:
            continue
        sums = [sum(r[w] for w in neighbors[v]) for v in range(n)]
        if all(t % x == 0 for t, x in zip(sums, r)):
            out.append((r, tuple(t // x for t, x in zip(sums, r))))
    return out


def graph_morphisms_bruteforce(n2, edges2, n1, edges1):
    adj1 = {(a, b) for a, b in edges1} | {(b, a) for a, b in edges1}
    out = []
    for vm in itertools.product(range(n1), repeat=n2):
        if all(vm[a] == vm[b] or (vm[a], vm[b]) in adj1 for a, b in edges2):
            out.append(vm)
    return out


def is_harmonic_bruteforce(vm, n2, edges2, n1, edges1):
    """Count, for each v and each edge f at phi(v), the edges at v over f."""
    for v in range(n2):
        x = vm[v]
        counts = []
        for a, b in edges1:
            if x not in (a, b):
                continue
            counts.append(
                sum(1 for p, q in edges2 if v in (p, q) and {vm[p], vm[q]} == {a, b})
            )
        if len(set(counts)) > 1:
            return False
    return True


def adjacency_identity_batch(a2, a1, maps):
    """For each vertex map: does A2 Phi == D_nu Phi + D_mu Phi A1 hold for some mu?

    nu is the vertical multiplicity; mu(v) is read off at the first neighbour
    of phi(v) and then the whole identity is checked.
    """
    a2 = np.asarray(a2, dtype=np.int64)
    a1 = np.asarray(a1, dtype=np.int64)
    maps = np.asarray(maps, dtype=np.int64)
    n_maps, n2 = maps.shape
    n1 = a1.shape[0]
    phi = np.zeros((n_maps, n2, n1), dtype=np.int64)
    phi[np.arange(n_maps)[:, None], np.arange(n2)[None, :], maps] = 1
    a2phi = np.einsum("ij,mjk->mik", a2, phi)
    rows = np.arange(n2)[None, :]
    nu = a2phi[np.arange(n_maps)[:, None], rows, maps]
    first_nb = np.array([np.flatnonzero(a1[x])[0] for x in range(n1)])
    mu = a2phi[np.arange(n_maps)[:, None], rows, first_nb[maps]]
    rhs = nu[:, :, None] * phi + mu[:, :, None] * np.einsum("mik,kl->mil", phi, a1)
    return np.all(a2phi == rhs, axis=(1, 2))
