"""Exact integer linear algebra: Smith form with column transform, and
solving linear combinations modulo a product of cyclic moduli."""

from math import lcm

from ._pykernel import Lattice, xgcd


def smith_with_transform(A):
    """Diagonalize a nonsingular square integer matrix.

    Returns ``(D, V, Vinv)`` with ``U A V = diag(D)`` for some unimodular U,
    ``D[0] | D[1] | ...`` and all ``D[i] > 0``. Only the column transform is
    tracked, since that is what maps Z^n / rowspace(A) onto the cyclic
    factors: ``x -> x V`` reduced mod D.
    """
    n = len(A)
    A = [list(row) for row in A]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vinv = [row[:] for row in V]

    def col_op(j, t, q):
        # column j -= q * column t
        for row in A:
            row[j] -= q * row[t]
        for row in V:
            row[j] -= q * row[t]
        Vinv[t] = [a + q * b for a, b in zip(Vinv[t], Vinv[j])]

    def col_swap(a, b):
        for row in A:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]
        Vinv[a], Vinv[b] = Vinv[b], Vinv[a]

    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                raise ValueError("matrix is singular")
            i, j = best
            A[t], A[i] = A[i], A[t]
            if j != t:
                col_swap(t, j)
            if A[t][t] < 0:
                A[t] = [-a for a in A[t]]
            p = A[t][t]
            clean = True
            for i in range(t + 1, n):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    col_op(j, t, q)
                if A[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next((i for i in range(t + 1, n)
                        for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
    return [A[i][i] for i in range(n)], V, Vinv


def solve_combination(vectors, target, factors):
    """Integers c with sum c_r * vectors[r] == target (mod factors), or None.

    Coefficients are taken modulo the exponent E = lcm(factors), and the
    returned solution is the lexicographically least one in [0, E)^m.
    """
    k = len(factors)
    m = len(vectors)
    E = lcm(*factors) if factors else 1
    rows = [list(v) + [int(r == s) for s in range(m)] for r, v in enumerate(vectors)]
    rows += [[factors[t] * (t == c) for c in range(k)] + [0] * m for t in range(k)]
    pivots = []
    kernel = []
    for col in range(k):
        live = [r for r in rows if r[col]]
        if not live:
            continue
        rest = [r for r in rows if not r[col]]
        piv = live[0]
        reduced = []
        for r in live[1:]:
            a, b = piv[col], r[col]
            if b % a == 0:
                q = b // a
                reduced.append([y - q * x for x, y in zip(piv, r)])
                continue
            x, y, g = xgcd(a, b)
            new = [x * u + y * v for u, v in zip(piv, r)]
            reduced.append([(a // g) * v - (b // g) * u for u, v in zip(piv, r)])
            piv = new
        rest += [r for r in reduced if any(r[:k])]
        kernel += [r[k:] for r in reduced if not any(r[:k])]
        piv[k:] = [c % E for c in piv[k:]]
        pivots.append((col, piv))
        rows = rest
    t = list(target)
    coef = [0] * m
    for col, piv in pivots:
        if t[col] % piv[col]:
            return None
        q = t[col] // piv[col]
        for c in range(k):
            t[c] -= q * piv[c]
        for s in range(m):
            coef[s] += q * piv[k + s]
    if any(t):
        return None
    kernel += [r[k:] for r in rows]
    return least_in_coset(coef, kernel, E)


def least_in_coset(v, generators, E):
    """Lexicographically least element of v + span(generators) in (Z/E)^m."""
    m = len(v)
    lat = Lattice([E] * m)
    for g in generators:
        lat.add([c % E for c in g])
    v = [c % E for c in v]
    for j, row in enumerate(lat.rows()):
        h = row[j]
        q = v[j] // h
        if q:
            v = [(a - q * b) % E for a, b in zip(v, row)]
    return v
