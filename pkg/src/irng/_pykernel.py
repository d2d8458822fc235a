"""Pure-Python hot kernels.

Mirrors :mod:`irng._ckernel` exactly; used when the extension is not built
or when ``IRNG_PURE_PYTHON=1`` is set.
"""

BACKEND = "python"


def xgcd(a, b):
    # x*a + y*b == g, carried through the Euclidean algorithm
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class RngKernel:
    """Bilinear multiplication for a rng on Z/d_1 x ... x Z/d_k.

    ``constants[i][j]`` is the coefficient vector of e_i * e_j.
    """

    __slots__ = ["k", "factors", "sparse"]

    def __init__(self, factors, constants):
        self.factors = tuple(factors)
        self.k = k = len(self.factors)
        # sparse[i*k + j] = ((t, c), ...) with c != 0
        self.sparse = [
            tuple((t, c) for t, c in enumerate(constants[i][j]) if c)
            for i in range(k)
            for j in range(k)
        ]

    def mul(self, x, y):
        k = self.k
        out = [0] * k
        sparse = self.sparse
        for i in range(k):
            xi = x[i]
            if not xi:
                continue
            base = i * k
            for j in range(k):
                yj = y[j]
                if not yj:
                    continue
                s = xi * yj
                for t, c in sparse[base + j]:
                    out[t] += s * c
        d = self.factors
        return tuple(out[t] % d[t] for t in range(k))

    def el_mul(self, A, B, n):
        """Entries of M where I+M = (I+A)(I+B), all flat row-major."""
        k = self.k
        d = self.factors
        mul = self.mul
        out = list(A)
        for t in range(len(B)):
            out[t] += B[t]
        for i in range(n):
            for l in range(n):
                off = (i * n + l) * k
                a = A[off:off + k]
                if not any(a):
                    continue
                for j in range(n):
                    boff = (l * n + j) * k
                    b = B[boff:boff + k]
                    if not any(b):
                        continue
                    p = mul(a, b)
                    ooff = (i * n + j) * k
                    for t in range(k):
                        out[ooff + t] += p[t]
        for idx in range(len(out)):
            out[idx] %= d[idx % k] if k else 1
        return tuple(out)


class Lattice:
    """Sublattice of Z^k containing d_1 Z + ... + d_k Z, kept in HNF.

    Row j of ``H`` has zeros before column j, pivot ``H[j][j] | d_j`` and
    entries ``0 <= H[i][j] < H[j][j]`` above the pivot.
    """

    __slots__ = ["k", "factors", "H"]

    def __init__(self, factors):
        self.factors = d = tuple(factors)
        self.k = k = len(d)
        self.H = [[d[i] if i == j else 0 for j in range(k)] for i in range(k)]

    def copy(self):
        other = object.__new__(Lattice)
        other.k = self.k
        other.factors = self.factors
        other.H = [row[:] for row in self.H]
        return other

    def add(self, vec):
        """Insert ``vec``; return True iff the lattice grew."""
        d = self.factors
        k = self.k
        H = self.H
        v = [vec[t] % d[t] for t in range(k)]
        changed = False
        for j in range(k):
            a = v[j]
            if not a:
                continue
            row = H[j]
            h = row[j]
            if a % h == 0:
                q = a // h
                for t in range(j, k):
                    v[t] = (v[t] - q * row[t]) % d[t]
                continue
            x, y, g = xgcd(h, a)
            hg = h // g
            ag = a // g
            for t in range(j, k):
                rt = row[t]
                vt = v[t]
                row[t] = (x * rt + y * vt) % d[t]
                v[t] = (hg * vt - ag * rt) % d[t]
            row[j] = g
            v[j] = 0
            changed = True
        if changed:
            self._normalize()
        return changed

    def _normalize(self):
        d = self.factors
        k = self.k
        H = self.H
        for j in range(k):
            pj = H[j]
            h = pj[j]
            for i in range(j):
                ri = H[i]
                q = ri[j] // h
                if q:
                    for t in range(j, k):
                        ri[t] -= q * pj[t]
                    for t in range(j + 1, k):
                        ri[t] %= d[t]

    def contains(self, vec):
        d = self.factors
        k = self.k
        H = self.H
        v = [vec[t] % d[t] for t in range(k)]
        for j in range(k):
            a = v[j]
            if not a:
                continue
            row = H[j]
            h = row[j]
            if a % h:
                return False
            q = a // h
            for t in range(j + 1, k):
                v[t] = (v[t] - q * row[t]) % d[t]
        return True

    def rows(self):
        return tuple(tuple(row) for row in self.H)

    def diagonal(self):
        return tuple(self.H[j][j] for j in range(self.k))

    def is_full(self):
        return all(self.H[j][j] == 1 for j in range(self.k))
