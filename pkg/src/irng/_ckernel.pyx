# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same interface as :mod:`irng._pykernel`.

All moduli must be below ``MAX_MODULUS`` so that every intermediate product
fits in a signed 64-bit integer.
"""

from libc.stdlib cimport malloc, calloc, free

BACKEND = "cython"
MAX_MODULUS = 1 << 20


cdef inline long long _mod(long long a, long long m) nogil:
    cdef long long r = a % m
    if r < 0:
        r += m
    return r


cdef void _xgcd(long long a, long long b, long long *x, long long *y, long long *g) nogil:
    cdef long long x0 = 1, x1 = 0, y0 = 0, y1 = 1, g0 = a, g1 = b, q, tmp
    while g1 != 0:
        q = g0 // g1
        if (g0 % g1 != 0) and ((g0 < 0) != (g1 < 0)):
            q -= 1
        tmp = x0 - q * x1; x0 = x1; x1 = tmp
        tmp = y0 - q * y1; y0 = y1; y1 = tmp
        tmp = g0 - q * g1; g0 = g1; g1 = tmp
    if g0 < 0:
        x0 = -x0; y0 = -y0; g0 = -g0
    x[0] = x0; y[0] = y0; g[0] = g0


def xgcd(long long a, long long b):
    cdef long long x, y, g
    _xgcd(a, b, &x, &y, &g)
    return x, y, g


cdef class RngKernel:
    cdef readonly int k
    cdef readonly tuple factors
    cdef long long *d
    cdef int *nz_start
    cdef int *nz_t
    cdef long long *nz_c
    cdef long long *buf

    def __cinit__(self, factors, constants):
        cdef int k = len(factors)
        cdef int i, j, t, pos, total = 0
        self.k = k
        self.factors = tuple(int(f) for f in factors)
        for f in self.factors:
            if f >= MAX_MODULUS:
                raise OverflowError("modulus too large for compiled kernel")
        self.d = <long long *> malloc(max(k, 1) * sizeof(long long))
        self.buf = <long long *> calloc(max(k, 1) * 3, sizeof(long long))
        self.nz_start = <int *> malloc((k * k + 1) * sizeof(int))
        for i in range(k):
            self.d[i] = self.factors[i]
            for j in range(k):
                for t in range(k):
                    if constants[i][j][t]:
                        total += 1
        self.nz_t = <int *> malloc(max(total, 1) * sizeof(int))
        self.nz_c = <long long *> malloc(max(total, 1) * sizeof(long long))
        pos = 0
        for i in range(k):
            for j in range(k):
                self.nz_start[i * k + j] = pos
                for t in range(k):
                    c = constants[i][j][t]
                    if c:
                        self.nz_t[pos] = t
                        self.nz_c[pos] = c
                        pos += 1
        self.nz_start[k * k] = pos

    def __dealloc__(self):
        free(self.d)
        free(self.buf)
        free(self.nz_start)
        free(self.nz_t)
        free(self.nz_c)

    cdef void _mul(self, long long *x, long long *y, long long *out) nogil:
        cdef int k = self.k
        cdef int i, j, p, t
        cdef long long s
        for t in range(k):
            out[t] = 0
        for i in range(k):
            if x[i] == 0:
                continue
            for j in range(k):
                if y[j] == 0:
                    continue
                s = x[i] * y[j]
                for p in range(self.nz_start[i * k + j], self.nz_start[i * k + j + 1]):
                    t = self.nz_t[p]
                    out[t] = (out[t] + s * self.nz_c[p]) % self.d[t]
        for t in range(k):
            out[t] = _mod(out[t], self.d[t])

    def mul(self, x, y):
        cdef int k = self.k
        cdef int t
        cdef long long *a = self.buf
        cdef long long *b = self.buf + k
        cdef long long *o = self.buf + 2 * k
        for t in range(k):
            a[t] = x[t]
            b[t] = y[t]
        self._mul(a, b, o)
        return tuple([o[t] for t in range(k)])

    def el_mul(self, A, B, int n):
        """Entries of M where I+M = (I+A)(I+B), all flat row-major."""
        cdef int k = self.k
        cdef int size = n * n * k
        cdef int i, j, l, t, aoff, boff, ooff
        cdef bint anz, bnz
        if size == 0:
            return ()
        cdef long long *a = <long long *> malloc(size * sizeof(long long))
        cdef long long *b = <long long *> malloc(size * sizeof(long long))
        cdef long long *o = <long long *> malloc(size * sizeof(long long))
        cdef long long *p = <long long *> malloc(k * sizeof(long long))
        try:
            for t in range(size):
                a[t] = A[t]
                b[t] = B[t]
                o[t] = a[t] + b[t]
            for i in range(n):
                for l in range(n):
                    aoff = (i * n + l) * k
                    anz = False
                    for t in range(k):
                        if a[aoff + t] != 0:
                            anz = True
                            break
                    if not anz:
                        continue
                    for j in range(n):
                        boff = (l * n + j) * k
                        bnz = False
                        for t in range(k):
                            if b[boff + t] != 0:
                                bnz = True
                                break
                        if not bnz:
                            continue
                        self._mul(a + aoff, b + boff, p)
                        ooff = (i * n + j) * k
                        for t in range(k):
                            o[ooff + t] += p[t]
            for t in range(size):
                o[t] = _mod(o[t], self.d[t % k])
            return tuple([o[t] for t in range(size)])
        finally:
            free(a)
            free(b)
            free(o)
            free(p)


cdef class Lattice:
    """Sublattice of Z^k containing d_1 Z + ... + d_k Z, kept in HNF."""

    cdef readonly int k
    cdef readonly tuple factors
    cdef long long *d
    cdef long long *H
    cdef long long *v

    def __cinit__(self, factors):
        cdef int k = len(factors)
        cdef int i
        self.k = k
        self.factors = tuple(int(f) for f in factors)
        for f in self.factors:
            if f >= MAX_MODULUS:
                raise OverflowError("modulus too large for compiled kernel")
        self.d = <long long *> malloc(max(k, 1) * sizeof(long long))
        self.H = <long long *> calloc(max(k * k, 1), sizeof(long long))
        self.v = <long long *> malloc(max(k, 1) * sizeof(long long))
        for i in range(k):
            self.d[i] = self.factors[i]
            self.H[i * k + i] = self.d[i]

    def __dealloc__(self):
        free(self.d)
        free(self.H)
        free(self.v)

    def copy(self):
        cdef Lattice other = Lattice(self.factors)
        cdef int t
        for t in range(self.k * self.k):
            other.H[t] = self.H[t]
        return other

    cdef void _load(self, vec):
        cdef int t
        for t in range(self.k):
            self.v[t] = _mod(vec[t], self.d[t])

    cdef bint _add_loaded(self) nogil:
        cdef int k = self.k
        cdef int j, t
        cdef long long a, h, q, x, y, g, hg, ag, rt, vt
        cdef long long *row
        cdef long long *v = self.v
        cdef bint changed = False
        for j in range(k):
            a = v[j]
            if a == 0:
                continue
            row = self.H + j * k
            h = row[j]
            if a % h == 0:
                q = a // h
                for t in range(j, k):
                    v[t] = _mod(v[t] - q * row[t], self.d[t])
                continue
            _xgcd(h, a, &x, &y, &g)
            hg = h // g
            ag = a // g
            for t in range(j, k):
                rt = row[t]
                vt = v[t]
                row[t] = _mod(x * rt + y * vt, self.d[t])
                v[t] = _mod(hg * vt - ag * rt, self.d[t])
            row[j] = g
            v[j] = 0
            changed = True
        if changed:
            self._normalize()
        return changed

    cdef void _normalize(self) nogil:
        cdef int k = self.k
        cdef int i, j, t
        cdef long long h, q, r
        cdef long long *pj
        cdef long long *ri
        for j in range(k):
            pj = self.H + j * k
            h = pj[j]
            for i in range(j):
                ri = self.H + i * k
                r = ri[j]
                q = r // h
                if r < 0 and r % h != 0:
                    q -= 1
                if q != 0:
                    for t in range(j, k):
                        ri[t] -= q * pj[t]
                    for t in range(j + 1, k):
                        ri[t] = _mod(ri[t], self.d[t])

    def add(self, vec):
        """Insert ``vec``; return True iff the lattice grew."""
        self._load(vec)
        return self._add_loaded()

    def contains(self, vec):
        cdef int k = self.k
        cdef int j, t
        cdef long long a, h, q
        cdef long long *row
        cdef long long *v = self.v
        self._load(vec)
        for j in range(k):
            a = v[j]
            if a == 0:
                continue
            row = self.H + j * k
            h = row[j]
            if a % h != 0:
                return False
            q = a // h
            for t in range(j + 1, k):
                v[t] = _mod(v[t] - q * row[t], self.d[t])
        return True

    def rows(self):
        cdef int k = self.k
        return tuple(tuple([self.H[i * k + j] for j in range(k)]) for i in range(k))

    def diagonal(self):
        return tuple([self.H[j * self.k + j] for j in range(self.k)])

    def is_full(self):
        cdef int j
        for j in range(self.k):
            if self.H[j * self.k + j] != 1:
                return False
        return True
