"""Finite semigroups by multiplication table, the X_1 / X_0 reduction for a
semigroup S = SX, and single ideal generators of semigroup algebras."""

from dataclasses import dataclass, field
from itertools import product, permutations

from .constructions import chain_report, fixing_chain
from .errors import AssociativityViolation, LemmaViolated, ParseError, PreconditionFailed
from .rng import make_rng


class FiniteSemigroup:
    """Elements 0..N-1 with ``table[a][b] = ab``; associativity is checked."""

    def __init__(self, table, name=None, labels=None, validate=True):
        N = len(table)
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        if any(len(row) != N for row in self.table):
            raise ValueError("multiplication table must be square")
        if any(not 0 <= v < N for row in self.table for v in row):
            raise ValueError("table entries must lie in 0..N-1")
        self.name = name or "unnamed"
        self.labels = tuple(labels) if labels else tuple(f"s{a}" for a in range(N))
        if validate:
            T = self.table
            for a, b, c in product(range(N), repeat=3):
                if T[T[a][b]][c] != T[a][T[b][c]]:
                    raise AssociativityViolation(a, b, c, what="s")

    @property
    def order(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteSemigroup({self.name!r}, order={self.order})"

    def left_multiples(self, x):
        """S x as a set."""
        return {self.table[s][x] for s in range(self.order)}

    def plus_ideal(self, x):
        """S^+ x S^+ as a set."""
        T = self.table
        left = {x} | {T[s][x] for s in range(self.order)}
        return left | {T[a][s] for a in left for s in range(self.order)}


def validate_semigroup(table, name=None):
    return FiniteSemigroup(table, name=name)


def is_idempotent_semigroup(S):
    return {v for row in S.table for v in row} == set(range(S.order))


def is_band(S):
    return all(S.table[a][a] == a for a in range(S.order))


def left_ideal_generates(S, X):
    """Whether S = S X."""
    return {S.table[s][x] for s in range(S.order) for x in X} == set(range(S.order))


def lt1(S, y, x):
    """y <_1 x iff y in S x."""
    return y in S.left_multiples(x)


def lt0(S, y, x):
    """y <_0 x iff y in S^+ x S^+ y."""
    T = S.table
    return any(T[q][y] == y for q in S.plus_ideal(x))


@dataclass
class X0Result:
    X: tuple
    X1: tuple
    X0: tuple
    witnesses: dict = field(default_factory=dict)

    def lines(self):
        out = [f"X  = {list(self.X)}", f"X1 = {list(self.X1)}", f"X0 = {list(self.X0)}"]
        for x in self.X0:
            s, t = self.witnesses[x]
            out.append(f"witness {x} = {s}*{x}*{t}*{x}")
        return out


def lemma9_extract(S, X):
    """X_1 = {x in X : x in Sx}, X_0 = {x in X_1 : x in S^+ x S^+ x}.

    Each x in X_0 gets the lexicographically least (s, t) with x = s x t x.
    Raises :class:`LemmaViolated` if S = S X_0 S fails.
    """
    X = tuple(sorted(set(X)))
    if not X or not left_ideal_generates(S, X):
        raise PreconditionFailed("need S = S X")
    T = S.table
    N = S.order
    X1 = tuple(x for x in X if lt1(S, x, x))
    X0 = tuple(x for x in X1 if lt0(S, x, x))
    if not X0:
        raise LemmaViolated(f"X_0 is empty for X = {list(X)}")
    witnesses = {}
    for x in X0:
        wit = next(((s, t) for s in range(N) for t in range(N)
                    if T[T[T[s][x]][t]][x] == x), None)
        if wit is None:
            raise LemmaViolated(f"{x} is not in S{x}S{x}")
        witnesses[x] = wit
    covered = {T[T[a][x]][b] for a in range(N) for x in X0 for b in range(N)}
    if covered != set(range(N)):
        raise LemmaViolated(f"S != S X_0 S for X = {list(X)}")
    return X0Result(X, X1, X0, witnesses)


def semigroup_algebra(m, S, name=None):
    """(Z/m)S with basis S and structure constants copied from the table."""
    N = S.order
    constants = []
    for a in range(N):
        row = []
        for b in range(N):
            v = [0] * N
            v[S.table[a][b]] = 1
            row.append(v)
        constants.append(row)
    return make_rng([m] * N, constants, name=name or f"Z/{m}[{S.name}]", labels=S.labels)


def corollary8_generator(m, S, X):
    """Single two-sided ideal generator of (Z/m)S for S = SX.

    Runs the X_0 extraction, takes u = s x t for the witness x = s x t x, so
    u x = x with u in <x>, and feeds the chain with side L.
    """
    if not is_idempotent_semigroup(S):
        raise PreconditionFailed(f"{S.name} is not idempotent")
    res = lemma9_extract(S, X)
    R = semigroup_algebra(m, S)
    basis = R.basis()
    T = S.table
    xs, us = [], []
    for x in res.X0:
        s, t = res.witnesses[x]
        xs.append(basis[x])
        us.append(basis[T[T[s][x]][t]])
    steps = fixing_chain(R, xs, us, ["L"] * len(xs))
    report = chain_report(R, steps, f"semigroup algebra Z/{m}[{S.name}], X0 chain",
                          extra=res.lines())
    return report.z, report


# -- band enumeration ------------------------------------------------------

def _canonical_table(table):
    N = len(table)
    best = None
    for p in permutations(range(N)):
        inv = [0] * N
        for a, pa in enumerate(p):
            inv[pa] = a
        t = tuple(tuple(p[table[inv[a]][inv[b]]] for b in range(N)) for a in range(N))
        if best is None or t < best:
            best = t
    return best


def enumerate_bands(N):
    """All band tables on 0..N-1 (labelled), by backtracking with
    associativity checked on every fully defined triple."""
    cells = [(a, b) for a in range(N) for b in range(N) if a != b]
    T = [[a if a == b else None for b in range(N)] for a in range(N)]
    out = []

    def consistent():
        for a, b, c in product(range(N), repeat=3):
            ab = T[a][b]
            bc = T[b][c]
            if ab is None or bc is None:
                continue
            l, r = T[ab][c], T[a][bc]
            if l is not None and r is not None and l != r:
                return False
        return True

    def go(pos):
        if pos == len(cells):
            out.append(tuple(tuple(row) for row in T))
            return
        a, b = cells[pos]
        for v in range(N):
            T[a][b] = v
            if consistent():
                go(pos + 1)
        T[a][b] = None

    go(0)
    return out


def band_corpus(max_order=4):
    """Bands of order 1..max_order, one per isomorphism class."""
    out = []
    for N in range(1, max_order + 1):
        seen = set()
        for t in enumerate_bands(N):
            c = _canonical_table(t)
            if c not in seen:
                seen.add(c)
        for i, c in enumerate(sorted(seen)):
            out.append(FiniteSemigroup(c, name=f"band{N}_{i}"))
    return out


# -- text format -------------------------------------------------------------

def parse_semigroup(text):
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty semigroup file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "semigroup":
        raise ParseError(f"expected 'semigroup <name> <N>', got {lines[0]!r}")
    try:
        N = int(head[2])
        table = [[int(v) for v in ln.split()] for ln in lines[1:]]
    except ValueError:
        raise ParseError("non-integer entry in semigroup file") from None
    if len(table) != N or any(len(row) != N for row in table):
        raise ParseError(f"expected {N} rows of {N} entries")
    try:
        return FiniteSemigroup(table, name=head[1])
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_semigroup(S):
    out = [f"semigroup {S.name} {S.order}"]
    out += [" ".join(map(str, row)) for row in S.table]
    return "\n".join(out) + "\n"


def load_semigroup(path):
    with open(path) as fh:
        return parse_semigroup(fh.read())
