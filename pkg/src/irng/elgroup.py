"""EL_n(R) for a finite rng R: elementary matrices, Steinberg relations,
BFS closure, normal closures, normal-generation weight, and the packed
upper unitriangular matrix used to bound that weight.

Group elements are I + M with M over R, stored flat and row-major (n*n
entries of k coefficients each) together with the matching inverse.
Matrix positions are 1-based. The commutator is [a, b] = a b a^-1 b^-1.
"""

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil

from . import config
from .errors import BadIndices, CapExceeded, PreconditionFailed, TooManyEntries
from .ideals import ideal_generated_by, quotient, weight_exact
from .rng import RngElement, make_rng
from .search import WeightResult, minimal_join_cover


class ElMatrix:
    __slots__ = ["ring", "n", "M", "Minv"]

    def __init__(self, ring, n, M, Minv):
        self.ring = ring
        self.n = n
        self.M = tuple(M)
        self.Minv = tuple(Minv)

    def __mul__(self, other):
        el_mul = self.ring.kernel.el_mul
        return ElMatrix(self.ring, self.n, el_mul(self.M, other.M, self.n),
                        el_mul(other.Minv, self.Minv, self.n))

    def inverse(self):
        return ElMatrix(self.ring, self.n, self.Minv, self.M)

    def __eq__(self, other):
        return isinstance(other, ElMatrix) and self.n == other.n and self.M == other.M

    def __hash__(self):
        return hash(self.M)

    def is_identity(self):
        return not any(self.M)

    def entry(self, i, j):
        """Entry (i, j) of M = A - I, 1-based."""
        k = self.ring.rank
        off = ((i - 1) * self.n + (j - 1)) * k
        return RngElement(self.ring, self.M[off:off + k])

    def check_inverse(self):
        el_mul = self.ring.kernel.el_mul
        return not any(el_mul(self.M, self.Minv, self.n)) and \
            not any(el_mul(self.Minv, self.M, self.n))

    def rows(self):
        """Entries of A = I + M as nested lists of strings."""
        out = []
        for i in range(1, self.n + 1):
            row = []
            for j in range(1, self.n + 1):
                e = self.entry(i, j)
                row.append(("1 + " + str(e) if e else "1") if i == j else str(e))
            out.append(row)
        return out

    def __repr__(self):
        return f"ElMatrix(n={self.n}, M={list(self.M)})"


def identity(R, n):
    z = (0,) * (n * n * R.rank)
    return ElMatrix(R, n, z, z)


def _place(R, n, i, j, vec):
    k = R.rank
    M = [0] * (n * n * k)
    off = ((i - 1) * n + (j - 1)) * k
    M[off:off + k] = vec
    return tuple(M)


def elementary(R, n, i, j, r):
    """E_{i,j}(r): identity plus r at (i, j)."""
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise BadIndices(f"need 1 <= i != j <= {n}, got ({i}, {j})")
    r = r if isinstance(r, RngElement) else R.element(r)
    return ElMatrix(R, n, _place(R, n, i, j, r.c), _place(R, n, i, j, (-r).c))


def group_mul(a, b):
    return a * b


def group_inv(a):
    return a.inverse()


def commutator(a, b):
    return a * b * a.inverse() * b.inverse()


@lru_cache(maxsize=None)
def check_commutator_convention():
    """[E_12(r), E_23(s)] = E_13(rs) with a b a^-1 b^-1 on a concrete case."""
    R = make_rng([5], [[[1]]], name="Z/5")
    r, s = R.element((2,)), R.element((3,))
    lhs = commutator(elementary(R, 3, 1, 2, r), elementary(R, 3, 2, 3, s))
    if lhs != elementary(R, 3, 1, 3, r * s):
        flipped = (elementary(R, 3, 1, 2, r).inverse() * elementary(R, 3, 2, 3, s).inverse()
                   * elementary(R, 3, 1, 2, r) * elementary(R, 3, 2, 3, s))
        hint = "a^-1 b^-1 a b verifies instead" if flipped == elementary(R, 3, 1, 3, r * s) \
            else "neither convention verifies"
        raise RuntimeError(f"commutator convention check failed: {hint}")
    return True


def elementary_generators(R, n):
    """E_{i,j}(e_t) over basis elements; they generate EL_n(R)."""
    return [elementary(R, n, i, j, e)
            for i in range(1, n + 1) for j in range(1, n + 1) if i != j
            for e in R.basis()]


# -- steinberg relations -------------------------------------------------------

@dataclass
class SteinbergReport:
    ring_name: str
    n: int
    mode: str
    seed: object
    checked: dict = field(default_factory=dict)
    violations: dict = field(default_factory=dict)

    RELATIONS = ("additivity", "commutator", "commuting")

    @property
    def ok(self):
        return not any(self.violations.values())

    def lines(self):
        out = [f"steinberg: rng {self.ring_name}, n = {self.n}, mode {self.mode}"
               + (f", seed {self.seed}" if self.seed is not None else "")]
        passed = 0
        for name in self.RELATIONS:
            bad = self.violations.get(name, [])
            passed += not bad
            out.append(f"{name}: {self.checked.get(name, 0)} checks, {len(bad)} violations")
            for v in bad[:5]:
                out.append(f"  violation {v}")
        out.append(f"relations verified: {passed}/{len(self.RELATIONS)}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _index_cases(n):
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    triples = [(i, j, k) for i, j in pairs for k in range(1, n + 1) if k != j and k != i]
    quads = [(i, j, k, l) for i, j in pairs for k, l in pairs if i != l and j != k]
    return pairs, triples, quads


def steinberg_check(R, n, exhaustive=True, samples=1000, seed=0, cap=None):
    """E_ij(r)E_ij(s) = E_ij(r+s); [E_ij(r), E_jk(s)] = E_ik(rs) for i != k;
    [E_ij(r), E_kl(s)] = 1 for i != l, j != k."""
    check_commutator_convention()
    pairs, triples, quads = _index_cases(n)
    rep = SteinbergReport(R.name, n, "exhaustive" if exhaustive else "sampled",
                          None if exhaustive else seed)
    for name in rep.RELATIONS:
        rep.checked[name] = 0
        rep.violations[name] = []
    E = elementary
    one = identity(R, n)

    def additivity(idx, r, s):
        i, j = idx
        return E(R, n, i, j, r) * E(R, n, i, j, s) == E(R, n, i, j, r + s)

    def comm(idx, r, s):
        i, j, k = idx
        return commutator(E(R, n, i, j, r), E(R, n, j, k, s)) == E(R, n, i, k, r * s)

    def commuting(idx, r, s):
        i, j, k, l = idx
        return commutator(E(R, n, i, j, r), E(R, n, k, l, s)) == one

    cases = [("additivity", pairs, additivity), ("commutator", triples, comm),
             ("commuting", quads, commuting)]
    if exhaustive:
        elems = list(R.elements(cap))
        for name, idxs, fn in cases:
            for idx in idxs:
                for r in elems:
                    for s in elems:
                        rep.checked[name] += 1
                        if not fn(idx, r, s):
                            rep.violations[name].append((idx, r.c, s.c))
    else:
        rnd = random.Random(seed)
        for name, idxs, fn in cases:
            if not idxs:
                continue
            for _ in range(samples):
                idx = rnd.choice(idxs)
                r = R.element([rnd.randrange(d) for d in R.factors])
                s = R.element([rnd.randrange(d) for d in R.factors])
                rep.checked[name] += 1
                if not fn(idx, r, s):
                    rep.violations[name].append((idx, r.c, s.c))
    return rep


# -- the group and its normal subgroups ------------------------------------------

class ElGroup:
    """A BFS-closed set of group elements, keyed by M."""

    def __init__(self, ring, n, elements, generators, cap, exhausted=True):
        self.ring = ring
        self.n = n
        self.elements = elements
        self.generators = generators
        self.cap = cap
        self.exhausted = exhausted

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g.M in self.elements

    def element(self, M):
        return ElMatrix(self.ring, self.n, M, self.elements[M])

    def sorted_elements(self):
        return [self.element(M) for M in sorted(self.elements)]

    def identity(self):
        return identity(self.ring, self.n)


def _closure(R, n, start, gens, cap):
    """Elements reachable from ``start`` by right multiplication by ``gens``."""
    el_mul = R.kernel.el_mul
    found = dict(start)
    frontier = list(found.items())
    gens = [(g.M, g.Minv) for g in gens]
    while frontier:
        nxt = []
        for M, Minv in frontier:
            for G, Ginv in gens:
                P = el_mul(M, G, n)
                if P not in found:
                    Pinv = el_mul(Ginv, Minv, n)
                    found[P] = Pinv
                    nxt.append((P, Pinv))
                    if len(found) > cap:
                        raise CapExceeded(len(found), cap)
        frontier = nxt
    return found


def generate_group(R, n, cap=None):
    """EL_n(R) by BFS from the identity over the elementary generators."""
    cap = config.GROUP_CAP if cap is None else cap
    gens = elementary_generators(R, n)
    one = identity(R, n)
    found = _closure(R, n, {one.M: one.Minv}, gens, cap)
    elements = {M: found[M] for M in sorted(found)}
    return ElGroup(R, n, elements, gens, cap)


class NormalSubgroup:
    def __init__(self, group, elements, normal_gens):
        self.group = group
        self.elements = elements
        self.normal_gens = normal_gens
        self._key = frozenset(elements)

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g.M in self.elements

    def __eq__(self, other):
        return isinstance(other, NormalSubgroup) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __le__(self, other):
        return self._key <= other._key

    def is_whole(self):
        return len(self.elements) == len(self.group.elements)


def conjugacy_orbit(G, seeds):
    """Smallest superset of ``seeds`` closed under conjugation by G's generators."""
    found = {s.M: s for s in seeds}
    frontier = list(found.values())
    while frontier:
        nxt = []
        for x in frontier:
            for g in G.generators:
                c = g * x * g.inverse()
                if c.M not in found:
                    found[c.M] = c
                    nxt.append(c)
        frontier = nxt
    return [found[M] for M in sorted(found)]


def _extend(G, elements, gens, candidates):
    """Close ``elements`` (a subgroup generated by ``gens``) under each
    candidate that is not already inside; returns (elements, gens)."""
    gens = list(gens)
    for c in candidates:
        if c.M in elements:
            continue
        gens.append(c)
        elements = _closure(G.ring, G.n, elements, gens, G.cap)
    return elements, gens


def normal_closure(G, seeds, base=None):
    """Normal subgroup generated by ``seeds`` (joined with ``base`` if given).

    The subgroup generated by a conjugation-closed set is normal, so it is
    built from the conjugacy orbit of the seeds, keeping only the orbit
    elements that enlarge it as subgroup generators.
    """
    orbit = [g for g in conjugacy_orbit(G, list(seeds)) if not g.is_identity()]
    if base is None:
        one = G.identity()
        start, gens = {one.M: one.Minv}, []
    else:
        if all(g.M in base.elements for g in orbit):
            return base
        start, gens = dict(base.elements), base.normal_gens
    found, gens = _extend(G, start, gens, orbit)
    return NormalSubgroup(G, found, gens)


def join_normal(G, A, B):
    """AB for normal subgroups A, B: generated by both generating sets."""
    if B <= A:
        return A
    found, gens = _extend(G, dict(A.elements), A.normal_gens, B.normal_gens)
    return NormalSubgroup(G, found, gens)


def conjugacy_classes(G):
    seen = set()
    classes = []
    for M in sorted(G.elements):
        if M in seen:
            continue
        cls = conjugacy_orbit(G, [G.element(M)])
        seen.update(g.M for g in cls)
        classes.append(cls)
    return classes


def group_weight(G, cap=None):
    """Least number of elements whose normal closure is G."""
    cap = config.SUBSET_CAP if cap is None else cap
    if G.order == 1:
        return WeightResult.exact(0)
    atoms = {}
    for cls in conjugacy_classes(G):
        rep = cls[0]
        if rep.is_identity():
            continue
        N = normal_closure(G, [rep])
        if N not in atoms:
            atoms[N] = rep
    trivial = NormalSubgroup(G, {G.identity().M: G.identity().Minv}, [])
    whole = NormalSubgroup(G, dict(G.elements), list(G.generators))
    return minimal_join_cover(
        [(rep, N) for N, rep in atoms.items()], trivial, whole,
        join=lambda A, B: join_normal(G, A, B),
        leq=lambda A, B: A <= B, budget=cap, start_level=group_weight_lower_bound(G))


def _prime_divisors(N):
    out = []
    p = 2
    while p * p <= N:
        if N % p == 0:
            out.append(p)
            while N % p == 0:
                N //= p
        p += 1
    if N > 1:
        out.append(N)
    return out


def group_weight_lower_bound(G):
    """Minimal number of generators of G/[G,G], and at least 1 for G != 1.

    Normal generators of G generate its abelianization A, and A/pA has
    order p^d for d = dim over F_p; G'G^p is the normal closure of the
    commutators and p-th powers of the generators.
    """
    if G.order == 1:
        return 0
    gens = G.generators
    comms = [commutator(a, b) for a in gens for b in gens]
    Gp = normal_closure(G, comms)
    index = G.order // Gp.order
    best = 1
    for p in _prime_divisors(index):
        powers = []
        for g in gens:
            x = g
            for _ in range(p - 1):
                x = x * g
            powers.append(x)
        K = normal_closure(G, powers, base=Gp)
        q, d = G.order // K.order, 0
        while q > 1:
            q //= p
            d += 1
        best = max(best, d)
    return best


def derived_subgroup(G):
    gens = G.generators
    comms = [commutator(a, b) for a in gens for b in gens]
    return normal_closure(G, comms)


def is_perfect(G):
    return derived_subgroup(G).is_whole()


# -- the packed matrix ---------------------------------------------------------

def packed_slots(n):
    """Strictly upper positions except (1, n), row-major: (n^2 - n - 2)/2 of them."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if (i, j) != (1, n)]


def _matprod(R, A, B, n):
    # plain product AB from the group law (I+A)(I+B) = I + A + B + AB
    P = R.kernel.el_mul(A, B, n)
    k = R.rank
    return tuple((p - a - b) % R.factors[t % k] for t, (p, a, b) in enumerate(zip(P, A, B)))


def pack_matrix(R, n, entries):
    """Upper unitriangular A with ``entries`` in :func:`packed_slots` order."""
    slots = packed_slots(n)
    entries = list(entries)
    if len(entries) > len(slots):
        raise TooManyEntries(f"{len(entries)} entries, {len(slots)} slots for n = {n}")
    k = R.rank
    M = [0] * (n * n * k)
    for (i, j), r in zip(slots, entries):
        r = r if isinstance(r, RngElement) else R.element(r)
        off = ((i - 1) * n + (j - 1)) * k
        M[off:off + k] = r.c
    M = tuple(M)
    # (I + M)^-1 = I - M + M^2 - ..., finite since M is strictly upper triangular
    negM = tuple((-a) % R.factors[t % k] for t, a in enumerate(M)) if k else M
    inv = negM
    power = negM
    for _ in range(n - 2):
        power = _matprod(R, power, negM, n)
        inv = tuple((a + b) % R.factors[t % k] for t, (a, b) in enumerate(zip(inv, power)))
    A = ElMatrix(R, n, M, inv)
    assert A.check_inverse()
    return A


def packed_entries(Z, slots, c):
    """Generators for matrix ``c``: its own chunk of Z, with any spare slots
    filled by cycling through Z again (repeats stay inside the ideal)."""
    chunk = list(Z[c * slots:(c + 1) * slots])
    i = 0
    while Z and len(chunk) < slots:
        chunk.append(Z[i % len(Z)])
        i += 1
    return chunk


def thm11_commutator_check(R, n, A, i, j, s, t):
    """[E_{2,i}(s), [A, E_{j,n}(t)]] = E_{2,n}(s a_ij t), with a_ij the
    entries of A - I; also checks [A, E_{j,n}(t)] = prod_k E_{k,n}(a_kj t)."""
    if not (1 <= i < n and 1 <= j < n) or i == 2:
        raise PreconditionFailed(f"need 1 <= i, j < {n} and i != 2, got ({i}, {j})")
    s = s if isinstance(s, RngElement) else R.element(s)
    t = t if isinstance(t, RngElement) else R.element(t)
    inner = commutator(A, elementary(R, n, j, n, t))
    prod_ = identity(R, n)
    for k in range(1, n):
        prod_ = prod_ * elementary(R, n, k, n, A.entry(k, j) * t)
    if inner != prod_:
        return False
    lhs = commutator(elementary(R, n, 2, i, s), inner)
    return lhs == elementary(R, n, 2, n, s * A.entry(i, j) * t)


@dataclass
class Thm11Report:
    ring_name: str
    n: int
    ring_weight: WeightResult
    bound: int = 0
    packed: list = field(default_factory=list)
    group_order: object = None
    closure_order: object = None
    group_weight: object = None
    upper_ok: object = None
    lower_ok: object = None
    notes: list = field(default_factory=list)

    def lines(self):
        out = [f"thm11: rng {self.ring_name}, n = {self.n}",
               f"ring weight: {self.ring_weight}",
               f"upper bound ceil(2w/(n^2-n-2)) = {self.bound}",
               f"packed matrices: {len(self.packed)}"]
        for A in self.packed:
            out.append("  " + "; ".join(" ".join(r) for r in A.rows()))
        out.append(f"group order: {self.group_order if self.group_order is not None else 'cap exceeded'}")
        if self.closure_order is not None:
            out.append(f"normal closure of packed matrices: order {self.closure_order}")
        out.append(f"upper bound witnessed: {_verdict(self.upper_ok)}")
        if self.group_weight is not None:
            out.append(f"group weight: {self.group_weight}")
        out.append(f"lower bound w(R) <= n^2 w(EL_n(R)): {_verdict(self.lower_ok)}")
        out += self.notes
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _verdict(v):
    return {True: "yes", False: "NO", None: "not checked"}[v]


def thm11_upper_bound_witness(R, n, group_cap=None, subset_cap=None):
    """Pack ideal generators of R into ceil(2w/(n^2-n-2)) matrices and check
    that they normally generate EL_n(R); also test w(R) <= n^2 w(EL_n(R))."""
    if n < 3:
        raise PreconditionFailed("need n >= 3")
    wR = weight_exact(R, cap=subset_cap)
    rep = Thm11Report(R.name, n, wR)
    if not wR.is_exact:
        rep.notes.append("ring weight not determined within cap")
        return rep
    slots = len(packed_slots(n))
    rep.bound = ceil(2 * wR.n / (n * n - n - 2))
    Z = list(wR.witness)
    rep.packed = [pack_matrix(R, n, packed_entries(Z, slots, c)) for c in range(rep.bound)]
    try:
        G = generate_group(R, n, cap=group_cap)
    except CapExceeded as exc:
        rep.notes.append(f"group generation stopped: {exc}")
        return rep
    rep.group_order = G.order
    N = normal_closure(G, rep.packed)
    rep.closure_order = N.order
    rep.upper_ok = N.is_whole()
    gw = group_weight(G, cap=subset_cap)
    rep.group_weight = gw
    if gw.is_exact:
        rep.lower_ok = wR.n <= n * n * gw.n
    return rep


# -- reduction modulo an ideal ---------------------------------------------------

@dataclass
class QuotientHomReport:
    samples: int
    seed: int
    quotient_order: int
    hom_failures: int = 0
    kill_failures: int = 0

    @property
    def ok(self):
        return self.hom_failures == 0 and self.kill_failures == 0

    def lines(self):
        return [f"quotient order: {self.quotient_order}",
                f"sampled pairs: {self.samples} (seed {self.seed})",
                f"homomorphism failures: {self.hom_failures}",
                f"kernel failures: {self.kill_failures}",
                f"verdict: {'verified' if self.ok else 'FAILED'}"]


def reduce_matrix(g, proj, Q):
    k = g.ring.rank
    count = g.n * g.n

    def red(M):
        out = []
        for c in range(count):
            out.extend(proj.vec(M[c * k:(c + 1) * k]))
        return tuple(out)

    return ElMatrix(Q, g.n, red(g.M), red(g.Minv))


def _random_word(rnd, gens, length):
    g = gens[0].inverse() * gens[0]
    for _ in range(length):
        g = g * rnd.choice(gens)
    return g


def quotient_hom_check(R, Z, n, samples=1000, seed=0, max_len=8):
    """Entrywise reduction EL_n(R) -> EL_n(R/<Z>) on sampled products."""
    I = ideal_generated_by(R, Z)
    Q, proj = quotient(R, I)
    rnd = random.Random(seed)
    gens = elementary_generators(R, n)
    rep = QuotientHomReport(samples, seed, Q.order)
    if not gens:
        return rep
    Igens = I.generators()
    qone = identity(Q, n)
    for _ in range(samples):
        a = _random_word(rnd, gens, rnd.randint(1, max_len))
        b = _random_word(rnd, gens, rnd.randint(1, max_len))
        if reduce_matrix(a * b, proj, Q) != reduce_matrix(a, proj, Q) * reduce_matrix(b, proj, Q):
            rep.hom_failures += 1
        if Igens:
            g = identity(R, n)
            for _ in range(rnd.randint(1, max_len)):
                i, j = rnd.sample(range(1, n + 1), 2)
                r = R.zero()
                for x in Igens:
                    r = r + rnd.randrange(max(R.factors)) * x
                g = g * elementary(R, n, i, j, r)
            if reduce_matrix(g, proj, Q) != qone:
                rep.kill_failures += 1
    return rep
