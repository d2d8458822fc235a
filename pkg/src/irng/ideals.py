"""Additive subgroups, ideals, quotients and ideal weight of finite rngs."""

from concurrent.futures import ProcessPoolExecutor
from math import prod

from . import config
from .errors import AmbientMismatch, NotTwoSided, PreconditionFailed
from .intlinalg import smith_with_transform
from .kernel import make_lattice
from .rng import RngElement, make_rng
from .search import WeightResult, minimal_join_cover


class AdditiveSubgroup:
    """Subgroup of (R, +), stored as the HNF of its preimage in Z^k.

    Two subgroups are equal iff their HNF matrices are equal.
    """

    def __init__(self, ring, lattice=None):
        self.ring = ring
        self._lat = lattice if lattice is not None else make_lattice(ring.factors)
        self.hnf = self._lat.rows()

    @property
    def order(self):
        return prod(d // h for d, h in zip(self.ring.factors, self._lat.diagonal()))

    def __eq__(self, other):
        if not isinstance(other, AdditiveSubgroup):
            return NotImplemented
        return self.hnf == other.hnf and self.ring == other.ring

    def __hash__(self):
        return hash(self.hnf)

    def __contains__(self, x):
        if isinstance(x, RngElement):
            if x.ring != self.ring:
                raise AmbientMismatch("element of another rng")
            x = x.c
        return self._lat.contains(x)

    def __le__(self, other):
        return all(other._lat.contains(row) for row in self.hnf)

    def __add__(self, other):
        lat = self._lat.copy()
        for row in other.hnf:
            lat.add(row)
        return AdditiveSubgroup(self.ring, lat)

    def is_full(self):
        return self._lat.is_full()

    def is_zero(self):
        return all(h == d for h, d in zip(self._lat.diagonal(), self.ring.factors))

    def generator_vectors(self):
        d = self.ring.factors
        out = []
        for row in self.hnf:
            v = tuple(a % m for a, m in zip(row, d))
            if any(v):
                out.append(v)
        return out

    def generators(self):
        return [RngElement(self.ring, v) for v in self.generator_vectors()]

    def elements(self):
        """Every element once (sorted); intended for small subgroups."""
        R = self.ring
        seen = {(0,) * R.rank}
        gens = self.generator_vectors()
        frontier = list(seen)
        while frontier:
            nxt = []
            for v in frontier:
                for g in gens:
                    w = R.add_vec(v, g)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return [RngElement(R, v) for v in sorted(seen)]

    def __repr__(self):
        return f"AdditiveSubgroup(order={self.order}, hnf={self.hnf})"


class Ideal(AdditiveSubgroup):
    """An additive subgroup closed under multiplication by R."""

    def __init__(self, ring, lattice=None, kind="two-sided"):
        super().__init__(ring, lattice)
        self.kind = kind

    def is_closed(self):
        R = self.ring
        for g in self.generator_vectors():
            for b in range(R.rank):
                e = R._unit_vector(b)
                if not self._lat.contains(R.mul_vec(e, g)):
                    return False
                if self.kind == "two-sided" and not self._lat.contains(R.mul_vec(g, e)):
                    return False
        return True

    def __repr__(self):
        return f"Ideal({self.kind}, order={self.order})"


def _vectors(R, elements):
    out = []
    for x in elements:
        if isinstance(x, RngElement):
            if x.ring != R:
                raise AmbientMismatch(f"{x!r} is not in {R!r}")
            out.append(x.c)
        else:
            out.append(tuple(x))
    return out


def subgroup_from_generators(R, elements):
    lat = make_lattice(R.factors)
    for v in _vectors(R, elements):
        lat.add(v)
    return AdditiveSubgroup(R, lat)


def _ideal_lattice(R, vecs, two_sided=True):
    mul = R.mul_vec
    basis = [R._unit_vector(i) for i in range(R.rank)]
    lat = make_lattice(R.factors)
    for z in vecs:
        lat.add(z)
        if two_sided:
            for e in basis:
                lat.add(mul(z, e))
    # R(Z + ZR) gives RZ + RZR; the HNF rows span Z + ZR
    d = R.factors
    rows = [tuple(a % m for a, m in zip(row, d)) for row in lat.rows()]
    for g in rows:
        if not any(g):
            continue
        for e in basis:
            lat.add(mul(e, g))
    return lat


def ideal_generated_by(R, Z):
    """span(Z + RZ + ZR + RZR), which is already closed on both sides."""
    return Ideal(R, _ideal_lattice(R, _vectors(R, Z)), "two-sided")


def left_ideal_generated_by(R, Z):
    return Ideal(R, _ideal_lattice(R, _vectors(R, Z), two_sided=False), "left")


def square(R):
    """R^2 = span{e_i e_j}."""
    lat = make_lattice(R.factors)
    for row in R.constants:
        for c in row:
            lat.add(c)
    return AdditiveSubgroup(R, lat)


def is_irng(R):
    return square(R).is_full()


def rzr_span_check(R, Z):
    """Whether span{e_i z e_j : z in Z} is all of R.

    Only meaningful for an irng R with <Z> = R, where it must hold.
    """
    vecs = _vectors(R, Z)
    if not is_irng(R):
        raise PreconditionFailed(f"{R.name} is not an irng")
    if not ideal_generated_by(R, Z).is_full():
        raise PreconditionFailed("Z does not generate R as an ideal")
    mul = R.mul_vec
    basis = [R._unit_vector(i) for i in range(R.rank)]
    right = make_lattice(R.factors)
    for z in vecs:
        for e in basis:
            right.add(mul(z, e))
    d = R.factors
    lat = make_lattice(R.factors)
    for row in right.rows():
        g = tuple(a % m for a, m in zip(row, d))
        if any(g):
            for e in basis:
                lat.add(mul(e, g))
    return lat.is_full()


class QuotientMap:
    """The projection R -> R/I together with lifts of the quotient basis."""

    def __init__(self, source, factors, V, keep, lifts):
        self.source = source
        self.factors = tuple(factors)
        self.target = None
        self._V = V
        self._keep = keep
        self.lifts = lifts

    def vec(self, x):
        V = self._V
        return tuple(sum(x[i] * V[i][s] for i in range(len(x))) % D
                     for s, D in zip(self._keep, self.factors))

    def __call__(self, x):
        return RngElement(self.target, self.vec(x.c))

    def lift(self, y):
        out = self.source.zero()
        for c, b in zip(y.c, self.lifts):
            out = out + c * b
        return out


def quotient(R, I, name=None):
    """R/I with invariant factors from the Smith form of I's lattice."""
    if isinstance(I, Ideal):
        if I.kind != "two-sided":
            raise NotTwoSided("quotient needs a two-sided ideal")
    else:
        I = Ideal(R, I._lat.copy(), "two-sided")
    if not I.is_closed():
        raise NotTwoSided("subgroup is not a two-sided ideal")
    if R.rank == 0:
        D, V, Vinv = [], [], []
    else:
        D, V, Vinv = smith_with_transform([list(r) for r in I.hnf])
    keep = [s for s in range(R.rank) if D[s] > 1]
    lifts = [R.element(Vinv[s]) for s in keep]
    pm = QuotientMap(R, [D[s] for s in keep], V, keep, lifts)
    constants = [[pm.vec((a * b).c) for b in lifts] for a in lifts]
    pm.target = make_rng(pm.factors, constants, name=name or f"{R.name}/I")
    return pm.target, pm


def weight_lower_bound(R):
    """Minimal number of generators of R/R^2, and at least 1 for R != 0."""
    if R.order == 1:
        return 0
    Q, _ = quotient(R, Ideal(R, square(R)._lat.copy()))
    return max(Q.rank, 1)


def principal_ideal(R, z):
    return ideal_generated_by(R, [z])


def is_single_generator(R, z):
    return principal_ideal(R, z).is_full()


def _principal_hnfs(args):
    R, vecs = args
    return [_ideal_lattice(R, [v]).rows() for v in vecs]


def principal_ideals(R, cap=None, workers=1):
    """Distinct principal ideals, each labelled by its least generator."""
    elems = [x.c for x in R.elements(cap)]
    if workers > 1 and len(elems) > 64:
        size = -(-len(elems) // (4 * workers))
        chunks = [elems[i:i + size] for i in range(0, len(elems), size)]
        with ProcessPoolExecutor(workers) as pool:
            hnfs = [h for part in pool.map(_principal_hnfs, [(R, c) for c in chunks])
                    for h in part]
    else:
        hnfs = _principal_hnfs((R, elems))
    atoms = {}
    for v, h in zip(elems, hnfs):
        if h not in atoms:
            atoms[h] = v
    out = []
    for h, v in atoms.items():
        lat = make_lattice(R.factors)
        for row in h:
            lat.add(row)
        out.append((R.element(v), Ideal(R, lat)))
    return out


def weight_exact(R, cap=None, enum_cap=None, workers=1):
    """Least n such that some n elements generate R as a two-sided ideal."""
    cap = config.SUBSET_CAP if cap is None else cap
    enum_cap = config.ENUM_CAP if enum_cap is None else enum_cap
    lower = weight_lower_bound(R)
    if R.order == 1:
        return WeightResult.exact(0)
    if R.order > enum_cap:
        return WeightResult.at_least(lower)
    atoms = [(x, I) for x, I in principal_ideals(R, enum_cap, workers) if not I.is_zero()]
    bottom = Ideal(R)
    full = make_lattice(R.factors)
    for i in range(R.rank):
        full.add(R._unit_vector(i))
    top = Ideal(R, full)
    return minimal_join_cover(
        atoms, bottom, top,
        join=lambda a, b: Ideal(R, (a + b)._lat),
        leq=lambda a, b: a <= b,
        budget=cap, start_level=lower)


def naive_span(R, elements):
    """Additive closure by element enumeration; an oracle for the HNF path."""
    seen = {(0,) * R.rank}
    gens = _vectors(R, elements)
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = R.add_vec(v, g)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def naive_ideal(R, Z):
    """Smallest subset containing Z closed under +, left and right products."""
    elems = set(naive_span(R, Z))
    while True:
        prods = {R.mul_vec(a, b) for a in elems for b in [x.c for x in R.elements()]}
        prods |= {R.mul_vec(b, a) for a in elems for b in [x.c for x in R.elements()]}
        new = naive_span(R, list(elems | prods))
        if new == elems:
            return frozenset(elems)
        elems = set(new)
