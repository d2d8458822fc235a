"""Builders for the example rngs, groups and semigroups used across the
package, plus a named registry for the CLI.

Expected properties stored with a registry entry are claims for the test
suite to recompute. They are never read back as facts by library code.
"""

from dataclasses import dataclass, field
from itertools import permutations

from .errors import NotAGroup
from .rng import make_rng
from .semigroups import FiniteSemigroup, band_corpus, semigroup_algebra


# -- rng families --------------------------------------------------------------

def matrix_subrng(m, n, positions, name=None):
    """Span over Z/m of the matrix units E_pq, (p, q) in ``positions`` (1-based).

    The positions must be closed under E_pq E_qs = E_ps.
    """
    positions = sorted(set(positions))
    index = {pq: a for a, pq in enumerate(positions)}
    k = len(positions)
    constants = []
    for p, q in positions:
        row = []
        for r, s in positions:
            v = [0] * k
            if q == r:
                if (p, s) not in index:
                    raise ValueError(f"positions not closed: E{p}{q} E{r}{s} = E{p}{s}")
                v[index[p, s]] = 1
            row.append(v)
        constants.append(row)
    labels = [f"E{p}{q}" for p, q in positions]
    return make_rng([m] * k, constants, name=name or f"M{n}(Z/{m})|{k}", labels=labels)


def matrix_rng(m, n):
    """M_n(Z/m) on the matrix-unit basis."""
    pos = [(p, q) for p in range(1, n + 1) for q in range(1, n + 1)]
    return matrix_subrng(m, n, pos, name=f"M{n}(Z/{m})")


def upper_triangular_rng(m, n):
    pos = [(p, q) for p in range(1, n + 1) for q in range(p, n + 1)]
    return matrix_subrng(m, n, pos, name=f"T{n}(Z/{m})")


def remark7_rng():
    """Matrices over Z/2 of shape [[a, b, c], [0, 0, d], [0, 0, e]]: a finite
    irng of order 32 without a unit."""
    return matrix_subrng(2, 3, [(1, 1), (1, 2), (1, 3), (2, 3), (3, 3)], name="remark7")


def zero_mult_rng(factors, name=None):
    k = len(factors)
    constants = [[[0] * k for _ in range(k)] for _ in range(k)]
    return make_rng(factors, constants,
                    name=name or "zero(" + ",".join(map(str, factors)) + ")")


def cyclic_rng(m, c, name=None):
    """Z/m-module on one generator e with e*e = c*e."""
    return make_rng([m], [[[c]]], name=name or f"cyc({m},{c})")


def direct_sum(R1, R2, name=None):
    k1, k2 = R1.rank, R2.rank
    k = k1 + k2
    constants = [[[0] * k for _ in range(k)] for _ in range(k)]
    for i in range(k1):
        for j in range(k1):
            constants[i][j][:k1] = R1.constants[i][j]
    for i in range(k2):
        for j in range(k2):
            constants[k1 + i][k1 + j][k1:] = R2.constants[i][j]
    labels = None
    if R1.labels or R2.labels:
        labels = [f"{l}'" for l in (R1.labels or [f"e{i + 1}" for i in range(k1)])]
        labels += [f"{l}''" for l in (R2.labels or [f"e{i + 1}" for i in range(k2)])]
    return make_rng(R1.factors + R2.factors, constants,
                    name=name or f"{R1.name}+{R2.name}", labels=labels)


def finite_field_4():
    """F_4 = F_2[a]/(a^2 + a + 1) on the basis 1, a."""
    return make_rng([2, 2], [[[1, 0], [0, 1]], [[0, 1], [1, 1]]], name="F4", labels=["1", "a"])


# -- groups as tables ------------------------------------------------------------

def cyclic_group(n):
    return FiniteSemigroup([[(a + b) % n for b in range(n)] for a in range(n)],
                           name=f"C{n}", labels=[f"g{a}" for a in range(n)])


def permutation_group(perms, name):
    """Table of a list of permutations under (gh)(x) = g(h(x))."""
    perms = sorted(perms)
    idx = {p: a for a, p in enumerate(perms)}
    table = [[idx[tuple(g[h[x]] for x in range(len(g)))] for h in perms] for g in perms]
    labels = ["(" + "".join(str(v + 1) for v in p) + ")" for p in perms]
    return FiniteSemigroup(table, name=name, labels=labels)


def symmetric_group(n):
    return permutation_group(list(permutations(range(n))), f"S{n}")


def _even(p):
    inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
    return inv % 2 == 0


def alternating_group(n):
    return permutation_group([p for p in permutations(range(n)) if _even(p)], f"A{n}")


def group_identity(G):
    """The identity of a group table; raises :class:`NotAGroup` otherwise."""
    T = G.table
    N = G.order
    ids = [e for e in range(N) if all(T[e][a] == a and T[a][e] == a for a in range(N))]
    if not ids:
        raise NotAGroup(f"{G.name} has no identity")
    e = ids[0]
    full = set(range(N))
    for a in range(N):
        if set(T[a]) != full or {T[b][a] for b in range(N)} != full:
            raise NotAGroup(f"row or column of {G.labels[a]} is not a permutation")
        if not any(T[a][b] == e for b in range(N)):
            raise NotAGroup(f"{G.labels[a]} has no inverse")
    return e


def augmentation_ideal(m, G, name=None):
    """omega(G) in (Z/m)G on the basis g - 1, g != 1, using
    (g-1)(h-1) = (gh-1) - (g-1) - (h-1) and 1 - 1 = 0."""
    e = group_identity(G)
    elems = [g for g in range(G.order) if g != e]
    index = {g: a for a, g in enumerate(elems)}
    k = len(elems)
    constants = []
    for g in elems:
        row = []
        for h in elems:
            v = [0] * k
            gh = G.table[g][h]
            if gh != e:
                v[index[gh]] += 1
            v[index[g]] -= 1
            v[index[h]] -= 1
            row.append([c % m for c in v])
        constants.append(row)
    labels = [f"[{G.labels[g]}-1]" for g in elems]
    return make_rng([m] * k, constants, name=name or f"omega_{m}({G.name})", labels=labels)


# -- small named semigroups ------------------------------------------------------

def left_zero_band(n):
    return FiniteSemigroup([[a for _ in range(n)] for a in range(n)], name=f"LZ{n}")


def right_zero_band(n):
    return FiniteSemigroup([list(range(n)) for _ in range(n)], name=f"RZ{n}")


def chain_semilattice(n):
    return FiniteSemigroup([[min(a, b) for b in range(n)] for a in range(n)], name=f"CH{n}")


# -- registry ------------------------------------------------------------------

@dataclass
class CatalogEntry:
    name: str
    kind: str  # "rng" or "semigroup"
    builder: object
    params: tuple = ()
    expected: dict = field(default_factory=dict)
    recheck: bool = True  # False when the property holds by construction

    def build(self):
        obj = self.builder(*self.params)
        obj.name = self.name
        return obj


def _entries():
    E = CatalogEntry
    out = [
        E("z2", "rng", cyclic_rng, (2, 1), {"is_irng": True, "has_unit": True, "weight": 1}, recheck=False),
        E("z3", "rng", cyclic_rng, (3, 1), {"is_irng": True, "has_unit": True, "weight": 1}, recheck=False),
        E("z4", "rng", cyclic_rng, (4, 1), {"is_irng": True, "has_unit": True, "weight": 1}, recheck=False),
        E("z5", "rng", cyclic_rng, (5, 1), {"is_irng": True, "has_unit": True, "weight": 1}, recheck=False),
        E("z6", "rng", cyclic_rng, (6, 1), {"is_irng": True, "has_unit": True, "weight": 1}, recheck=False),
        # {0, 2, 4} inside Z/6: e = 2 with e*e = 4 = 2e, and the unit is 4
        E("z6sub", "rng", cyclic_rng, (3, 2), {"is_irng": True, "has_unit": True}),
        E("cyc4_2", "rng", cyclic_rng, (4, 2), {"is_irng": False}),
        E("zero2", "rng", zero_mult_rng, ((2,),), {"is_irng": False, "has_unit": False}, recheck=False),
        E("zero22", "rng", zero_mult_rng, ((2, 2),), {"is_irng": False, "weight": 2}),
        E("zero6", "rng", zero_mult_rng, ((6,),), {"is_irng": False, "weight": 1}),
        E("m2z2", "rng", matrix_rng, (2, 2), {"is_irng": True, "has_unit": True, "weight": 1}, recheck=False),
        E("m2z3", "rng", matrix_rng, (3, 2), {"is_irng": True, "has_unit": True, "weight": 1}, recheck=False),
        E("t2z2", "rng", upper_triangular_rng, (2, 2), {"is_irng": True, "has_unit": True}, recheck=False),
        E("remark7", "rng", remark7_rng, (), {"is_irng": True, "has_unit": False, "weight": 1}),
        E("f4", "rng", finite_field_4, (), {"is_irng": True, "has_unit": True, "weight": 1}, recheck=False),
        E("aug2_z2", "rng", augmentation_ideal, (2, cyclic_group(2)), {"is_irng": False}),
        E("aug2_z3", "rng", augmentation_ideal, (2, cyclic_group(3)),
          {"is_irng": True, "has_unit": True, "weight": 1}),
        E("aug3_z2", "rng", augmentation_ideal, (3, cyclic_group(2)), {}),
        E("aug3_triv", "rng", augmentation_ideal, (3, cyclic_group(1)),
          {"is_irng": True, "weight": 0}, recheck=False),
        E("aug2_s3", "rng", augmentation_ideal, (2, symmetric_group(3)), {}),
        E("aug3_s3", "rng", augmentation_ideal, (3, symmetric_group(3)), {}),
        E("aug2_a4", "rng", augmentation_ideal, (2, alternating_group(4)), {}),
        E("z2+z2", "rng", lambda: direct_sum(cyclic_rng(2, 1), cyclic_rng(2, 1)), (),
          {"is_irng": True, "has_unit": True}, recheck=False),
        E("z2+z4", "rng", lambda: direct_sum(cyclic_rng(2, 1), cyclic_rng(4, 1)), (),
          {"is_irng": True, "has_unit": True}, recheck=False),
        E("z2+zero2", "rng", lambda: direct_sum(cyclic_rng(2, 1), zero_mult_rng((2,))), (),
          {"is_irng": False}, recheck=False),
        E("z2+remark7", "rng", lambda: direct_sum(cyclic_rng(2, 1), remark7_rng()), (),
          {"is_irng": True, "has_unit": False}),
        E("k2_lz2", "rng", lambda: semigroup_algebra(2, left_zero_band(2)), (), {"is_irng": True}),
        E("k3_rz2", "rng", lambda: semigroup_algebra(3, right_zero_band(2)), (), {"is_irng": True}),
        E("k2_ch3", "rng", lambda: semigroup_algebra(2, chain_semilattice(3)), (), {"is_irng": True}),
        E("C1", "semigroup", cyclic_group, (1,), {"is_group": True}, recheck=False),
        E("C2", "semigroup", cyclic_group, (2,), {"is_group": True}, recheck=False),
        E("C3", "semigroup", cyclic_group, (3,), {"is_group": True}, recheck=False),
        E("S3", "semigroup", symmetric_group, (3,), {"is_group": True, "order": 6}, recheck=False),
        E("A4", "semigroup", alternating_group, (4,), {"is_group": True, "order": 12}, recheck=False),
        E("LZ2", "semigroup", left_zero_band, (2,), {"is_band": True}, recheck=False),
        E("RZ2", "semigroup", right_zero_band, (2,), {"is_band": True}, recheck=False),
        E("CH3", "semigroup", chain_semilattice, (3,), {"is_band": True}, recheck=False),
    ]
    return {e.name: e for e in out}


CATALOG = _entries()


def catalog_names(kind=None):
    return [n for n, e in CATALOG.items() if kind is None or e.kind == kind]


def get(name):
    try:
        return CATALOG[name].build()
    except KeyError:
        raise KeyError(f"no catalog entry named {name!r}") from None


def catalog_rngs(max_order=None):
    out = []
    for e in CATALOG.values():
        if e.kind != "rng":
            continue
        R = e.build()
        if max_order is None or R.order <= max_order:
            out.append(R)
    return out


__all__ = [
    "CATALOG", "CatalogEntry", "alternating_group", "augmentation_ideal", "band_corpus",
    "catalog_names", "catalog_rngs", "chain_semilattice", "cyclic_group", "cyclic_rng",
    "direct_sum", "finite_field_4", "get", "group_identity", "left_zero_band", "matrix_rng",
    "matrix_subrng", "permutation_group", "remark7_rng", "right_zero_band", "symmetric_group",
    "upper_triangular_rng", "zero_mult_rng",
]
