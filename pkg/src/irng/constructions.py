"""Explicit constructions on finite rngs: a unit from a commutative
irng's generators, the idempotent in a cyclic subsemigroup, and the
single ideal generator z_n built from a fixing chain."""

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (
    CorollaryViolated,
    HypothesisViolation,
    NotCommutative,
    NotIrng,
    PreconditionFailed,
    SystemUnsolvable,
    TooLarge,
)
from .ideals import ideal_generated_by, is_irng, principal_ideal
from .intlinalg import solve_combination
from .kernel import make_lattice
from .rng import UnitizationElement

MAX_ADJUGATE = 8


# -- determinants over a commutative ring ------------------------------------

def det(M, zero, one):
    """Laplace expansion along rows, memoized on the remaining columns."""
    n = len(M)

    @lru_cache(maxsize=None)
    def minor(row, cols):
        if row == n:
            return one
        acc = zero
        sign = 1
        for c in range(n):
            if not cols >> c & 1:
                continue
            entry = M[row][c]
            term = entry * minor(row + 1, cols & ~(1 << c))
            acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc

    return minor(0, (1 << n) - 1)


def adjugate(M, zero, one):
    """Transpose of the cofactor matrix; entries must pairwise commute."""
    n = len(M)
    if n > MAX_ADJUGATE:
        raise TooLarge(n, MAX_ADJUGATE)
    if n == 1:
        return [[one]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[M[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            d = det(sub, zero, one)
            adj[j][i] = d if (i + j) % 2 == 0 else zero - d
    return adj


def matmul(A, B, zero):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = zero
            for l in range(m):
                acc = acc + A[i][l] * B[l][j]
            row.append(acc)
        out.append(row)
    return out


# -- commutative irngs have a unit --------------------------------------------

@dataclass
class UnitWitness:
    generators: list
    A: list
    det: UnitizationElement
    z: object
    adjugate_ok: bool = True
    annihilates: bool = True


def find_unit_commutative(R, generators=None):
    """Solve A x = x over R and read off z = 1 - det(I - A)."""
    if not R.is_commutative():
        raise NotCommutative(f"{R.name} is not commutative")
    if not is_irng(R):
        raise NotIrng(f"{R.name} is not an irng")
    xs = list(generators) if generators is not None else R.basis()
    n, k = len(xs), R.rank
    if n == 0:
        if R.order == 1:
            return UnitWitness([], [], UnitizationElement.one(R), R.zero())
        raise PreconditionFailed("no generators for a nonzero rng")
    basis = [R._unit_vector(s) for s in range(k)]
    # unknown a_ij = sum_s alpha[j*k + s] e_s, and a_ij x_j is linear in alpha
    columns = [R.mul_vec(e, x.c) for x in xs for e in basis]
    A = []
    for i, x in enumerate(xs):
        sol = solve_combination(columns, x.c, R.factors)
        if sol is None:
            raise SystemUnsolvable(i)
        row = []
        for j in range(n):
            row.append(R.element(sol[j * k:(j + 1) * k]))
        A.append(row)
    zero = UnitizationElement(0, R.zero())
    one = UnitizationElement.one(R)
    M = [[(one if i == j else zero) - A[i][j] for j in range(n)] for i in range(n)]
    d = det(M, zero, one)
    adj = adjugate(M, zero, one)
    prod_ = matmul(adj, M, zero)
    adjugate_ok = all(prod_[i][j] == (d if i == j else zero)
                      for i in range(n) for j in range(n))
    # diag(d) x = adj (I - A) x, and (I - A) x = 0
    annihilates = all((d * x).r == R.zero() and (d * x).m == 0 for x in xs)
    z = one - d
    if z.m != 0:
        raise AssertionError("integer part of det(I - A) must be 1")
    z = z.r
    if not all(z * e == e and e * z == e for e in R.basis()):
        raise PreconditionFailed("generators do not generate R as a rng; z is not a unit")
    return UnitWitness(xs, A, d, z, adjugate_ok, annihilates)


def brute_force_unit(R, cap=None):
    """First element z with z*e = e*z = e for every basis element, or None."""
    basis = R.basis()
    for z in R.elements(cap):
        if all(z * e == e and e * z == e for e in basis):
            return z
    return None


# -- idempotents in finite rngs ------------------------------------------------

@dataclass
class IdempotentWitness:
    a: object
    index: int
    period: int
    exponent: int
    e: object


def idempotent_from_element(R, a):
    """Index/period of the powers of ``a`` and the idempotent a^t in them.

    t is the least multiple of the period that is >= the index, so a^t is
    the unique idempotent of the cyclic subsemigroup generated by ``a``.
    """
    seen = {}
    p = a
    j = 1
    while p.c not in seen:
        seen[p.c] = j
        p = p * a
        j += 1
    mu = seen[p.c]
    rho = j - mu
    t = rho * -(-mu // rho)
    e = a
    for _ in range(t - 1):
        e = e * a
    return IdempotentWitness(a, mu, rho, t, e)


def idempotents(R, cap=None):
    return [x for x in R.elements(cap) if x and x * x == x]


def idempotent_generators(R, cap=None):
    """Idempotents whose ideal is R, greedily thinned in canonical order."""
    if not is_irng(R):
        raise NotIrng(f"{R.name} is not an irng")
    if R.order == 1:
        return []
    lat = make_lattice(R.factors)
    chosen = []
    for e in idempotents(R, cap):
        if lat.contains(e.c):
            continue
        chosen.append(e)
        for row in principal_ideal(R, e).hnf:
            lat.add(row)
        if lat.is_full():
            break
    if not lat.is_full():
        raise CorollaryViolated(
            f"the idempotents of the finite irng {R.name} do not generate it as an ideal")
    for e in list(chosen):
        rest = [f for f in chosen if f is not e]
        if rest and ideal_generated_by(R, rest).is_full():
            chosen = rest
    return chosen


# -- the z_n chain in the unitization --------------------------------------

@dataclass
class ChainStep:
    x: object
    u: object
    side: str
    w: UnitizationElement
    z: object


@dataclass
class MembershipReport:
    title: str
    ring: object
    steps: list = field(default_factory=list)
    fixing_ok: list = field(default_factory=list)
    z: object = None
    ideal_order: int = 0
    extra: list = field(default_factory=list)

    @property
    def ok(self):
        return all(self.fixing_ok) and self.ideal_order == self.ring.order

    def lines(self):
        R = self.ring
        out = [f"construction: {self.title}", f"rng: {R.name} order {R.order}"]
        out += self.extra
        for i, s in enumerate(self.steps, 1):
            out.append(f"x{i} = {s.x}")
            out.append(f"u{i} = {s.u}  [{'u*x = x' if s.side == 'L' else 'x*u = x'}]")
            out.append(f"z{i} = {s.z}")
        out.append(f"fixing identities: {sum(self.fixing_ok)}/{len(self.fixing_ok)} verified")
        out.append(f"single generator: z = {self.z}")
        out.append(f"ideal generated by z: order {self.ideal_order} of {R.order}")
        out.append(f"verdict: {'verified' if self.ok else 'FAILED'}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def fixing_chain(R, xs, us=None, sides=None):
    """w_1 = 1 - u_1; w_i = w_{i-1}(1 - u_i) (side L) or (1 - u_i) w_{i-1}
    (side R); z_i = 1 - w_i. Side L asserts u_i x_i = x_i, side R x_i u_i = x_i.
    """
    n = len(xs)
    us = list(xs) if us is None else list(us)
    sides = ["L"] * n if sides is None else list(sides)
    one = UnitizationElement.one(R)
    steps = []
    w = None
    for i, (x, u, side) in enumerate(zip(xs, us, sides)):
        if side == "L":
            if u * x != x:
                raise HypothesisViolation(i + 1)
        elif side == "R":
            if x * u != x:
                raise HypothesisViolation(i + 1)
        else:
            raise ValueError(f"side must be 'L' or 'R', got {side!r}")
        f = one - u
        if w is None:
            w = f
        else:
            w = w * f if side == "L" else f * w
        z = one - w
        assert z.m == 0
        steps.append(ChainStep(x, u, side, w, z.r))
    return steps


def chain_report(R, steps, title, extra=()):
    fixing = [(s.z * s.x == s.x) if s.side == "L" else (s.x * s.z == s.x) for s in steps]
    z = steps[-1].z if steps else R.zero()
    order = principal_ideal(R, z).order
    return MembershipReport(title, R, steps, fixing, z, order, list(extra))


def single_generator_finite_irng(R, cap=None):
    """Single ideal generator of a finite irng from its idempotent generators."""
    xs = idempotent_generators(R, cap)
    steps = fixing_chain(R, xs)
    report = chain_report(R, steps, "finite irng: idempotent generators, u_i = x_i")
    if not report.ok:
        raise CorollaryViolated(f"chain element z_n does not generate {R.name}\n{report}")
    return report.z, report
