"""Finite rngs given by structure constants over Z/d_1 x ... x Z/d_k."""

from itertools import product
from math import prod

from . import config
from .errors import (
    AmbientMismatch,
    AssociativityViolation,
    BilinearityViolation,
    ParseError,
    TooLarge,
)
from .kernel import make_rng_kernel


class FiniteRng:
    """A finite rng with basis e_1..e_k (0-based in code).

    ``constants[i][j]`` is the coefficient vector of e_i * e_j. The
    constructor validates bilinearity and associativity eagerly; every
    later operation assumes a valid table.
    """

    def __init__(self, factors, constants, name=None, labels=None, validate=True):
        factors = tuple(int(f) for f in factors)
        k = len(factors)
        if any(f < 2 for f in factors):
            raise ValueError(f"invariant factors must be >= 2, got {factors}")
        if len(constants) != k or any(len(row) != k for row in constants):
            raise ValueError(f"structure constants must be a {k}x{k} table")
        if any(len(c) != k for row in constants for c in row):
            raise ValueError(f"each structure constant must have {k} entries")
        self.factors = factors
        self.constants = tuple(
            tuple(tuple(int(c[t]) % factors[t] for t in range(k)) for c in row)
            for row in constants
        )
        self.name = name or "unnamed"
        if labels is not None and len(labels) != k:
            raise ValueError("need one label per basis element")
        self.labels = tuple(labels) if labels is not None else None
        self.kernel = make_rng_kernel(factors, self.constants)
        if validate:
            self._check_bilinear()
            self._check_associative()
        self._hash = hash((self.factors, self.constants))

    def _check_bilinear(self):
        d = self.factors
        for i, j in product(range(self.rank), repeat=2):
            c = self.constants[i][j]
            for t in range(self.rank):
                if (d[i] * c[t]) % d[t] or (d[j] * c[t]) % d[t]:
                    raise BilinearityViolation(i, j, t)

    def _check_associative(self):
        mul = self.kernel.mul
        C = self.constants
        for i, j, l in product(range(self.rank), repeat=3):
            if mul(C[i][j], self._unit_vector(l)) != mul(self._unit_vector(i), C[j][l]):
                raise AssociativityViolation(i, j, l)

    def _unit_vector(self, i):
        v = [0] * self.rank
        v[i] = 1
        return tuple(v)

    @property
    def rank(self):
        return len(self.factors)

    @property
    def order(self):
        return prod(self.factors)

    def __reduce__(self):
        return (FiniteRng, (self.factors, self.constants, self.name, self.labels, False))

    def __eq__(self, other):
        if not isinstance(other, FiniteRng):
            return NotImplemented
        return self is other or (
            self.factors == other.factors and self.constants == other.constants)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteRng({self.name!r}, factors={self.factors})"

    def element(self, coeffs):
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients, got {len(coeffs)}")
        return RngElement(self, tuple(int(c) % d for c, d in zip(coeffs, self.factors)))

    def zero(self):
        return RngElement(self, (0,) * self.rank)

    def basis(self):
        return [RngElement(self, self._unit_vector(i)) for i in range(self.rank)]

    def elements(self, cap=None):
        """All elements, each once, in lexicographic coefficient order."""
        cap = config.ENUM_CAP if cap is None else cap
        if self.order > cap:
            raise TooLarge(self.order, cap)
        for coeffs in product(*(range(d) for d in self.factors)):
            yield RngElement(self, coeffs)

    def is_commutative(self):
        C = self.constants
        return all(C[i][j] == C[j][i]
                   for i in range(self.rank) for j in range(i + 1, self.rank))

    # raw vector arithmetic, used by the hot paths
    def add_vec(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.factors))

    def neg_vec(self, x):
        return tuple(-a % d for a, d in zip(x, self.factors))

    def scale_vec(self, m, x):
        return tuple(m * a % d for a, d in zip(x, self.factors))

    def mul_vec(self, x, y):
        return self.kernel.mul(x, y)


def make_rng(invariant_factors, structure_constants, name=None, labels=None):
    """Validated :class:`FiniteRng`."""
    return FiniteRng(invariant_factors, structure_constants, name=name, labels=labels)


def _check_same(a, b):
    if a is not b and a != b:
        raise AmbientMismatch(f"elements of {a!r} and {b!r}")


class RngElement:
    __slots__ = ["ring", "c"]

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.c = tuple(coeffs)

    def __add__(self, other):
        if not isinstance(other, RngElement):
            return NotImplemented
        _check_same(self.ring, other.ring)
        return RngElement(self.ring, self.ring.add_vec(self.c, other.c))

    def __neg__(self):
        return RngElement(self.ring, self.ring.neg_vec(self.c))

    def __sub__(self, other):
        if not isinstance(other, RngElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RngElement(self.ring, self.ring.scale_vec(other, self.c))
        if not isinstance(other, RngElement):
            return NotImplemented
        _check_same(self.ring, other.ring)
        return RngElement(self.ring, self.ring.mul_vec(self.c, other.c))

    def __rmul__(self, other):
        if isinstance(other, int):
            return RngElement(self.ring, self.ring.scale_vec(other, self.c))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, RngElement):
            return NotImplemented
        return self.c == other.c and (self.ring is other.ring or self.ring == other.ring)

    def __hash__(self):
        return hash(self.c)

    def __lt__(self, other):
        return self.c < other.c

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return f"RngElement({list(self.c)})"

    def __str__(self):
        return format_element(self)


def add(x, y):
    return x + y


def neg(x):
    return -x


def mul(x, y):
    return x * y


def is_idempotent_element(x):
    return x * x == x


def format_element(x):
    """``e1 + 2*e3`` style, using basis labels when the rng has them."""
    labels = x.ring.labels or tuple(f"e{i + 1}" for i in range(x.ring.rank))
    parts = []
    for c, lab in zip(x.c, labels):
        if c:
            parts.append(lab if c == 1 else f"{c}*{lab}")
    return " + ".join(parts) if parts else "0"


class UnitizationElement:
    """Element m + r of the unitization Z + R, with exact integer part."""

    __slots__ = ["m", "r"]

    def __init__(self, m, r):
        self.m = int(m)
        self.r = r

    @classmethod
    def one(cls, ring):
        return cls(1, ring.zero())

    @classmethod
    def embed(cls, r):
        return cls(0, r)

    @property
    def ring(self):
        return self.r.ring

    def __add__(self, other):
        other = _as_unit(other, self.ring)
        return UnitizationElement(self.m + other.m, self.r + other.r)

    __radd__ = __add__

    def __neg__(self):
        return UnitizationElement(-self.m, -self.r)

    def __sub__(self, other):
        return self + (-_as_unit(other, self.ring))

    def __rsub__(self, other):
        return _as_unit(other, self.ring) - self

    def __mul__(self, other):
        other = _as_unit(other, self.ring)
        _check_same(self.ring, other.ring)
        r = self.m * other.r + other.m * self.r + self.r * other.r
        return UnitizationElement(self.m * other.m, r)

    def __rmul__(self, other):
        return _as_unit(other, self.ring) * self

    def __eq__(self, other):
        if isinstance(other, RngElement):
            other = UnitizationElement(0, other)
        if not isinstance(other, UnitizationElement):
            return NotImplemented
        return self.m == other.m and self.r == other.r

    def __hash__(self):
        return hash((self.m, self.r.c))

    def in_rng(self):
        return self.m == 0

    def __repr__(self):
        return f"UnitizationElement({self.m}, {list(self.r.c)})"

    def __str__(self):
        if self.m == 0:
            return str(self.r)
        if not self.r:
            return str(self.m)
        return f"{self.m} + {self.r}"


def _as_unit(x, ring):
    if isinstance(x, UnitizationElement):
        return x
    if isinstance(x, RngElement):
        return UnitizationElement(0, x)
    if isinstance(x, int):
        return UnitizationElement(x, ring.zero())
    raise TypeError(f"cannot coerce {x!r} into the unitization")


def u_add(a, b):
    return a + b


def u_neg(a):
    return -a


def u_mul(a, b):
    return a * b


def enumerate_elements(R, cap=None):
    return R.elements(cap)


# -- text format -------------------------------------------------------------

def _strip(line):
    return line.split("#", 1)[0].strip()


def parse_rng(text):
    lines = [ln for ln in map(_strip, text.splitlines()) if ln]
    if len(lines) < 2:
        raise ParseError("rng file needs a 'rng' line and a 'factors' line")
    head = lines[0].split(None, 1)
    if head[0] != "rng":
        raise ParseError(f"expected 'rng <name>', got {lines[0]!r}")
    name = head[1].strip() if len(head) > 1 else "unnamed"
    fac = lines[1].split()
    if fac[0] != "factors":
        raise ParseError(f"expected 'factors d1 ... dk', got {lines[1]!r}")
    try:
        factors = [int(f) for f in fac[1:]]
    except ValueError:
        raise ParseError(f"bad invariant factors in {lines[1]!r}") from None
    k = len(factors)
    table = {}
    for ln in lines[2:]:
        tok = ln.split()
        if tok[0] != "c" or len(tok) != 3 + k:
            raise ParseError(f"expected 'c i j' plus {k} coefficients, got {ln!r}")
        try:
            i, j, *cs = (int(t) for t in tok[1:])
        except ValueError:
            raise ParseError(f"non-integer entry in {ln!r}") from None
        if not (1 <= i <= k and 1 <= j <= k):
            raise ParseError(f"basis index out of range in {ln!r}")
        if (i, j) in table:
            raise ParseError(f"duplicate product e{i}*e{j}")
        table[i, j] = cs
    missing = [(i, j) for i in range(1, k + 1) for j in range(1, k + 1) if (i, j) not in table]
    if missing:
        raise ParseError(f"missing products, first is e{missing[0][0]}*e{missing[0][1]}")
    constants = [[table[i + 1, j + 1] for j in range(k)] for i in range(k)]
    return make_rng(factors, constants, name=name)


def serialize_rng(R):
    out = [f"rng {R.name}", " ".join(["factors", *map(str, R.factors)])]
    for i in range(R.rank):
        for j in range(R.rank):
            out.append(" ".join(["c", str(i + 1), str(j + 1), *map(str, R.constants[i][j])]))
    return "\n".join(out) + "\n"


def load_rng(path):
    with open(path) as fh:
        return parse_rng(fh.read())
