"""The free rng on idempotent generators x_1..x_n, symbolically.

Elements are integer combinations of reduced words (no letter repeated
twice in a row, since x_i x_i = x_i). The empty word is the unit of the
unitization and only appears in unital-context polynomials.
"""

import re
from dataclasses import dataclass, field

from . import config
from .errors import HypothesisViolation, ParseError, PreconditionFailed, SubstitutionBlowup


def word_mul(u, v):
    """Concatenate reduced words, collapsing one repeated letter at the seam."""
    if u and v and u[-1] == v[0]:
        return u + v[1:]
    return u + v


def reduce_word(letters):
    out = ()
    for a in letters:
        out = word_mul(out, (a,))
    return out


class FreePoly:
    """Finite map from reduced words to nonzero integers."""

    __slots__ = ["terms"]

    def __init__(self, terms=None):
        clean = {}
        for w, c in (terms or {}).items():
            w = reduce_word(w)
            c = clean.get(w, 0) + c
            if c:
                clean[w] = c
            else:
                clean.pop(w, None)
        self.terms = clean

    @classmethod
    def gen(cls, i):
        return cls({(i,): 1})

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({(): c}) if c else cls()

    @staticmethod
    def _coerce(x):
        if isinstance(x, FreePoly):
            return x
        if isinstance(x, int):
            return FreePoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, 0) + c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return _raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return _raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = word_mul(u, v)
                s = terms.get(w, 0) + a * b
                if s:
                    terms[w] = s
                else:
                    terms.pop(w, None)
        return _raw(terms)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_rng_element(self):
        return () not in self.terms

    def __repr__(self):
        return f"FreePoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _raw(terms):
    p = FreePoly.__new__(FreePoly)
    p.terms = terms
    return p


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def _word_str(w):
    return ".".join(f"x{i}" for i in w) if w else "<1>"


def format_poly(p):
    """Terms by (length, word); unit coefficients are left implicit."""
    if not p.terms:
        return "0"
    out = []
    for w in sorted(p.terms, key=lambda w: (len(w), w)):
        c = p.terms[w]
        mag = abs(c)
        body = _word_str(w) if mag == 1 else f"{mag}*{_word_str(w)}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


_TERM = re.compile(r"^(?:(\d+)\s*\*\s*)?(<1>|x\d+(?:\s*\.\s*x\d+)*)$|^(\d+)$")


def parse_poly(text):
    """Inverse of :func:`format_poly`; also accepts explicit ``1*`` and
    unreduced words."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    if s == "0":
        return FreePoly()
    pieces = re.split(r"\s*([+-])\s*", s)
    if pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    if len(pieces) % 2:
        raise ParseError(f"cannot parse polynomial {text!r}")
    terms = {}
    for sign, body in zip(pieces[0::2], pieces[1::2]):
        m = _TERM.match(body.strip())
        if not m:
            raise ParseError(f"bad term {body!r} in {text!r}")
        if m.group(3) is not None:
            c, w = int(m.group(3)), ()
        else:
            c = int(m.group(1)) if m.group(1) else 1
            raw = m.group(2)
            w = () if raw == "<1>" else tuple(int(t.strip()[1:]) for t in raw.split("."))
        if any(i < 1 for i in w):
            raise ParseError(f"generator indices start at 1 in {text!r}")
        w = reduce_word(w)
        terms[w] = terms.get(w, 0) + (c if sign == "+" else -c)
    return FreePoly({w: c for w, c in terms.items() if c})


# -- the fixing chain ----------------------------------------------------------

@dataclass
class Chain:
    n: int
    sides: tuple
    x: list
    u: list
    w: list
    z: list


def _parse_sides(sides, n):
    if sides is None:
        return ("L",) * n
    sides = tuple(sides)
    if len(sides) != n or any(s not in ("L", "R") for s in sides):
        raise ValueError(f"need {n} sides from 'L'/'R', got {sides!r}")
    return sides


def theorem3_chain(n, sides=None, u=None):
    """w_1 = 1 - u_1, w_i = w_{i-1}(1 - u_i) for side L (u_i x_i = x_i) and
    (1 - u_i) w_{i-1} for side R (x_i u_i = x_i); z_i = 1 - w_i.

    ``u`` defaults to u_i = x_i, where both hypotheses hold.
    """
    sides = _parse_sides(sides, n)
    x = [FreePoly.gen(i) for i in range(1, n + 1)]
    u = list(x) if u is None else list(u)
    if len(u) != n:
        raise ValueError(f"need {n} polynomials u_i")
    one = FreePoly.one()
    w, z = [], []
    for i in range(n):
        if sides[i] == "L" and u[i] * x[i] != x[i]:
            raise HypothesisViolation(i + 1)
        if sides[i] == "R" and x[i] * u[i] != x[i]:
            raise HypothesisViolation(i + 1)
        f = one - u[i]
        if i == 0:
            wi = f
        else:
            wi = w[-1] * f if sides[i] == "L" else f * w[-1]
        w.append(wi)
        z.append(one - wi)
    return Chain(n, sides, x, u, w, z)


def verify_fixing_identities(chain):
    """z_i x_i = x_i for side L, x_i z_i = x_i for side R."""
    for i in range(chain.n):
        x, z = chain.x[i], chain.z[i]
        if chain.sides[i] == "L" and z * x != x:
            return False
        if chain.sides[i] == "R" and x * z != x:
            return False
    return True


@dataclass
class MembershipCertificate:
    """``target == sum(p * z * q for p, q in pairs)``."""
    target: FreePoly
    z: FreePoly
    pairs: list = field(default_factory=list)

    def term_count(self):
        return sum(len(p) + len(q) for p, q in self.pairs)


def verify_certificate(cert):
    total = FreePoly()
    for p, q in cert.pairs:
        total = total + p * cert.z * q
    return total == cert.target


def _step_pairs(chain, i):
    """Pairs expressing z_i through z_{i+1} (0-based i < n-1)."""
    one = FreePoly.one()
    nxt = i + 1
    xn = chain.x[nxt]
    # z_i = z_{i+1} - (w_i u_{i+1} or u_{i+1} w_i), and u_{i+1} = x_{i+1} is fixed by z_{i+1}
    if chain.sides[nxt] == "L":
        return [(one, one), (-chain.w[i], xn)]
    return [(one, one), (-xn, chain.w[i])]


def build_membership_certificate(chain, i, budget=None):
    """Certificate that x_i (1-based) lies in the ideal generated by z_n."""
    budget = config.TERM_BUDGET if budget is None else budget
    if any(u != x for u, x in zip(chain.u, chain.x)):
        raise PreconditionFailed("certificates need the default u_i = x_i")
    if not 1 <= i <= chain.n:
        raise ValueError(f"generator index {i} outside 1..{chain.n}")
    one = FreePoly.one()
    j = i - 1
    x = chain.x[j]
    pairs = [(one, x)] if chain.sides[j] == "L" else [(x, one)]
    for level in range(j, chain.n - 1):
        step = _step_pairs(chain, level)
        new = []
        size = 0
        for p, q in pairs:
            for a, b in step:
                pa, bq = p * a, b * q
                if pa and bq:
                    new.append((pa, bq))
                    size += len(pa) + len(bq)
            if size > budget:
                raise SubstitutionBlowup(size, budget)
        pairs = _merge(new)
    return MembershipCertificate(x, chain.z[-1], pairs)


def _merge(pairs):
    # collect right multipliers that share a left multiplier
    by_left = {}
    order = []
    for p, q in pairs:
        key = frozenset(p.terms.items())
        if key not in by_left:
            by_left[key] = [p, FreePoly()]
            order.append(key)
        by_left[key][1] = by_left[key][1] + q
    return [(by_left[k][0], by_left[k][1]) for k in order if by_left[k][1]]
