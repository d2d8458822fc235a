"""Least number of atoms whose join reaches the top of a finite lattice.

Both ideal weight and normal-subgroup weight reduce to this: the ideal
(normal subgroup) generated by a set is the join of the principal ones, so
searching over distinct joins level by level is exhaustive over subsets.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class WeightResult:
    kind: str
    n: int
    witness: tuple = field(default=(), compare=False)

    @classmethod
    def exact(cls, n, witness=()):
        return cls("exact", n, tuple(witness))

    @classmethod
    def at_least(cls, n):
        return cls("at-least", n)

    @property
    def is_exact(self):
        return self.kind == "exact"

    def __str__(self):
        return f"{self.kind} {self.n}"


def parse_weight_result(text):
    kind, _, n = text.strip().rpartition(" ")
    if kind not in ("exact", "at-least"):
        raise ValueError(f"not a weight result: {text!r}")
    return WeightResult(kind, int(n))


def minimal_join_cover(atoms, bottom, top, join, leq, budget, start_level=1):
    """Search joins of ``atoms`` (pairs ``(label, closure)``) level by level.

    Atoms are tried in the given order and the first join reaching ``top``
    wins, so the witness is deterministic. ``start_level`` is a proven lower
    bound reported when the budget runs out before anything is found.
    """
    if top == bottom:
        return WeightResult.exact(0)
    greedy = greedy_join_cover(atoms, bottom, top, join, leq)
    if greedy is not None and len(greedy) <= start_level:
        return WeightResult.exact(len(greedy), greedy)
    frontier = {bottom: ()}
    work = 0
    level = 0
    while frontier:
        level += 1
        nxt = {}
        for closure, wit in frontier.items():
            for label, atom in atoms:
                if leq(atom, closure):
                    continue
                work += 1
                if work > budget:
                    return WeightResult.at_least(max(level, start_level))
                joined = join(closure, atom)
                if joined == top:
                    return WeightResult.exact(level, wit + (label,))
                if joined not in nxt:
                    nxt[joined] = wit + (label,)
        frontier = nxt
    raise ValueError("atoms do not join to the top element")


def greedy_join_cover(atoms, bottom, top, join, leq):
    """Labels of atoms taken in order whenever they enlarge the join; an
    upper bound, and exact whenever it meets a proven lower bound."""
    current = bottom
    labels = []
    for label, atom in atoms:
        if leq(atom, current):
            continue
        current = join(current, atom)
        labels.append(label)
        if current == top:
            return tuple(labels)
    return None
