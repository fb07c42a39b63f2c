"""Star-shaped graphs and their duals.

A star with node weight ``-b`` and legs ``n_i/p_i`` (continued fractions
read from the node outward) has a dual with node decoration ``b - t`` and
legs ``n_i/(n_i - p_i)``, where ``t`` is the number of legs.  The dual's
node decoration may be non-negative, so it is kept as plain data rather
than as a :class:`PlumbingTree`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .contfrac import eval_cf, expand_cf
from .graph import GraphError, PlumbingTree, star


@dataclass(frozen=True)
class StarShape:
    b: int
    legs: tuple  # Fractions n/p with 0 < p < n

    def __post_init__(self):
        legs = tuple(Fraction(x) for x in self.legs)
        if len(legs) < 3:
            raise GraphError(f"a star needs at least 3 legs, got {len(legs)}")
        for x in legs:
            if x <= 1:
                raise GraphError(f"leg value {x} must exceed 1")
        object.__setattr__(self, "legs", legs)

    @property
    def t(self) -> int:
        return len(self.legs)

    def data(self) -> tuple:
        """``(b, t, ((n_i, p_i), ...))``."""
        return self.b, self.t, tuple((x.numerator, x.denominator) for x in self.legs)

    def leg_weights(self) -> list[list[int]]:
        return [[-a for a in expand_cf(x)] for x in self.legs]

    def to_tree(self) -> PlumbingTree:
        if self.b < 1:
            raise GraphError(f"node weight {-self.b} is not negative")
        return star(-self.b, self.leg_weights())


@dataclass(frozen=True)
class DualGraph:
    center: int          # decoration of the node, any sign
    legs: tuple          # Fractions n/q

    @property
    def t(self) -> int:
        return len(self.legs)

    def leg_weights(self) -> list[list[int]]:
        return [[-a for a in expand_cf(x)] for x in self.legs]

    def rank(self) -> int:
        return 1 + sum(len(expand_cf(x)) for x in self.legs)

    def to_star(self) -> StarShape:
        """The dual as star data: node weight ``center``, so ``b' = -center``."""
        return StarShape(-self.center, self.legs)


def parse_star(tree: PlumbingTree) -> StarShape:
    nodes = [i for i, a in enumerate(tree.adjacency) if len(a) >= 3]
    if len(nodes) != 1:
        raise GraphError(f"not star-shaped: {len(nodes)} vertices of valency >= 3")
    node = nodes[0]
    adj = tree.adjacency
    legs = []
    for first in adj[node]:
        ws, prev, cur = [], node, first
        while True:
            ws.append(-tree.weights[cur])
            nxt = [j for j in adj[cur] if j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
        legs.append(eval_cf(ws))
    return StarShape(-tree.weights[node], tuple(legs))


def dual_graph(s: StarShape) -> DualGraph:
    legs = []
    for x in s.legs:
        n, p = x.numerator, x.denominator
        assert gcd(n, p) == 1 and 0 < p < n
        legs.append(Fraction(n, n - p))
    return DualGraph(s.b - s.t, tuple(legs))


def dual_tree(tree: PlumbingTree) -> DualGraph:
    return dual_graph(parse_star(tree))


def dual_of_dual(s: StarShape) -> StarShape:
    """Apply the dual formula twice; equals ``s`` on the data level."""
    again = dual_graph(dual_graph(s).to_star())
    return StarShape(-again.center, again.legs)
