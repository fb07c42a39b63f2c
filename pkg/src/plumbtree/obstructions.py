"""Necessary conditions for a rational homology disk smoothing.

Everything is exact: rationals are :class:`fractions.Fraction`, groups are
handled in Smith-normal-form coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Sequence

from .graph import PlumbingTree, gram_matrix
from .lattice import find_embedding
from .snf import smith_normal_form

ISOTROPIC_BUDGET = 10_000


class ObstructionError(ValueError):
    pass


def _solve(matrix, rhs) -> list[Fraction]:
    """Exact Gauss-Jordan solve of a nonsingular system."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise ObstructionError("singular intersection matrix")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [row[n] for row in a]


def _inverse(matrix) -> list[list[Fraction]]:
    n = len(matrix)
    cols = [_solve(matrix, [int(i == j) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _adjunction_rhs(tree: PlumbingTree) -> list[int]:
    return [-w - 2 for w in tree.weights]


@dataclass(frozen=True)
class CanonicalData:
    K: tuple            # coefficients over the vertices
    K_squared: Fraction


def canonical_class(tree: PlumbingTree) -> CanonicalData:
    """Solve ``K . E_v = -E_v^2 - 2`` for ``K`` in the rational span."""
    g = gram_matrix(tree)
    rhs = _adjunction_rhs(tree)
    c = _solve(g, rhs)
    return CanonicalData(tuple(c), sum(x * y for x, y in zip(c, rhs)))


def _dot(g, x, y):
    return sum(x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if g[i][j])


def fundamental_cycle(tree: PlumbingTree, order: Sequence[int] | None = None) -> tuple[int, ...]:
    """Laufer's iteration from the first vertex.

    ``order`` optionally fixes the scan order used to pick the next vertex
    with positive intersection.
    """
    g = gram_matrix(tree)
    n = len(g)
    order = list(range(n)) if order is None else list(order)
    z = [0] * n
    z[order[0]] = 1
    while True:
        for w in order:
            if sum(g[w][j] * z[j] for j in range(n)) > 0:
                z[w] += 1
                break
        else:
            return tuple(z)


def is_rational(tree: PlumbingTree) -> bool:
    """``Z.(Z + K) == -2`` for the fundamental cycle ``Z``."""
    g = gram_matrix(tree)
    z = fundamental_cycle(tree)
    zk = sum(a * b for a, b in zip(z, _adjunction_rhs(tree)))
    return _dot(g, z, z) + zk == -2


# ---- discriminant group ---------------------------------------------------------

@dataclass
class DiscriminantData:
    factors: list[int]          # nontrivial invariant factors
    order: int
    is_square: bool
    generators: list            # lifts in Z^n (pairing coordinates)
    bilinear: list              # x_i . x_j in Q, on the lifts
    linear: list                # x_i . K in Q, on the lifts
    k_class: tuple              # class of K in SNF coordinates

    def q(self, a: Sequence[int]) -> Fraction:
        """Quadratic function ``(e.e + e.K)/2`` mod 1 in SNF coordinates."""
        s = Fraction(0)
        k = len(a)
        for i in range(k):
            if a[i]:
                s += a[i] * self.linear[i]
                for j in range(k):
                    if a[j]:
                        s += a[i] * a[j] * self.bilinear[i][j]
        return (s / 2) % 1

    def b(self, a, c) -> Fraction:
        s = Fraction(0)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(c):
                    if y:
                        s += x * y * self.bilinear[i][j]
        return s % 1

    def elements(self):
        return product(*(range(d) for d in self.factors))

    def add(self, a, c):
        return tuple((x + y) % d for x, y, d in zip(a, c, self.factors))


def discriminant(tree: PlumbingTree) -> DiscriminantData:
    g = gram_matrix(tree)
    n = len(g)
    s, u, _v, uinv = smith_normal_form(g)
    diag = [s[i][i] for i in range(n)]
    if any(d == 0 for d in diag):
        raise ObstructionError("degenerate intersection form")
    keep = [i for i, d in enumerate(diag) if d > 1]
    factors = [diag[i] for i in keep]
    order = 1
    for d in diag:
        order *= d
    gens = [tuple(uinv[r][i] for r in range(n)) for i in keep]
    ginv = _inverse(g)
    c = canonical_class(tree).K
    # exact values on the fixed lifts; q needs them before reduction mod 1
    bil = [[sum(x[r] * ginv[r][t] * y[t] for r in range(n) for t in range(n))
            for y in gens] for x in gens]
    lin = [sum(x[r] * c[r] for r in range(n)) for x in gens]
    rhs = _adjunction_rhs(tree)
    kc = tuple(sum(u[i][r] * rhs[r] for r in range(n)) % diag[i] for i in keep)
    root = isqrt(order)
    return DiscriminantData(factors, order, root * root == order, gens, bil, lin, kc)


def has_isotropic_subgroup(tree: PlumbingTree, budget: int = ISOTROPIC_BUDGET) -> str:
    """``"yes"``, ``"no"`` or ``"skipped: <reason>"``.

    Looks for a subgroup ``I`` of order ``sqrt|D|`` on which ``q`` vanishes and
    which contains the class of ``K``; such an ``I`` equals its orthogonal.
    """
    d = discriminant(tree)
    if not d.is_square:
        return f"skipped: |D| = {d.order} is not a square"
    if d.order > budget:
        return f"skipped: |D| = {d.order} exceeds budget {budget}"
    target = isqrt(d.order)
    zero = tuple(0 for _ in d.factors)
    if target == 1:
        return "yes"
    iso = [a for a in d.elements() if a != zero and d.q(a) == 0]
    seen: set = set()

    def closure(group: frozenset, g) -> frozenset:
        out = set(group)
        frontier = list(group)
        while frontier:
            x = frontier.pop()
            y = d.add(x, g)
            while y not in out:
                out.add(y)
                frontier.append(y)
                y = d.add(y, g)
        return frozenset(out)

    def rec(group: frozenset, gens: list) -> bool:
        if len(group) == target:
            return d.k_class in group
        if len(group) > target or group in seen:
            return False
        seen.add(group)
        for g in iso:
            if g in group or any(d.b(g, h) for h in gens):
                continue
            new = closure(group, g)
            if target % len(new):
                continue
            if rec(new, gens + [g]):
                return True
        return False

    return "yes" if rec(frozenset([zero]), []) else "no"


# ---- mu invariant ---------------------------------------------------------------

def wu_vector(tree: PlumbingTree) -> tuple[int, ...]:
    """Unique 0/1 solution of ``G w = diag(G) (mod 2)``; needs odd det."""
    g = gram_matrix(tree)
    n = len(g)
    rows = [[x % 2 for x in g[i]] + [g[i][i] % 2] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if rows[i][k]), None)
        if piv is None:
            raise ObstructionError("mu undefined: even determinant (2-torsion)")
        rows[k], rows[piv] = rows[piv], rows[k]
        for i in range(n):
            if i != k and rows[i][k]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[k])]
    return tuple(rows[i][n] for i in range(n))


def mu_invariant(tree: PlumbingTree) -> int:
    """``(signature - w.w) mod 16`` with signature ``-n``."""
    w = wu_vector(tree)
    g = gram_matrix(tree)
    return (-len(tree) - _dot(g, w, w)) % 16


# ---- report -----------------------------------------------------------------------

@dataclass
class ObstructionReport:
    is_rational: bool
    k_squared: Fraction
    k_squared_plus_n: Fraction
    det: int
    invariant_factors: list
    det_is_square: bool
    isotropic: str
    mu: int | None
    mu_note: str = ""
    in_S: bool | None = None
    failures: list = field(default_factory=list)

    @property
    def passes(self) -> bool:
        return not self.failures


def obstruction_report(tree: PlumbingTree, budget: int = ISOTROPIC_BUDGET,
                       search_budget: int | None = None) -> ObstructionReport:
    cd = canonical_class(tree)
    disc = discriminant(tree)
    try:
        mu, note = mu_invariant(tree), ""
    except ObstructionError as exc:
        mu, note = None, str(exc)
    rep = ObstructionReport(
        is_rational=is_rational(tree),
        k_squared=cd.K_squared,
        k_squared_plus_n=cd.K_squared + len(tree),
        det=disc.order,
        invariant_factors=disc.factors,
        det_is_square=disc.is_square,
        isotropic=has_isotropic_subgroup(tree, budget),
        mu=mu,
        mu_note=note,
        in_S=find_embedding(tree, search_budget) is not None,
    )
    if not rep.is_rational:
        rep.failures.append("not rational")
    if rep.k_squared_plus_n != 0:
        rep.failures.append(f"n + K^2 = {rep.k_squared_plus_n} != 0")
    if not rep.det_is_square:
        rep.failures.append(f"|D| = {rep.det} is not a square")
    if rep.isotropic == "no":
        rep.failures.append("no self-isotropic subgroup")
    if mu:
        rep.failures.append(f"mu = {mu} (mod 16) != 0")
    if rep.in_S is False:
        rep.failures.append("no embedding into the diagonal lattice")
    return rep
