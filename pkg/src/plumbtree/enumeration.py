"""Exhaustive enumeration of small minimal negative-definite trees and the
survey that checks the classification on them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .families import classify
from .graph import PlumbingTree, canonical_form, is_negative_definite
from .lattice import Case, case_of, index_profile, iter_embeddings
from .obstructions import canonical_class, discriminant

SURVEY_GUARD = 5


class EnumerationError(ValueError):
    pass


def tree_shapes(n: int) -> list[list[tuple[int, int]]]:
    """Edge lists of the unlabeled trees on ``n`` vertices."""
    if n < 1:
        raise EnumerationError("n must be positive")
    if n == 1:
        return [[]]
    if n == 2:
        return [[(0, 1)]]
    return [sorted(tuple(sorted(e)) for e in t.edges()) for t in nx.nonisomorphic_trees(n)]


def _automorphisms(n: int, edges) -> list[dict]:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return list(GraphMatcher(g, g).isomorphisms_iter())


def enumerate_trees(n: int, weight_floor: int) -> Iterator[PlumbingTree]:
    """Every minimal negative-definite tree on ``n`` vertices with weights in
    ``[weight_floor, -2]``, once per isomorphism class."""
    if weight_floor > -2:
        raise EnumerationError("weight floor must be <= -2")
    weights = range(weight_floor, -1)
    for edges in tree_shapes(n):
        autos = [a for a in _automorphisms(n, edges) if any(a[i] != i for i in a)]
        for ws in product(weights, repeat=n):
            # keep the lexicographically least assignment in its orbit
            smallest = True
            for a in autos:
                img = [0] * n
                for i, j in a.items():
                    img[j] = ws[i]
                if tuple(img) < ws:
                    smallest = False
                    break
            if not smallest:
                continue
            tree = PlumbingTree(list(enumerate(ws)), edges)
            if is_negative_definite(tree):
                yield tree


def embedding_cases(tree: PlumbingTree) -> set:
    """Case labels over all embeddings, without structural pruning."""
    return {case_of(index_profile(e)) for e in iter_embeddings(tree, prune=False)}


def tree_text(tree: PlumbingTree) -> str:
    ws = ",".join(str(w) for w in tree.weights)
    es = ",".join(f"{a}-{b}" for a, b in tree.edges)
    return f"[{ws}] {{{es}}}"


@dataclass
class SurveyReport:
    n: int
    weight_floor: int
    total: int = 0
    in_S: int = 0
    not_in_S: int = 0
    by_labels: Counter = field(default_factory=Counter)
    by_case: Counter = field(default_factory=Counter)
    case_bc: list = field(default_factory=list)
    unrecognized: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    obstruction_ok: int = 0
    obstruction_failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "weight_floor": self.weight_floor,
            "note": "evidence at bounded weights only; the families have unbounded weights",
            "total": self.total,
            "in_S": self.in_S,
            "not_in_S": self.not_in_S,
            "by_labels": dict(sorted(self.by_labels.items())),
            "by_case": dict(sorted(self.by_case.items())),
            "case_bc": self.case_bc,
            "unrecognized": self.unrecognized,
            "violations": self.violations,
            "obstruction_ok": self.obstruction_ok,
            "obstruction_failures": self.obstruction_failures,
        }

    def summary(self) -> str:
        lines = [
            f"survey n={self.n} weights in [{self.weight_floor}, -2] (bounded weights: evidence, not proof)",
            f"  trees        {self.total}",
            f"  in S         {self.in_S}",
            f"  not in S     {self.not_in_S}",
            f"  Case B/C     {len(self.case_bc)}",
            f"  violations   {len(self.violations)}",
        ]
        for key, count in sorted(self.by_labels.items()):
            lines.append(f"  labels {key:<24} {count}")
        return "\n".join(lines)


def survey(n: int, weight_floor: int, guard: int = SURVEY_GUARD) -> SurveyReport:
    if n > guard:
        raise EnumerationError(f"survey limited to n <= {guard}, got {n}")
    rep = SurveyReport(n, weight_floor)
    for tree in enumerate_trees(n, weight_floor):
        rep.total += 1
        cr = classify(tree)
        text = tree_text(tree)
        if cr.violation:
            rep.violations.append(text)
            if cr.in_S:
                rep.unrecognized.append(text)
        if not cr.in_S:
            rep.not_in_S += 1
            continue
        rep.in_S += 1
        rep.by_labels["+".join(sorted({x.family for x in cr.labels})) or "-"] += 1
        cases = embedding_cases(tree)
        for c in cases:
            rep.by_case[c.value] += 1
        if Case.B in cases or Case.C in cases:
            rep.case_bc.append(text)
        k2 = canonical_class(tree).K_squared
        if k2 + n == 0 and discriminant(tree).is_square:
            rep.obstruction_ok += 1
        else:
            rep.obstruction_failures.append(text)
    return rep


# ---- independent generator used as a cross-check --------------------------------

def _prufer_trees(n: int):
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(i for i in range(n) if degree[i] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [i for i in range(n) if degree[i] == 1]
        edges.append((u, v))
        yield edges


def naive_tree_forms(n: int, weight_floor: int) -> set[bytes]:
    """Canonical forms of the same class, built from all labeled trees."""
    out = set()
    for edges in _prufer_trees(n):
        for ws in product(range(weight_floor, -1), repeat=n):
            tree = PlumbingTree(list(enumerate(ws)), edges)
            if is_negative_definite(tree):
                out.add(canonical_form(tree))
    return out
