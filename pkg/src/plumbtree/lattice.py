"""Embeddings of plumbing trees into the diagonal lattice n<-1>.

An embedding sends every vertex to an integer vector of length ``n = |tree|``
with pairing ``Q(u, v) = -sum(u_i * v_i)``.  It must reproduce the Gram
matrix and satisfy the adjunction equality ``Q(v, K) + Q(v, v) = -2`` with
``K = sum(E_i)``.  Embeddings are plain dicts ``vertex id -> tuple``.

Every vector satisfying adjunction has exactly one coefficient in ``{1, -2}``
(the leading index) and all others in ``{0, -1}``; the searcher enumerates
only such vectors.
"""

from __future__ import annotations

import os
from enum import Enum
from itertools import combinations, product
from typing import Iterator

import numpy as np

from .graph import PlumbingTree, bfs_order

Embedding = dict

DEFAULT_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than allowed; no verdict."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} nodes exceeded")
        self.budget = budget


class EmbeddingError(ValueError):
    pass


def default_budget() -> int:
    raw = os.environ.get("PLUMBTREE_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise EmbeddingError(f"PLUMBTREE_BUDGET={raw!r} is not an integer") from None
    return DEFAULT_BUDGET


def pair(u, v) -> int:
    return -sum(a * b for a, b in zip(u, v))


def verify_embedding(tree: PlumbingTree, emb: Embedding) -> bool:
    n = len(tree)
    ids = tree.ids
    if set(emb) != set(ids):
        raise EmbeddingError("embedding does not cover exactly the tree's vertices")
    vecs = [tuple(emb[v]) for v in ids]
    if any(len(x) != n for x in vecs):
        raise EmbeddingError(f"embedding rank differs from |tree| = {n}")
    adj = tree.adjacency
    for i, (x, w) in enumerate(zip(vecs, tree.weights)):
        sq = pair(x, x)
        if sq != w:
            return False
        if -sum(x) + sq != -2:
            return False
        for j in range(i + 1, n):
            if pair(x, vecs[j]) != (1 if j in adj[i] else 0):
                return False
    return True


# ---- search ---------------------------------------------------------

class _Search:
    """Backtracking over vertex images in BFS order.

    Basis indices are introduced in first-use order: a vector may use any
    already-used index, and new indices are always the smallest unused ones,
    with the leading index taking the first of them.
    """

    def __init__(self, tree: PlumbingTree, budget: int | None, prune: bool = True):
        self.tree = tree
        self.n = len(tree)
        self.budget = default_budget() if budget is None else budget
        self.prune = prune
        self.nodes = 0
        start = next(i for i, a in enumerate(tree.adjacency) if len(a) <= 1)
        self.order = bfs_order(tree, start)
        self.weights = tree.weights
        self.adj = [set(a) for a in tree.adjacency]

    def _candidates(self, k: int, used: int, images: list, two_used: bool,
                    leads: set) -> Iterator[tuple[dict, int, int, bool]]:
        """Yield (sparse vector, new used count, lead, is_minus_two)."""
        v = self.order[k]
        w = self.weights[v]
        n = self.n
        placed = [(self.order[j], images[j]) for j in range(k)]
        forms = [(1, -w - 1)]
        if w <= -4 and not (self.prune and two_used):
            forms.append((-2, -w - 4))
        for lead_coef, jsize in forms:
            lead_opts = list(range(used)) + ([used] if used < n else [])
            for lead in lead_opts:
                if lead_coef == 1 and self.prune and lead in leads:
                    continue
                new_start = used + 1 if lead == used else used
                olds = [i for i in range(used) if i != lead]
                for n_new in range(0, jsize + 1):
                    if new_start + n_new > n:
                        break
                    n_old = jsize - n_new
                    if n_old > len(olds):
                        continue
                    new_idx = list(range(new_start, new_start + n_new))
                    for jold in combinations(olds, n_old):
                        vec = {lead: lead_coef}
                        for j in jold:
                            vec[j] = -1
                        for j in new_idx:
                            vec[j] = -1
                        ok = True
                        for u, img in placed:
                            s = 0
                            for i, c in img.items():
                                d = vec.get(i)
                                if d:
                                    s -= c * d
                            if s != (1 if u in self.adj[v] else 0):
                                ok = False
                                break
                        if ok:
                            yield vec, new_start + n_new, lead, lead_coef == -2

    def run(self) -> Iterator[list]:
        images: list = []

        def rec(k, used, two_used, leads):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(self.budget)
            if k == self.n:
                yield list(images)
                return
            for vec, nused, lead, is_two in self._candidates(k, used, images, two_used, leads):
                images.append(vec)
                new_leads = leads if is_two else leads | {lead}
                yield from rec(k + 1, nused, two_used or is_two, new_leads)
                images.pop()

        yield from rec(0, 0, False, frozenset())

    def to_embedding(self, images: list) -> Embedding:
        ids = self.tree.ids
        out = {}
        for v, img in zip(self.order, images):
            vec = [0] * self.n
            for i, c in img.items():
                vec[i] = c
            out[ids[v]] = tuple(vec)
        return {v: out[v] for v in ids}


def iter_embeddings(tree: PlumbingTree, budget: int | None = None,
                    prune: bool = True) -> Iterator[Embedding]:
    """All embeddings up to permutation of basis indices.

    With ``prune=False`` the two structural prunes (single ``-2`` leading
    vector, distinct ``+1`` leading indices) are switched off and only the
    index-relabelling symmetry is factored out.
    """
    s = _Search(tree, budget, prune)
    for images in s.run():
        yield s.to_embedding(images)


def find_embedding(tree: PlumbingTree, budget: int | None = None) -> Embedding | None:
    """First embedding in lexicographic search order, or ``None``."""
    for emb in iter_embeddings(tree, budget):
        assert verify_embedding(tree, emb)
        return emb
    return None


# ---- unpruned oracle ---------------------------------------------------

def _all_vectors(n: int, weight: int) -> np.ndarray:
    grid = np.array(list(product((-2, -1, 0, 1), repeat=n)), dtype=np.int64).reshape(-1, n)
    sq = -(grid * grid).sum(axis=1)
    ok = (sq == weight) & (-grid.sum(axis=1) + sq == -2)
    return grid[ok]


def brute_force_embedding(tree: PlumbingTree, max_n: int = 6) -> Embedding | None:
    """Exhaustive search over all coefficient vectors in ``{-2,..,1}^n``.

    Uses only the defining conditions (squares, adjunction, pairings) with
    plain forward checking; no symmetry breaking or structural pruning.
    Meant as a test oracle.
    """
    n = len(tree)
    if n > max_n:
        raise EmbeddingError(f"brute force limited to {max_n} vertices, got {n}")
    cache: dict[int, np.ndarray] = {}
    for w in set(tree.weights):
        cache[w] = _all_vectors(n, w)
    order = bfs_order(tree, 0)
    adj = tree.adjacency
    images: list = []

    def rec(k, domains):
        if k == n:
            return True
        v = order[k]
        for vec in domains[0]:
            nxt = []
            for off, dom in enumerate(domains[1:], start=k + 1):
                target = 1 if order[off] in adj[v] else 0
                dom = dom[-(dom @ vec) == target]
                if not len(dom):
                    break
                nxt.append(dom)
            else:
                images.append(tuple(int(c) for c in vec))
                if rec(k + 1, nxt):
                    return True
                images.pop()
        return False

    if not rec(0, [cache[tree.weights[v]] for v in order]):
        return None
    ids = tree.ids
    found = {ids[v]: img for v, img in zip(order, images)}
    return {v: found[v] for v in ids}


# ---- analysis -----------------------------------------------------------

_TYPES = {
    (1,): 1,
    (-1,): 2,
    (-2,): 3,
    (-1, 1): 4,
    (-2, 1): 5,
    (-1, -1): 6,
    (-1, -1, 1): 7,
    (-2, -1, 1): 8,
    (-1, -1, -1, 1): 9,
    (): 10,
}


class Case(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    NOT_APPLICABLE = "NotApplicable"


def _rank(emb: Embedding) -> int:
    return len(next(iter(emb.values())))


def index_profile(emb: Embedding) -> list[int | None]:
    """Type 1..10 of every basis index (``None`` for an unlisted pattern)."""
    n = _rank(emb)
    out = []
    for i in range(n):
        key = tuple(sorted(x[i] for x in emb.values() if x[i]))
        out.append(_TYPES.get(key))
    return out


def case_of(profile) -> Case:
    types = set(profile)
    if 6 in types:
        return Case.A
    if 9 in types:
        return Case.B if 5 in types else Case.C
    return Case.NOT_APPLICABLE


def leading_index(vec) -> tuple[int, int] | None:
    """``(index, coefficient)`` of the unique ``+1`` or ``-2`` entry."""
    lead = [(i, c) for i, c in enumerate(vec) if c in (1, -2)]
    return lead[0] if len(lead) == 1 else None


def is_full(tree: PlumbingTree, emb: Embedding | None = None) -> bool:
    """Graph-level fullness: sum of weights equals ``-3n - 1``."""
    return sum(tree.weights) == -3 * len(tree) - 1


def full_vectors(emb: Embedding) -> set:
    profile = index_profile(emb)
    out = set()
    for v, vec in emb.items():
        lead = leading_index(vec)
        if lead and lead[1] == 1 and profile[lead[0]] in (5, 7, 9):
            out.add(v)
    return out


def reducible_vectors(tree: PlumbingTree, emb: Embedding) -> set:
    """Vertices ``v = E_i - ...`` whose other ``-E_i`` entries sit exactly
    on the neighbours of ``v``."""
    out = set()
    for v, vec in emb.items():
        lead = leading_index(vec)
        if not lead or lead[1] != 1:
            continue
        i = lead[0]
        nbrs = set(tree.neighbors(v))
        if all((emb[w][i] == -1) == (w in nbrs) for w in emb if w != v):
            out.add(v)
    return out


def format_vector(vec) -> str:
    """``+E3 -E1 -2E4`` with 1-based indices, leading entry first."""
    terms = []
    lead = leading_index(vec)
    order = list(range(len(vec)))
    if lead:
        order.remove(lead[0])
        order.insert(0, lead[0])
    for i in order:
        c = vec[i]
        if not c:
            continue
        sign = "+" if c > 0 else "-"
        mag = "" if abs(c) == 1 else str(abs(c))
        terms.append(f"{sign}{mag}E{i + 1}")
    return " ".join(terms) if terms else "0"
