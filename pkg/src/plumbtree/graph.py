"""Plumbing trees: data model, intersection form, blow-ups and canonical forms.

A plumbing tree is a finite tree whose vertices carry negative integer
weights (self-intersections of the plumbed spheres).  Vertex ids are opaque
hashable tokens; the order in which vertices are given is kept and used as
the dense internal index order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

VertexId = Hashable


class GraphError(ValueError):
    """Raised for malformed trees or illegal moves."""


@dataclass(frozen=True)
class PlumbingTree:
    """A weighted tree.

    ``vertices`` is a sequence of ``(id, weight)`` pairs and ``edges`` a
    sequence of id pairs.  Every weight must be ``<= -1``; the graph must be
    connected and acyclic.
    """

    vertices: tuple[tuple[VertexId, int], ...]
    edges: tuple[tuple[VertexId, VertexId], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _adj: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, vertices: Iterable[tuple[VertexId, int]],
                 edges: Iterable[Sequence[VertexId]] = ()):
        verts = tuple((v, int(w)) for v, w in vertices)
        eds = tuple((a, b) for a, b in edges)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", eds)
        index: dict = {}
        for i, (v, w) in enumerate(verts):
            if v in index:
                raise GraphError(f"duplicate vertex id {v!r}")
            if w > -1:
                raise GraphError(f"vertex {v!r} has weight {w}; weights must be <= -1")
            index[v] = i
        if not verts:
            raise GraphError("a plumbing tree needs at least one vertex")
        adj: list[list[int]] = [[] for _ in verts]
        seen = set()
        for a, b in eds:
            if a not in index or b not in index:
                raise GraphError(f"edge ({a!r}, {b!r}) refers to an unknown vertex")
            if a == b:
                raise GraphError(f"self-loop at {a!r}")
            key = frozenset((a, b))
            if key in seen:
                raise GraphError(f"duplicate edge ({a!r}, {b!r})")
            seen.add(key)
            adj[index[a]].append(index[b])
            adj[index[b]].append(index[a])
        if len(eds) != len(verts) - 1:
            raise GraphError(f"{len(verts)} vertices and {len(eds)} edges: not a tree")
        # connectivity
        reached = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in reached:
                    reached.add(j)
                    stack.append(j)
        if len(reached) != len(verts):
            raise GraphError("graph is not connected")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    # ---- dense views -------------------------------------------------
    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def ids(self) -> tuple:
        return tuple(v for v, _ in self.vertices)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.vertices)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbour lists by dense index."""
        return self._adj

    def index(self, v: VertexId) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def weight(self, v: VertexId) -> int:
        return self.vertices[self.index(v)][1]

    def neighbors(self, v: VertexId) -> list:
        ids = self.ids
        return [ids[j] for j in self._adj[self.index(v)]]

    def valency(self, v: VertexId) -> int:
        return len(self._adj[self.index(v)])

    def has_edge(self, a: VertexId, b: VertexId) -> bool:
        return self.index(b) in self._adj[self.index(a)]

    def leaves(self) -> list:
        return [v for i, (v, _) in enumerate(self.vertices) if len(self._adj[i]) <= 1]

    def is_chain(self) -> bool:
        return all(len(a) <= 2 for a in self._adj)

    def chain_order(self) -> list:
        """Vertex ids of a chain read from one end (the end first listed)."""
        if not self.is_chain():
            raise GraphError("not a chain")
        if len(self) == 1:
            return list(self.ids)
        start = next(i for i, a in enumerate(self._adj) if len(a) == 1)
        order, prev, cur = [start], -1, start
        while True:
            nxt = [j for j in self._adj[cur] if j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            order.append(cur)
        ids = self.ids
        return [ids[i] for i in order]

    def with_weights(self, new: dict) -> "PlumbingTree":
        return PlumbingTree([(v, new.get(v, w)) for v, w in self.vertices], self.edges)

    def relabel(self, mapping: dict) -> "PlumbingTree":
        return PlumbingTree([(mapping[v], w) for v, w in self.vertices],
                            [(mapping[a], mapping[b]) for a, b in self.edges])

    def __repr__(self) -> str:
        vs = ", ".join(f"{v!r}:{w}" for v, w in self.vertices)
        es = ", ".join(f"{a!r}-{b!r}" for a, b in self.edges)
        return f"PlumbingTree([{vs}]; [{es}])"


def chain(weights: Sequence[int], ids: Sequence | None = None) -> PlumbingTree:
    """Linear chain with the given weights, ids ``0..k-1`` by default."""
    ids = list(range(len(weights))) if ids is None else list(ids)
    return PlumbingTree(zip(ids, weights), zip(ids, ids[1:]))


def star(center: int, legs: Sequence[Sequence[int]]) -> PlumbingTree:
    """Star-shaped tree: ``center`` weight and legs read from the node outward.

    The center gets id 0; leg vertices are numbered consecutively leg by leg.
    """
    vertices = [(0, center)]
    edges = []
    nxt = 1
    for leg in legs:
        prev = 0
        for w in leg:
            vertices.append((nxt, w))
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return PlumbingTree(vertices, edges)


# ---- intersection form ----------------------------------------------

def gram_matrix(tree: PlumbingTree) -> list[list[int]]:
    """Intersection matrix: weights on the diagonal, 1 for each edge."""
    n = len(tree)
    g = [[0] * n for _ in range(n)]
    for i, w in enumerate(tree.weights):
        g[i][i] = w
    for i, nbrs in enumerate(tree.adjacency):
        for j in nbrs:
            g[i][j] = 1
    return g


def leading_minors(matrix: Sequence[Sequence[int]]) -> list[Fraction]:
    """Leading principal minors via exact fraction-free Gaussian elimination."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    minors = []
    det = Fraction(1)
    for k in range(n):
        if a[k][k] == 0:
            # a zero pivot means this leading minor vanishes; remaining
            # minors are computed directly from the original matrix
            minors.append(Fraction(0))
            for m in range(k + 2, n + 1):
                minors.append(determinant([row[:m] for row in matrix[:m]]))
            return minors
        det *= a[k][k]
        minors.append(det)
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return minors


def determinant(matrix: Sequence[Sequence[int]]) -> Fraction:
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def is_negative_definite(tree: PlumbingTree) -> bool:
    """True iff every leading principal minor of ``-Gram`` is positive."""
    neg = [[-x for x in row] for row in gram_matrix(tree)]
    return all(m > 0 for m in leading_minors(neg))


def is_minimal(tree: PlumbingTree) -> bool:
    return all(w != -1 for w in tree.weights)


# ---- blow-ups and blow-downs ---------------------------------------

def _fresh_id(tree: PlumbingTree):
    ids = tree.ids
    if all(isinstance(v, int) and not isinstance(v, bool) for v in ids):
        return max(ids) + 1
    k = len(ids)
    taken = {str(v) for v in ids}
    while f"x{k}" in taken:
        k += 1
    return f"x{k}"


def blow_up_vertex(tree: PlumbingTree, v: VertexId, new_id=None) -> PlumbingTree:
    """Blow up a generic point of ``v``: its weight drops by one and a
    new ``-1`` leaf is attached to it."""
    w = tree.weight(v)
    new_id = _fresh_id(tree) if new_id is None else new_id
    verts = [(u, (wt - 1 if u == v else wt)) for u, wt in tree.vertices]
    verts.append((new_id, -1))
    return PlumbingTree(verts, list(tree.edges) + [(v, new_id)])


def blow_up_edge(tree: PlumbingTree, a: VertexId, b: VertexId, new_id=None) -> PlumbingTree:
    """Blow up the intersection point of ``a`` and ``b``."""
    if not tree.has_edge(a, b):
        raise GraphError(f"no edge between {a!r} and {b!r}")
    new_id = _fresh_id(tree) if new_id is None else new_id
    verts = [(u, (wt - 1 if u in (a, b) else wt)) for u, wt in tree.vertices]
    verts.append((new_id, -1))
    edges = [e for e in tree.edges if {e[0], e[1]} != {a, b}]
    edges += [(a, new_id), (new_id, b)]
    return PlumbingTree(verts, edges)


def blow_down(tree: PlumbingTree, v: VertexId) -> PlumbingTree:
    """Contract a ``-1`` vertex of valency at most two."""
    if tree.weight(v) != -1:
        raise GraphError(f"vertex {v!r} has weight {tree.weight(v)}, not -1")
    nbrs = tree.neighbors(v)
    if len(nbrs) > 2:
        raise GraphError(f"vertex {v!r} has valency {len(nbrs)}; only valency <= 2 blows down")
    if len(tree) == 1:
        raise GraphError("cannot blow down the only vertex")
    verts = []
    for u, wt in tree.vertices:
        if u == v:
            continue
        if u in nbrs:
            wt += 1
            if wt > -1:
                raise GraphError(f"blowing down {v!r} gives {u!r} weight {wt}")
        verts.append((u, wt))
    edges = [e for e in tree.edges if v not in e]
    if len(nbrs) == 2:
        edges.append((nbrs[0], nbrs[1]))
    return PlumbingTree(verts, edges)


# ---- canonical form ---------------------------------------------------

def centroids(tree: PlumbingTree) -> list[int]:
    """Dense indices of the one or two centroid vertices."""
    n = len(tree)
    adj = tree.adjacency
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for u in order:
        for x in adj[u]:
            if parent[x] == -1:
                parent[x] = u
                order.append(x)
    size = [1] * n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    best, result = n, []
    for u in range(n):
        heaviest = n - size[u]
        for x in adj[u]:
            if x != parent[u] or u == 0:
                if parent[x] == u and x != u:
                    heaviest = max(heaviest, size[x])
        if heaviest < best:
            best, result = heaviest, [u]
        elif heaviest == best:
            result.append(u)
    return result


def _encode(tree: PlumbingTree, root: int, weights: Sequence) -> str:
    adj = tree.adjacency
    parent = {root: None}
    order = [root]
    for u in order:
        for x in adj[u]:
            if x not in parent:
                parent[x] = u
                order.append(x)
    codes: dict[int, str] = {}
    for u in reversed(order):
        kids = sorted(codes[x] for x in adj[u] if parent.get(x) == u and x != root)
        codes[u] = "(" + str(weights[u]) + "".join(kids) + ")"
    return codes[root]


def canonical_form(tree: PlumbingTree, marks: Sequence | None = None) -> bytes:
    """Isomorphism-invariant encoding of a weighted tree.

    ``marks`` optionally decorates vertices further (by dense index); used to
    canonicalize trees with a distinguished vertex.
    """
    labels = tree.weights if marks is None else [f"{w}:{m}" for w, m in zip(tree.weights, marks)]
    return min(_encode(tree, c, labels) for c in centroids(tree)).encode()


def is_isomorphic(t1: PlumbingTree, t2: PlumbingTree) -> bool:
    return len(t1) == len(t2) and canonical_form(t1) == canonical_form(t2)


def rooted_isomorphism(t1: PlumbingTree, r1, t2: PlumbingTree, r2) -> dict | None:
    """A weight-preserving isomorphism ``t1 -> t2`` sending ``r1`` to ``r2``."""
    if len(t1) != len(t2):
        return None

    def codes(t, root):
        adj = t.adjacency
        parent = {root: None}
        order = [root]
        for u in order:
            for x in adj[u]:
                if x not in parent:
                    parent[x] = u
                    order.append(x)
        c: dict[int, str] = {}
        kids: dict[int, list[int]] = {}
        for u in reversed(order):
            ks = [x for x in adj[u] if parent.get(x) == u and x != root]
            ks.sort(key=lambda x: c[x])
            kids[u] = ks
            c[u] = "(" + str(t.weights[u]) + "".join(c[x] for x in ks) + ")"
        return c, kids

    i1, i2 = t1.index(r1), t2.index(r2)
    c1, k1 = codes(t1, i1)
    c2, k2 = codes(t2, i2)
    if c1[i1] != c2[i2]:
        return None
    mapping = {}
    stack = [(i1, i2)]
    while stack:
        a, b = stack.pop()
        mapping[t1.ids[a]] = t2.ids[b]
        stack.extend(zip(k1[a], k2[b]))
    return mapping


def bfs_order(tree: PlumbingTree, start: int = 0) -> list[int]:
    adj = tree.adjacency
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for x in adj[u]:
            if x not in seen:
                seen.add(x)
                order.append(x)
                queue.append(x)
    return order
