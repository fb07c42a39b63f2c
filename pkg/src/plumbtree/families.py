"""The seven families G, W, N, M, A, B, C: generators, explicit embeddings,
recognizers and the classifier.

Star-shaped members are built with :func:`plumbtree.graph.star`, so vertex 0
is the node and legs are numbered outward, one leg after the other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .contfrac import apply_word, eval_cf, gpq_cf, gr_reduce, is_gpq_value
from .graph import (
    GraphError,
    PlumbingTree,
    blow_down,
    blow_up_edge,
    blow_up_vertex,
    canonical_form,
    chain,
    is_minimal,
    is_negative_definite,
    rooted_isomorphism,
    star,
)
from .lattice import (
    Case,
    Embedding,
    case_of,
    find_embedding,
    full_vectors,
    index_profile,
    is_full,
    verify_embedding,
)

PARAM_GUARD = 16


class FamilyError(ValueError):
    pass


# ---- labels ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class BlowupTrace:
    """A base graph A/B/C plus moves applied at the current -1 vertex.

    Moves are ``("vertex",)`` or ``("edge", neighbour_id)``.  Base vertices
    have ids 0 (the -1 node) and 1..3 (the leaves); each move creates the
    next integer id, which becomes the current -1 vertex.
    """

    base: str
    moves: tuple = ()

    def __post_init__(self):
        if self.base not in BASES:
            raise FamilyError(f"unknown base {self.base!r}; expected A, B or C")
        object.__setattr__(self, "moves", tuple(tuple(m) for m in self.moves))

    def is_edge_only(self) -> bool:
        return all(m[0] == "edge" for m in self.moves)

    def __str__(self) -> str:
        parts = ["v" if m[0] == "vertex" else f"e{m[1]}" for m in self.moves]
        return f"{self.base}({','.join(parts)})"


@dataclass(frozen=True, order=True)
class FamilyLabel:
    family: str
    params: tuple = field(default=())
    trace: BlowupTrace | None = None

    def __str__(self) -> str:
        if self.trace is not None:
            return str(self.trace)
        return f"{self.family}({','.join(map(str, self.params))})"


def G(p, q): return FamilyLabel("G", (p, q))
def W(p, q, r): return FamilyLabel("W", (p, q, r))
def N(p, q, r): return FamilyLabel("N", (p, q, r))
def M(p, q, r): return FamilyLabel("M", (p, q, r))


def ABC(base: str, moves=()) -> FamilyLabel:
    return FamilyLabel(base, (), BlowupTrace(base, tuple(moves)))


# ---- generators -------------------------------------------------------------

def _check_params(*params):
    for x in params:
        if not isinstance(x, int) or x < 0:
            raise FamilyError(f"parameters must be non-negative integers, got {params}")


def generate_gpq(p: int, q: int) -> PlumbingTree:
    if not (isinstance(p, int) and isinstance(q, int)) or not (0 < q < p) or gcd(p, q) != 1:
        raise FamilyError(f"G needs coprime p > q > 0, got ({p}, {q})")
    return chain([-a for a in gpq_cf(p, q)])


def _twos(k):
    return [-2] * k


def generate_w(p, q, r) -> PlumbingTree:
    _check_params(p, q, r)
    return star(-4, [_twos(q) + [-(p + 3)],
                     _twos(r) + [-(q + 3)],
                     _twos(p) + [-(r + 3)]])


def generate_n(p, q, r) -> PlumbingTree:
    _check_params(p, q, r)
    if p == 0:
        return star(-3, [_twos(q) + [-(r + 4)], _twos(r) + [-(q + 4)], [-2]])
    return star(-3, [_twos(q) + [-3] + _twos(p - 1) + [-(r + 3)],
                     _twos(r) + [-(q + 4)],
                     [-(p + 2)]])


def generate_m(p, q, r) -> PlumbingTree:
    _check_params(p, q, r)
    if p == 0 and r == 0:
        raise FamilyError("M needs (p, r) != (0, 0); the graphs with p = r = 0 belong to family C")
    if p == 0:
        left = _twos(q) + [-3] + _twos(r - 1) + [-(q + 5)]
        return star(-2, [left, [-2], [-(r + 3)]])
    if r == 0:
        left = _twos(q) + [-4] + _twos(p - 1) + [-(q + 4)]
        return star(-2, [left, [-(p + 2)], [-3]])
    left = _twos(q) + [-3] + _twos(r - 1) + [-3] + _twos(p - 1) + [-(q + 4)]
    return star(-2, [left, [-(p + 2)], [-(r + 3)]])


# base graphs: node weight -1, leaves, final decoration, embedding, correction
BASES = {
    "A": dict(leaves=(-3, -3, -3), final=-4,
              vectors=({0: 1}, {1: 1, 0: -1, 2: -1}, {2: 1, 0: -1, 3: -1}, {3: 1, 0: -1, 1: -1}),
              correction={1: -1, 2: -1, 3: -1}),
    "B": dict(leaves=(-4, -4, -2), final=-3,
              vectors=({0: 1}, {1: 1, 0: -1, 2: -1, 3: -1}, {2: 1, 0: -1, 1: -1, 3: -1},
                       {3: 1, 0: -1}),
              correction={1: -1, 2: -1}),
    "C": dict(leaves=(-2, -6, -3), final=-2,
              vectors=({0: 1}, {3: 1, 0: -1}, {2: -2, 0: -1, 3: -1}, {2: 1, 3: -1, 0: -1}),
              correction={1: -1}),
}


def base_graph(base: str) -> PlumbingTree:
    data = BASES[base]
    return star(-1, [[w] for w in data["leaves"]])


def _replay(trace: BlowupTrace):
    """Replay moves; returns (non-minimal tree, current vertex, sparse vectors)."""
    data = BASES[trace.base]
    tree = base_graph(trace.base)
    vecs = {i: dict(v) for i, v in enumerate(data["vectors"])}
    cur = 0
    for move in trace.moves:
        new = len(tree)
        if move[0] == "vertex":
            tree = blow_up_vertex(tree, cur, new_id=new)
            vecs[cur][new] = -1
        elif move[0] == "edge":
            nbr = move[1]
            if nbr not in tree.ids or not tree.has_edge(cur, nbr):
                raise FamilyError(f"{trace}: vertex {nbr!r} is not adjacent to the -1 vertex {cur}")
            tree = blow_up_edge(tree, cur, nbr, new_id=new)
            vecs[cur][new] = -1
            vecs[nbr][new] = -1
        else:
            raise FamilyError(f"unknown move {move!r}")
        vecs[new] = {new: 1}
        cur = new
    return tree, cur, vecs


def generate_abc(trace: BlowupTrace) -> PlumbingTree:
    tree, cur, _ = _replay(trace)
    return tree.with_weights({cur: BASES[trace.base]["final"]})


def generate(label: FamilyLabel) -> PlumbingTree:
    if label.trace is not None:
        return generate_abc(label.trace)
    return {"G": generate_gpq, "W": generate_w, "N": generate_n, "M": generate_m}[label.family](*label.params)


# ---- explicit embeddings -----------------------------------------------------
#
# Symbolic vectors are dicts from basis names ("E1", "F3", ...) to
# coefficients; _materialize maps names to indices.

def _chain(prefix: str, length: int, end: str) -> list[dict]:
    """Vectors X1 - X2, ..., X_length - end."""
    names = [f"{prefix}{i}" for i in range(1, length + 1)] + [end]
    return [{names[i]: 1, names[i + 1]: -1} for i in range(length)]


def _first(prefix: str, length: int, end: str) -> str:
    return f"{prefix}1" if length else end


def _vec(*terms, minus: Sequence[str] = ()) -> dict:
    out: dict = {}
    for name, c in terms:
        out[name] = out.get(name, 0) + c
    for name in minus:
        out[name] = out.get(name, 0) - 1
    return out


def _names(prefix, k):
    return [f"{prefix}{i}" for i in range(1, k + 1)]


def _materialize(tree: PlumbingTree, symbolic: list[dict]) -> Embedding:
    basis = ["E1", "E2", "E3", "E4"]
    for vec in symbolic:
        for name in vec:
            if name not in basis:
                basis.append(name)
    n = len(tree)
    if len(basis) != n:
        raise AssertionError(f"basis size {len(basis)} differs from rank {n}")
    pos = {b: i for i, b in enumerate(basis)}
    out = {}
    for v, vec in zip(tree.ids, symbolic):
        row = [0] * n
        for name, c in vec.items():
            row[pos[name]] += c
        out[v] = tuple(row)
    return out


def _w_vectors(p, q, r):
    # legs in generator order: F (q twos), G (r twos), H (p twos)
    c = _vec(("E1", 1), minus=[_first("F", q, "E2"), _first("G", r, "E4"), _first("H", p, "E3")])
    P = _vec(("E2", 1), minus=["E1", "E3"] + _names("H", p))
    R = _vec(("E4", 1), minus=["E1", "E2"] + _names("F", q))
    Q = _vec(("E3", 1), minus=["E1", "E4"] + _names("G", r))
    return [c] + _chain("F", q, "E2") + [P] + _chain("G", r, "E4") + [R] + _chain("H", p, "E3") + [Q]


def _n_vectors(p, q, r):
    if p == 0:
        c = _vec(("E1", 1), minus=[_first("H", q, "E3"), _first("G", r, "E4")])
        Q = _vec(("E4", 1), minus=["E1", "E2", "E3"] + _names("H", q))
        R = _vec(("E3", 1), minus=["E1", "E2", "E4"] + _names("G", r))
        return ([c] + _chain("H", q, "E3") + [R] + _chain("G", r, "E4") + [Q]
                + [_vec(("E2", 1), minus=["E1"])])
    hq = f"H{q + 1}"
    c = _vec(("E1", 1), minus=[_first("G", r, "E4"), "H1"])
    d = _vec((hq, 1), minus=["E3", _first("F", p - 1, "E2")])
    P = _vec(("E3", 1), minus=["E1", "E2"] + _names("F", p - 1))
    Q = _vec(("E4", 1), minus=["E1", "E3"] + _names("H", q + 1))
    R = _vec(("E2", 1), minus=["E1", "E4"] + _names("G", r))
    left = _chain("H", q, hq) + [d] + _chain("F", p - 1, "E2") + [R]
    return [c] + left + _chain("G", r, "E4") + [Q] + [P]


def _m_vectors(p, q, r):
    hq = f"H{q + 1}"
    c = _vec(("E1", 1), minus=["H1"])
    if p == 0:
        # the G chain ends at E4, and Q, R use E4, E3 respectively
        d = _vec((hq, 1), minus=["E3", _first("G", r - 1, "E4")])
        Q = _vec(("E4", 1), minus=["E1", "E3", "E2"] + _names("H", q + 1))
        R = _vec(("E3", 1), minus=["E1", "E4", "E2"] + _names("G", r - 1))
        left = _chain("H", q, hq) + [d] + _chain("G", r - 1, "E4") + [Q]
        return [c] + left + [_vec(("E2", 1), minus=["E1"])] + [R]
    P = _vec(("E2", 1), minus=["E1", "E4"] + _names("F", p - 1))
    Q = _vec(("E4", 1), minus=["E1", "E3"] + _names("H", q + 1))
    if r == 0:
        d = _vec((hq, 1), minus=["E2", "E3", _first("F", p - 1, "E4")])
        left = _chain("H", q, hq) + [d] + _chain("F", p - 1, "E4") + [Q]
        return [c] + left + [P] + [_vec(("E3", 1), minus=["E1", "E2"])]
    gr = f"G{r}"
    d1 = _vec((hq, 1), minus=["G1", "E3"])
    d2 = _vec((gr, 1), minus=[_first("F", p - 1, "E4"), "E2"])
    R = _vec(("E3", 1), minus=["E1", "E2"] + _names("G", r))
    left = (_chain("H", q, hq) + [d1] + _chain("G", r - 1, gr) + [d2]
            + _chain("F", p - 1, "E4") + [Q])
    return [c] + left + [P] + [R]


def gpq_embedding(p: int, q: int) -> Embedding:
    """Built from ``-2E`` on ``(-4)`` by replaying the left/right steps."""
    cf = gpq_cf(p, q)
    word = gr_reduce(cf)
    if word is None:
        raise AssertionError(f"{cf} not reachable from [4]")
    vecs: list[dict] = [{0: -2}]
    t = 0
    for step in word:
        new = len(vecs)
        if step == "L":
            vecs[-1][new] = -1
            vecs.insert(0, {t: 1, new: -1})
        else:
            vecs[0][new] = -1
            vecs.append({t: 1, new: -1})
        t = new
    tree = chain([-a for a in cf])
    n = len(tree)
    return {v: tuple(vec.get(i, 0) for i in range(n)) for v, vec in zip(tree.ids, vecs)}


def abc_embedding(trace: BlowupTrace) -> Embedding:
    tree, cur, vecs = _replay(trace)
    for i, c in BASES[trace.base]["correction"].items():
        vecs[cur][i] = vecs[cur].get(i, 0) + c
    n = len(tree)
    return {v: tuple(vecs[v].get(i, 0) for i in range(n)) for v in tree.ids}


def appendix_embedding(label: FamilyLabel) -> Embedding:
    """Closed-form embedding of a family member into n<-1>."""
    if any(x > PARAM_GUARD for x in label.params):
        raise FamilyError(f"parameters above guard {PARAM_GUARD}: {label}")
    if label.trace is not None:
        return abc_embedding(label.trace)
    if label.family == "G":
        return gpq_embedding(*label.params)
    tree = generate(label)
    build = {"W": _w_vectors, "N": _n_vectors, "M": _m_vectors}[label.family]
    return _materialize(tree, build(*label.params))


# ---- recognition -----------------------------------------------------------------

def _recognize_gpq(tree: PlumbingTree) -> list[FamilyLabel]:
    if not tree.is_chain():
        return []
    ws = [-tree.weight(v) for v in tree.chain_order()]
    out = set()
    for seq in (ws, ws[::-1]):
        hit = is_gpq_value(eval_cf(seq))
        if hit:
            out.add(G(*hit))
    return sorted(out)


def _valency_profile(tree):
    return sorted(len(a) for a in tree.adjacency)


def _recognize_star_families(tree: PlumbingTree) -> list[FamilyLabel]:
    n = len(tree)
    if n < 4 or sum(1 for a in tree.adjacency if len(a) >= 3) != 1:
        return []
    if max(len(a) for a in tree.adjacency) != 3:
        return []
    center_w = next(w for w, a in zip(tree.weights, tree.adjacency) if len(a) == 3)
    gens = {-4: ("W", generate_w), -3: ("N", generate_n), -2: ("M", generate_m)}
    if center_w not in gens:
        return []
    fam, gen = gens[center_w]
    target = canonical_form(tree)
    out = []
    k = n - 4
    for p in range(k + 1):
        for q in range(k - p + 1):
            r = k - p - q
            if fam == "M" and p == 0 and r == 0:
                continue
            if canonical_form(gen(p, q, r)) == target:
                out.append(FamilyLabel(fam, (p, q, r)))
    return out


def _recognize_abc(tree: PlumbingTree, base: str) -> FamilyLabel | None:
    data = BASES[base]
    goal = base_graph(base)
    n0 = len(goal)
    if len(tree) < n0:
        return None
    for x in tree.ids:
        if tree.weight(x) != data["final"]:
            continue
        start = tree.with_weights({x: -1})
        # BFS over (tree, current) with reversed move list
        queue = deque([(start, x, ())])
        seen = set()
        while queue:
            t, cur, rev = queue.popleft()
            key = canonical_form(t, [1 if v == cur else 0 for v in t.ids])
            if key in seen:
                continue
            seen.add(key)
            if len(t) == n0:
                iso = rooted_isomorphism(t, cur, goal, 0)
                if iso is not None:
                    return _rebuild_trace(base, tree, iso, rev[::-1])
                continue
            nbrs = t.neighbors(cur)
            if len(nbrs) == 1:
                (y,) = nbrs
                if t.weight(y) == -2:
                    queue.append((blow_down(t, cur), y, rev + (("vertex", cur),)))
            elif len(nbrs) == 2:
                y, z = nbrs
                if t.weight(y) >= -1 or t.weight(z) >= -1:
                    continue
                down = blow_down(t, cur)
                for a, b in ((y, z), (z, y)):
                    if t.weight(a) == -2:
                        queue.append((down, a, rev + (("edge", b, cur),)))
    return None


def _rebuild_trace(base, tree, iso, moves) -> FamilyLabel:
    """Translate moves on ``tree``'s ids into generator ids.

    ``iso`` maps the reduced tree's ids to base ids; each forward move
    recreates one original vertex, recorded as the move's last field.
    """
    ids = dict(iso)
    out = []
    nxt = len(iso)
    for move in moves:
        if move[0] == "vertex":
            out.append(("vertex",))
            created = move[1]
        else:
            out.append(("edge", ids[move[1]]))
            created = move[2]
        ids[created] = nxt
        nxt += 1
    label = ABC(base, out)
    assert canonical_form(generate_abc(label.trace)) == canonical_form(tree)
    return label


def recognize(tree: PlumbingTree) -> list[FamilyLabel]:
    """All family labels whose generator reproduces ``tree`` up to isomorphism."""
    labels = _recognize_gpq(tree) + _recognize_star_families(tree)
    for base in "ABC":
        hit = _recognize_abc(tree, base)
        if hit is not None:
            labels.append(hit)
    return labels


# ---- classification --------------------------------------------------------------

@dataclass
class ClassificationReport:
    in_S: bool
    labels: list
    embedding: Embedding | None
    profile: list | None = None
    case: Case | None = None
    full: bool | None = None
    full_vectors: set | None = None
    violation: bool = False
    notes: list = field(default_factory=list)

    def label_strings(self) -> list[str]:
        return [str(x) for x in self.labels]


def check_input(tree: PlumbingTree) -> None:
    if not is_minimal(tree):
        raise GraphError("graph is not minimal (has a -1 vertex)")
    if not is_negative_definite(tree):
        raise GraphError("graph is not negative definite")


def classify(tree: PlumbingTree, budget: int | None = None) -> ClassificationReport:
    check_input(tree)
    emb = find_embedding(tree, budget)
    labels = recognize(tree)
    rep = ClassificationReport(in_S=emb is not None, labels=labels, embedding=emb)
    if emb is not None:
        rep.profile = index_profile(emb)
        rep.case = case_of(rep.profile)
        rep.full = is_full(tree, emb)
        rep.full_vectors = full_vectors(emb)
    rep.violation = rep.in_S != bool(labels)
    if rep.violation:
        rep.notes.append("THEOREM-VIOLATION: embedding verdict and family labels disagree")
    stars = [x for x in labels if x.family in "WNM"]
    if len(stars) > 1:
        rep.notes.append("equivalent parameters: " + ", ".join(map(str, stars)))
    return rep


def all_family_members(bound: int = 3, gp_bound: int = 13, trace_len: int = 3):
    """Labels of every family member within the given parameter bounds."""
    out = []
    for p in range(2, gp_bound + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                out.append(G(p, q))
    rng = range(bound + 1)
    for p in rng:
        for q in rng:
            for r in rng:
                out.append(W(p, q, r))
                out.append(N(p, q, r))
                if (p, r) != (0, 0):
                    out.append(M(p, q, r))
    for base in "ABC":
        out.extend(ABC(base, t.moves) for t in all_traces(base, trace_len))
    return out


def all_traces(base: str, max_len: int) -> list[BlowupTrace]:
    out = []
    frontier = [BlowupTrace(base, ())]
    for _ in range(max_len + 1):
        out.extend(frontier)
        nxt = []
        for trace in frontier:
            tree, cur, _ = _replay(trace)
            nxt.append(BlowupTrace(base, trace.moves + (("vertex",),)))
            for nb in tree.neighbors(cur):
                nxt.append(BlowupTrace(base, trace.moves + (("edge", nb),)))
        frontier = nxt
    return out
