import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import trees
from plumbtree.families import generate_w
from plumbtree.graph import (
    GraphError,
    PlumbingTree,
    blow_down,
    blow_up_edge,
    blow_up_vertex,
    canonical_form,
    chain,
    determinant,
    gram_matrix,
    is_isomorphic,
    is_minimal,
    is_negative_definite,
    star,
)


def test_gram_matrix_small():
    assert gram_matrix(chain([-4])) == [[-4]]
    assert gram_matrix(chain([-2, -2])) == [[-2, 1], [1, -2]]


def test_gram_matrix_fig_c(fig_c):
    g = gram_matrix(fig_c)
    assert [g[i][i] for i in range(4)] == [-2, -2, -6, -3]
    assert g[0][1:] == [1, 1, 1]
    assert all(g[i][j] == 0 for i in range(1, 4) for j in range(1, 4) if i != j)


@pytest.mark.parametrize("tree, expected", [
    (chain([-4]), True),
    (chain([-1, -1]), False),
    (chain([-2, -2]), True),
    (star(-1, [[-2], [-2], [-2]]), False),
])
def test_negative_definite(tree, expected):
    assert is_negative_definite(tree) is expected


def test_negative_definite_w_family():
    for p in range(4):
        for q in range(4):
            for r in range(4):
                assert is_negative_definite(generate_w(p, q, r))


def test_minimal(fig_a):
    assert is_minimal(chain([-4]))
    assert is_minimal(fig_a)
    assert not is_minimal(star(-1, [[-3], [-3], [-3]]))


@pytest.mark.parametrize("vertices, edges", [
    ([(0, -2), (0, -3)], []),
    ([(0, -2), (1, -2)], []),
    ([(0, -2), (1, -2), (2, -2)], [(0, 1), (1, 2), (2, 0)]),
    ([(0, -2), (1, -2)], [(0, 1), (1, 0)]),
    ([(0, -2)], [(0, 0)]),
    ([(0, 0)], []),
    ([(0, -2)], [(0, 5)]),
])
def test_invalid_trees(vertices, edges):
    with pytest.raises(GraphError):
        PlumbingTree(vertices, edges)


def test_blow_up_vertex():
    t = blow_up_vertex(chain([-1]), 0)
    assert t.weights == (-2, -1) and t.has_edge(0, 1)
    t = blow_up_vertex(chain([-4]), 0)
    assert t.weights == (-5, -1)


def test_blow_up_vertex_at_center():
    t = blow_up_vertex(star(-1, [[-3], [-3], [-3]]), 0)
    assert t.weight(0) == -2 and t.weight(4) == -1 and t.valency(0) == 4


def test_blow_up_edge():
    t = blow_up_edge(chain([-1, -5]), 0, 1)
    assert [t.weight(v) for v in t.chain_order()] in ([-2, -1, -6], [-6, -1, -2])
    t = blow_up_edge(chain([-2, -2]), 0, 1)
    assert [t.weight(v) for v in t.chain_order()] in ([-3, -1, -3],)
    t = blow_up_edge(star(-1, [[-2], [-6], [-3]]), 0, 2)
    assert t.weight(0) == -2 and t.weight(2) == -7 and t.weight(4) == -1
    assert not t.has_edge(0, 2)


def test_blow_up_edge_requires_edge():
    with pytest.raises(GraphError):
        blow_up_edge(chain([-2, -2, -2]), 0, 2)


def test_blow_down():
    assert blow_down(chain([-2, -1]), 1).weights == (-1,)
    t = blow_down(chain([-2, -1, -5]), 1)
    assert t.weights == (-1, -4) and t.has_edge(0, 2)


def test_blow_down_errors():
    with pytest.raises(GraphError):
        blow_down(star(-1, [[-2], [-2], [-2]]), 0)
    with pytest.raises(GraphError):
        blow_down(chain([-2, -3]), 0)


@given(trees(max_n=6), st.data())
def test_blow_up_then_down_is_identity(tree, data):
    v = data.draw(st.sampled_from(tree.ids))
    up = blow_up_vertex(tree, v)
    new = [x for x in up.ids if x not in tree.ids][0]
    assert blow_down(up, new) == tree


@given(trees(max_n=6), st.data())
def test_edge_blow_up_then_down(tree, data):
    if len(tree) < 2:
        return
    a, b = data.draw(st.sampled_from(tree.edges))
    up = blow_up_edge(tree, a, b)
    new = [x for x in up.ids if x not in tree.ids][0]
    assert canonical_form(blow_down(up, new)) == canonical_form(tree)


def test_blow_up_at_minus_one_keeps_definiteness():
    # every negative-definite tree with a -1 vertex, up to 5 vertices
    from plumbtree.enumeration import tree_shapes
    from itertools import product
    checked = 0
    for n in range(1, 5):
        for edges in tree_shapes(n):
            for ws in product(range(-7, 0), repeat=n):
                if -1 not in ws:
                    continue
                t = PlumbingTree(list(enumerate(ws)), edges)
                if not is_negative_definite(t):
                    continue
                for v in t.ids:
                    if t.weight(v) != -1:
                        continue
                    assert is_negative_definite(blow_up_vertex(t, v))
                    for nb in t.neighbors(v):
                        assert is_negative_definite(blow_up_edge(t, v, nb))
                    checked += 1
    assert checked > 1000


def test_canonical_form_examples(fig_a, fig_b):
    relabeled = fig_a.relabel({0: "c", 1: "x", 2: "y", 3: "z"})
    assert canonical_form(fig_a) == canonical_form(relabeled)
    assert canonical_form(fig_a) != canonical_form(fig_b)
    assert is_isomorphic(chain([-2, -3]), chain([-3, -2]))


@settings(max_examples=200)
@given(trees(max_n=8), st.randoms(use_true_random=False))
def test_canonical_form_relabel_invariant(tree, rnd):
    perm = list(tree.ids)
    rnd.shuffle(perm)
    mapping = dict(zip(tree.ids, perm))
    other = PlumbingTree(sorted(((mapping[v], w) for v, w in tree.vertices), key=lambda x: x[0]),
                         [(mapping[a], mapping[b]) for a, b in tree.edges])
    assert canonical_form(other) == canonical_form(tree)
    assert determinant(gram_matrix(other)) == determinant(gram_matrix(tree))


@settings(max_examples=200)
@given(trees(max_n=6, low=-3, high=-2), trees(max_n=6, low=-3, high=-2))
def test_canonical_form_separates(t1, t2):
    # cross-check against networkx's weighted isomorphism test
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    def nxg(t):
        g = nx.Graph()
        for v, w in t.vertices:
            g.add_node(v, w=w)
        g.add_edges_from(t.edges)
        return g

    same = GraphMatcher(nxg(t1), nxg(t2), node_match=lambda a, b: a["w"] == b["w"]).is_isomorphic()
    assert is_isomorphic(t1, t2) == same


def test_gram_symmetric():
    rng = random.Random(3)
    from conftest import random_tree
    for _ in range(50):
        g = gram_matrix(random_tree(rng, rng.randint(1, 8)))
        assert all(g[i][j] == g[j][i] for i in range(len(g)) for j in range(len(g)))
