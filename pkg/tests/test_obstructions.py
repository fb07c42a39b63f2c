import random
from fractions import Fraction

import pytest

from conftest import random_tree
from plumbtree import catalog
from plumbtree.enumeration import enumerate_trees
from plumbtree.families import all_family_members, generate, generate_gpq, generate_w
from plumbtree.graph import chain, is_negative_definite
from plumbtree.obstructions import (
    ObstructionError,
    canonical_class,
    discriminant,
    fundamental_cycle,
    has_isotropic_subgroup,
    is_rational,
    mu_invariant,
    obstruction_report,
    wu_vector,
)


def test_canonical_class_examples():
    cd = canonical_class(chain([-4]))
    assert cd.K == (Fraction(-1, 2),) and cd.K_squared == -1
    assert canonical_class(chain([-2, -2])).K_squared == 0
    assert canonical_class(generate_w(0, 0, 0)).K_squared == -4


def test_fundamental_cycle_examples():
    assert fundamental_cycle(chain([-2, -2])) == (1, 1)
    assert is_rational(chain([-2, -2]))
    assert fundamental_cycle(chain([-4])) == (1,)
    assert is_rational(chain([-4]))
    assert not is_rational(catalog.minimally_elliptic())


def test_fundamental_cycle_order_independent():
    rng = random.Random(2)
    for _ in range(100):
        t = random_tree(rng, rng.randint(1, 7), -4, -2)
        if not is_negative_definite(t):
            continue
        base = fundamental_cycle(t)
        order = list(range(len(t)))
        for _ in range(3):
            rng.shuffle(order)
            assert fundamental_cycle(t, order) == base


def test_valency_bound_implies_rational():
    for n in range(1, 6):
        for t in enumerate_trees(n, -4):
            if all(len(a) <= -w for a, w in zip(t.adjacency, t.weights)):
                assert is_rational(t)


def test_discriminant_w():
    assert discriminant(generate_w(0, 0, 0)).order == 81
    for p in range(3):
        for q in range(3):
            for r in range(3):
                n = (p + 2) * (q + 2) * (r + 2) + 1
                assert discriminant(generate_w(p, q, r)).order == n * n


def test_discriminant_small():
    d = discriminant(chain([-2, -2]))
    assert d.order == 3 and not d.is_square and d.factors == [3]


def test_quadratic_refines_linking_form():
    # q(x + y) - q(x) - q(y) == b(x, y) on every pair
    d = discriminant(generate_w(0, 1, 0))
    els = list(d.elements())[:40]
    for x in els:
        for y in els:
            assert (d.q(d.add(x, y)) - d.q(x) - d.q(y) - d.b(x, y)) % 1 == 0


def test_isotropic_examples():
    assert has_isotropic_subgroup(generate_w(0, 0, 0)) == "yes"
    assert has_isotropic_subgroup(chain([-2, -2])).startswith("skipped")
    assert has_isotropic_subgroup(chain([-4])) == "yes"
    assert has_isotropic_subgroup(generate_w(0, 0, 0), budget=10).startswith("skipped")


def test_mu_examples():
    assert mu_invariant(catalog.mu_counterexample()) == 8
    assert mu_invariant(chain([-3])) == 2
    with pytest.raises(ObstructionError):
        mu_invariant(chain([-4]))


def test_wu_vector_solves_system():
    rng = random.Random(9)
    from plumbtree.graph import gram_matrix, determinant
    for _ in range(100):
        t = random_tree(rng, rng.randint(1, 7), -6, -2)
        if not is_negative_definite(t) or determinant(gram_matrix(t)) % 2 == 0:
            continue
        g = gram_matrix(t)
        w = wu_vector(t)
        for i in range(len(t)):
            assert (sum(g[i][j] * w[j] for j in range(len(t))) - g[i][i]) % 2 == 0


def test_reports_on_family_members():
    for label in all_family_members(bound=2, gp_bound=7, trace_len=0):
        if label.family not in "GWNM":
            continue
        rep = obstruction_report(generate(label))
        assert rep.is_rational and rep.k_squared_plus_n == 0 and rep.det_is_square, label
        assert rep.isotropic == "yes" and rep.in_S, label


def test_report_flags_known_examples():
    rep = obstruction_report(catalog.mu_counterexample())
    assert rep.mu == 8 and rep.in_S and not rep.passes
    rep = obstruction_report(catalog.minimally_elliptic())
    assert not rep.is_rational and rep.in_S and "not rational" in rep.failures
