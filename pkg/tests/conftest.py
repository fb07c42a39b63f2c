import random
import sys

import pytest
from hypothesis import strategies as st

from plumbtree import catalog
from plumbtree.graph import PlumbingTree


@pytest.fixture
def fig_a():
    return catalog.basic_a()


@pytest.fixture
def fig_b():
    return catalog.basic_b()


@pytest.fixture
def fig_c():
    return catalog.basic_c()


def random_tree(rng: random.Random, n: int, low: int = -8, high: int = -1) -> PlumbingTree:
    """Random labeled tree: attach each new vertex to an earlier one."""
    weights = [rng.randint(low, high) for _ in range(n)]
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return PlumbingTree(list(enumerate(weights)), edges)


@st.composite
def trees(draw, min_n=1, max_n=7, low=-8, high=-1):
    n = draw(st.integers(min_n, max_n))
    weights = draw(st.lists(st.integers(low, high), min_size=n, max_size=n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return PlumbingTree(list(enumerate(weights)), [(p, i) for i, p in enumerate(parents, start=1)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
