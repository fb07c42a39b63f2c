"""Named graphs that come up repeatedly."""

from .graph import PlumbingTree, star


def basic_a() -> PlumbingTree:
    """Node -4 with three -3 leaves."""
    return star(-4, [[-3], [-3], [-3]])


def basic_b() -> PlumbingTree:
    """Node -3 with leaves -4, -4, -2."""
    return star(-3, [[-4], [-4], [-2]])


def basic_c() -> PlumbingTree:
    """Node -2 with leaves -2, -6, -3."""
    return star(-2, [[-2], [-6], [-3]])


def mu_counterexample() -> PlumbingTree:
    """Chain -7, -2, -2, -3, -2 with a -3 leaf on the -3 vertex (mu = 8)."""
    return PlumbingTree(
        [(0, -7), (1, -2), (2, -2), (3, -3), (4, -2), (5, -3)],
        [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)],
    )


def minimally_elliptic() -> PlumbingTree:
    """Node -2 with leaves -2, -4, -3, -4; in S but not rational."""
    return star(-2, [[-2], [-4], [-3], [-4]])
