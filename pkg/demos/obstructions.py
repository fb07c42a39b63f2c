"""
Necessary conditions for a rational homology disk smoothing
===========================================================

Run the obstruction checks on a family member and on two graphs where one of
the conditions fails.
"""

from plumbtree import catalog
from plumbtree.families import W, generate
from plumbtree.obstructions import discriminant, obstruction_report

graphs = {
    "W(0,0,0)": generate(W(0, 0, 0)),
    "mu counterexample": catalog.mu_counterexample(),
    "minimally elliptic": catalog.minimally_elliptic(),
}

for name, tree in graphs.items():
    rep = obstruction_report(tree)
    print(f"--- {name}")
    print("  rational     ", rep.is_rational)
    print("  n + K^2      ", rep.k_squared_plus_n)
    print("  |D|          ", rep.det, rep.invariant_factors)
    print("  isotropic    ", rep.isotropic)
    print("  mu           ", rep.mu if rep.mu is not None else rep.mu_note)
    print("  embeds       ", rep.in_S)
    print("  failures     ", rep.failures or "none")

# %%
# For the W family the discriminant group has order N^2 with
# N = (p+2)(q+2)(r+2) + 1.

for p, q, r in [(0, 0, 0), (1, 0, 0), (1, 1, 2)]:
    n = (p + 2) * (q + 2) * (r + 2) + 1
    d = discriminant(generate(W(p, q, r)))
    print(f"W({p},{q},{r}): |D| = {d.order} = {n}^2, factors {d.factors}")
