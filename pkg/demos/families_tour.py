"""
A tour of the families
======================

Build one member of each family, find a lattice embedding for it, and check
that the recognizer names it again.
"""

from plumbtree.families import ABC, G, M, N, W, appendix_embedding, classify, generate
from plumbtree.io import embedding_lines, to_text
from plumbtree.lattice import verify_embedding

labels = [G(7, 3), W(1, 0, 2), N(0, 1, 1), M(1, 0, 1), ABC("A", [("vertex",), ("edge", 0)])]

for label in labels:
    tree = generate(label)
    print(f"--- {label}")
    print(to_text(tree), end="")

    # the explicit embedding and the search should agree on membership
    emb = appendix_embedding(label)
    assert verify_embedding(tree, emb)
    for line in embedding_lines(tree, emb):
        print("   ", line)

    rep = classify(tree)
    print("recognized as", ", ".join(rep.label_strings()), "| case", rep.case.value,
          "| full" if rep.full else "| not full")
    print()

# %%
# The weight sum tells edge-only traces apart from the rest: it sits exactly
# at -3n-1 for the former and strictly above it otherwise.

for label in [ABC("B", [("edge", 1)]), ABC("B", [("vertex",)])]:
    tree = generate(label)
    print(label, sum(tree.weights), -3 * len(tree) - 1)
