"""Plumbing trees, diagonal lattice embeddings and the families they fall into."""
