"""Text and JSON graph formats.

Text::

    # comment
    v <id> <weight>
    e <id> <id>

JSON: ``{"vertices": [{"id": .., "weight": ..}], "edges": [[a, b], ...]}``.
Ids are kept as strings.
"""

from __future__ import annotations

import json

from .graph import PlumbingTree
from .lattice import format_vector


class ParseError(ValueError):
    pass


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: weight {token!r} is not an integer") from None


def parse_text(text: str) -> PlumbingTree:
    vertices, edges = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 3:
            vertices.append((parts[1], _int(parts[2], lineno)))
        elif parts[0] == "e" and len(parts) == 3:
            edges.append((parts[1], parts[2]))
        else:
            raise ParseError(f"line {lineno}: cannot parse {raw.strip()!r}")
    if not vertices:
        raise ParseError("no vertices")
    return PlumbingTree(vertices, edges)


def parse_json(text: str) -> PlumbingTree:
    try:
        data = json.loads(text)
        vertices = [(str(v["id"]), v["weight"]) for v in data["vertices"]]
        edges = [(str(a), str(b)) for a, b in data.get("edges", [])]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON graph: {exc}") from None
    for v, w in vertices:
        if not isinstance(w, int) or isinstance(w, bool):
            raise ParseError(f"weight of {v!r} is not an integer")
        if not v or any(c.isspace() for c in v):
            raise ParseError(f"bad vertex id {v!r}")
    return PlumbingTree(vertices, edges)


def parse_graph(text: str) -> PlumbingTree:
    """Detects the format from the first non-blank character."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def to_text(tree: PlumbingTree, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"v {v} {w}" for v, w in tree.vertices]
    lines += [f"e {a} {b}" for a, b in tree.edges]
    return "\n".join(lines) + "\n"


def to_json(tree: PlumbingTree) -> dict:
    return {
        "vertices": [{"id": str(v), "weight": w} for v, w in tree.vertices],
        "edges": [[str(a), str(b)] for a, b in tree.edges],
    }


def embedding_lines(tree: PlumbingTree, emb) -> list[str]:
    return [f"{v}: {format_vector(emb[v])}" for v in tree.ids]


def embedding_json(tree: PlumbingTree, emb) -> dict:
    return {str(v): list(emb[v]) for v in tree.ids}
