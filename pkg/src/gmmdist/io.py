"""Text and JSON serialization for graphs and signed graphs.

Text graph format: first line ``n m``, then m lines ``u v``.
Text signed format: first line ``n p q``, then p lines ``+ u v`` and q lines
``- u v``. JSON mirrors carry ``n`` and ``edges`` / ``pos`` / ``neg`` arrays,
plus optional ``colors`` and ``labels``. Writers emit sorted edges so that a
read/write round trip is byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graphs import ColoredGraph, Graph, SignedGraph


class FormatError(ValueError):
    """Raised when an input file does not match the expected format."""


def write_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graph_text(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise FormatError("expected header 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"bad graph line: {exc}") from exc
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, found {len(edges)}")
    return Graph(n, edges=edges)


def write_signed_text(d: SignedGraph) -> str:
    lines = [f"{d.n} {len(d.pos)} {len(d.neg)}"]
    lines += [f"+ {u} {v}" for u, v in sorted(d.pos)]
    lines += [f"- {u} {v}" for u, v in sorted(d.neg)]
    return "\n".join(lines) + "\n"


def read_signed_text(text: str) -> SignedGraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 3:
        raise FormatError("expected header 'n p q'")
    try:
        n, p, q = (int(x) for x in rows[0])
    except ValueError as exc:
        raise FormatError(f"bad header: {exc}") from exc
    body = rows[1:]
    if len(body) != p + q:
        raise FormatError(f"header promises {p + q} edges, found {len(body)}")
    pos, neg = [], []
    for row in body:
        if len(row) != 3 or row[0] not in "+-":
            raise FormatError(f"bad signed edge line: {' '.join(row)}")
        (pos if row[0] == "+" else neg).append((int(row[1]), int(row[2])))
    if len(pos) != p or len(neg) != q:
        raise FormatError("sign counts disagree with header")
    return SignedGraph(n, pos=pos, neg=neg)


def graph_to_dict(g: Graph, colors: tuple[int, ...] | None = None) -> dict:
    d: dict = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if g.labels is not None:
        d["labels"] = list(g.labels)
    if colors is not None:
        d["colors"] = list(colors)
    return d


def graph_from_dict(d: dict) -> Graph:
    try:
        return Graph(int(d["n"]), edges=d.get("edges", []),
                     labels=tuple(d["labels"]) if "labels" in d else None)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from exc


def colored_graph_from_dict(d: dict) -> ColoredGraph:
    if "colors" not in d:
        raise FormatError("colored graph JSON needs a 'colors' array")
    return ColoredGraph(graph_from_dict(d), tuple(int(c) for c in d["colors"]))


def signed_to_dict(d: SignedGraph) -> dict:
    return {"n": d.n,
            "pos": [list(e) for e in sorted(d.pos)],
            "neg": [list(e) for e in sorted(d.neg)]}


def signed_from_dict(d: dict) -> SignedGraph:
    try:
        return SignedGraph(int(d["n"]), pos=d.get("pos", []), neg=d.get("neg", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad signed-graph JSON: {exc}") from exc


def dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_graph(path: str | Path) -> Graph:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        return graph_from_dict(json.loads(text))
    return read_graph_text(text)


def load_colored_graph(path: str | Path) -> ColoredGraph:
    path = Path(path)
    return colored_graph_from_dict(json.loads(path.read_text()))


def load_signed(path: str | Path) -> SignedGraph:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        return signed_from_dict(json.loads(text))
    return read_signed_text(text)


def save_graph(path: str | Path, g: Graph) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(dump_json(graph_to_dict(g)))
    else:
        path.write_text(write_graph_text(g))


def save_signed(path: str | Path, d: SignedGraph) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(dump_json(signed_to_dict(d)))
    else:
        path.write_text(write_signed_text(d))
