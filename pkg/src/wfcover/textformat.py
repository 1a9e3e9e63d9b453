"""Canonical graph text format.

::

    # name: bowtie        (optional)
    n 5
    e 0 1
    e 0 2

One ``n <count>`` header, then ``e <u> <v>`` lines with 0-indexed endpoints.
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Edge, Graph, GraphError


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class GraphDocument:
    name: str
    n: int
    edges: list[Edge] = field(default_factory=list)

    def to_graph(self) -> Graph:
        return Graph(self.n, self.edges, name=self.name or None)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {token!r}") from None


def parse_graph(text: str) -> GraphDocument:
    name = ""
    n: Optional[int] = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith("name:") and not name:
                name = body[5:].strip()
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "n":
            if n is not None:
                raise ParseError(lineno, "duplicate 'n' header")
            if len(tokens) != 2:
                raise ParseError(lineno, "expected 'n <count>'")
            n = _int(tokens[1], lineno)
            if n < 0:
                raise ParseError(lineno, f"vertex count must be non-negative, got {n}")
        elif kind == "e":
            if n is None:
                raise ParseError(lineno, "edge before the 'n' header")
            if len(tokens) != 3:
                raise ParseError(lineno, "expected 'e <u> <v>'")
            u, v = _int(tokens[1], lineno), _int(tokens[2], lineno)
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(lineno, f"endpoint {x} outside [0, {n})")
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            edges.append(Edge.of(u, v))
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
    if n is None:
        raise ParseError(0, "missing 'n <count>' header")
    return GraphDocument(name, n, sorted(set(edges)))


def read_graph(text: str) -> Graph:
    return parse_graph(text).to_graph()


def serialize_graph(G: Graph, name: Optional[str] = None) -> str:
    name = name if name is not None else G.name
    lines = [f"# name: {name}"] if name else []
    lines.append(f"n {G.n}")
    lines.extend(f"e {u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"
