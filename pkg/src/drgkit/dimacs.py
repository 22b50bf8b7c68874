"""DIMACS edge format: ``c`` comments, one ``p edge <v> <e>`` header, ``e <u> <w>`` lines (1-based)."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph


class DimacsError(ValueError):
    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def dumps(g: Graph, comments: list[str] | None = None) -> str:
    lines = [f"c {c}" for c in comments or []]
    edges = g.edges()
    lines.append(f"p edge {g.v} {len(edges)}")
    lines.extend(f"e {u + 1} {w + 1}" for u, w in edges)
    return "\n".join(lines) + "\n"


def loads(text: str, name: str = "") -> Graph:
    v = None
    declared = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "p":
            if v is not None:
                raise DimacsError(line_no, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsError(line_no, "expected 'p edge <v> <e>'")
            try:
                v, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(line_no, "non-integer vertex or edge count") from None
            if v < 1 or declared < 0:
                raise DimacsError(line_no, "counts out of range")
        elif parts[0] == "e":
            if v is None:
                raise DimacsError(line_no, "edge before problem line")
            if len(parts) != 3:
                raise DimacsError(line_no, "expected 'e <u> <w>'")
            try:
                a, b = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(line_no, "non-integer vertex index") from None
            if not (1 <= a <= v and 1 <= b <= v):
                raise DimacsError(line_no, f"vertex index out of range 1..{v}")
            if a == b:
                raise DimacsError(line_no, f"loop at vertex {a}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise DimacsError(line_no, f"duplicate edge {key[0]} {key[1]}")
            seen.add(key)
            edges.append((a - 1, b - 1))
        else:
            raise DimacsError(line_no, f"unknown line type {parts[0]!r}")
    if v is None:
        raise DimacsError(0, "missing problem line")
    if len(edges) != declared:
        raise DimacsError(0, f"header declares {declared} edges, found {len(edges)}")
    return Graph.from_edges(v, edges, name=name)


def read(path: str | Path) -> Graph:
    p = Path(path)
    return loads(p.read_text(encoding="utf-8"), name=p.stem)


def write(g: Graph, path: str | Path, comments: list[str] | None = None) -> None:
    Path(path).write_text(dumps(g, comments), encoding="utf-8")
