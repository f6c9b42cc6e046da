"""Edge-list and DOT formats, and parsing of graph spec strings.

Edge-list format::

    n=3
    0 1
    0 2
    ...

one ``u v`` pair per line with ``u < v``, sorted. Reading an edge list back
reconstructs the construction tree from the dense labelling.
"""

from __future__ import annotations

import re
from pathlib import Path

from .graph import Edge, Graph, HLNetwork, build_crossed_cube_3, build_hypercube, build_random_hl, hl_from_edges

_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)")
_DOT_DIM = re.compile(r'label\s*=\s*"n=(\d+)"')


def to_edge_list(g: HLNetwork) -> str:
    lines = [f"n={g.dimension}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_pairs(text: str) -> list[Edge]:
    """``u v`` pairs from text, ignoring blank lines, ``#`` comments and an ``n=`` header."""
    out = []
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line or line.startswith("n="):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {ln}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        out.append((u, v) if u < v else (v, u))
    return out


def from_edge_list(text: str) -> HLNetwork:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("edge list must start with 'n=<dimension>'")
    n = int(lines[0][2:])
    return hl_from_edges(n, parse_edge_pairs(text))


def to_dot(g: Graph, highlight=(), name: str = "G") -> str:
    """Undirected DOT; edges in ``highlight`` are drawn red and dashed."""
    marked = {(min(e), max(e)) for e in highlight}
    out = [f"graph {name} {{"]
    dim = getattr(g, "dimension", None)
    if dim is not None:
        out.append(f'  label="n={dim}";')
    out.extend(f"  {v};" for v in range(g.num_vertices))
    for u, v in g.edges:
        style = ' [color=red, style=dashed]' if (u, v) in marked else ""
        out.append(f"  {u} -- {v}{style};")
    for u, v in sorted(marked - set(g.edges)):
        # removed faults are still shown so the picture stays complete
        out.append(f"  {u} -- {v} [color=red, style=dashed];")
    out.append("}")
    return "\n".join(out) + "\n"


def from_dot(text: str) -> HLNetwork:
    edges = []
    for line in text.splitlines():
        m = _DOT_EDGE.match(line)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            edges.append((min(u, v), max(u, v)))
    dm = _DOT_DIM.search(text)
    if dm:
        n = int(dm.group(1))
    else:
        top = max((v for e in edges for v in e), default=0)
        n = (top + 1).bit_length() - 1 if top else 0
    return hl_from_edges(n, edges)


def write_graph(g: HLNetwork, path: str | Path) -> None:
    path = Path(path)
    text = to_dot(g) if path.suffix == ".dot" else to_edge_list(g)
    path.write_text(text)


def read_graph(path: str | Path) -> HLNetwork:
    path = Path(path)
    text = path.read_text()
    return from_dot(text) if path.suffix == ".dot" else from_edge_list(text)


def load_graph(spec: str) -> HLNetwork:
    """Build a network from ``qn:<n>``, ``cq3``, ``random:<n>:<seed>`` or a file path."""
    if spec == "cq3":
        return build_crossed_cube_3()
    if spec.startswith("qn:"):
        return build_hypercube(int(spec[3:]))
    if spec.startswith("random:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError("random spec is random:<n>:<seed>")
        return build_random_hl(int(parts[1]), int(parts[2]))
    if Path(spec).exists():
        return read_graph(spec)
    raise ValueError(f"unrecognised graph spec {spec!r}")
