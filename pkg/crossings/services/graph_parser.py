"""Edge-list parsing: text, files and networkx graphs into Graph values."""

import logging
import re
import sys
from pathlib import Path
from typing import Iterable, Union

import networkx as nx

from crossings.errors import ParseError
from crossings.models import Graph

logger = logging.getLogger(__name__)

HEADER_RE = re.compile(r"^n\s*=\s*(\d+)$")


def parse_edge_list(text: Union[str, Iterable[str]]) -> Graph:
    """
    Parse an edge list into a Graph.

    Format:
      # comment
      n=<int>        optional, declares the total vertex count (extra vertices are isolated)
      <a> <b>        one edge per line, whitespace separated vertex names

    Vertices are indexed by first appearance. Self-loops and duplicate edges
    (in either orientation) are rejected.
    """
    lines = text.splitlines() if isinstance(text, str) else text

    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    declared_n = None
    header_line = None

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        header = HEADER_RE.match(line)
        if header:
            if declared_n is not None:
                raise ParseError("second 'n=' header", line_no)
            declared_n = int(header.group(1))
            header_line = line_no
            continue

        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, found {len(tokens)}", line_no)
        a, b = tokens
        if a == b:
            raise ParseError(f"self-loop on vertex {a!r}", line_no)

        u = index.setdefault(a, len(index))
        v = index.setdefault(b, len(index))
        edge = (u, v) if u < v else (v, u)
        if edge in seen:
            raise ParseError(f"duplicate edge {a} {b}", line_no)
        seen.add(edge)
        edges.append(edge)

    n = len(index)
    if declared_n is not None:
        if declared_n < n:
            raise ParseError(f"header declares n={declared_n} but {n} vertices are named", header_line)
        n = declared_n

    logger.debug("Parsed edge list: %d vertices, %d edges", n, len(edges))
    return Graph(n=n, edges=tuple(edges), labels=tuple(index))


def read_source(path: Union[str, Path]) -> bytes:
    """Raw bytes of an edge-list file; '-' reads standard input."""
    if str(path) == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def parse_bytes(data: bytes) -> Graph:
    try:
        text = data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8 ({exc.reason})") from exc
    return parse_edge_list(text)


def parse_file(path: Union[str, Path]) -> Graph:
    """Parse an edge-list file (UTF-8, LF or CRLF)."""
    return parse_bytes(read_source(path))


def graph_from_networkx(nx_graph: nx.Graph) -> Graph:
    """Relabel a networkx graph densely in node-iteration order."""
    if nx_graph.is_directed() or nx_graph.is_multigraph():
        raise ValueError("Only simple undirected graphs are supported")
    index = {node: i for i, node in enumerate(nx_graph.nodes())}
    edges = []
    for a, b in nx_graph.edges():
        u, v = index[a], index[b]
        if u == v:
            raise ValueError(f"Self-loop on node {a!r}")
        edges.append((u, v) if u < v else (v, u))
    return Graph(n=len(index), edges=tuple(edges), labels=tuple(str(node) for node in index))


def format_edge_list(g: Graph) -> str:
    """Render a Graph in the edge-list format accepted by parse_edge_list."""
    named = set()
    for u, v in g.edges:
        named.update((u, v))
    out = []
    # vertices that never appear in an edge are only recoverable through the header
    if len(named) < g.n:
        out.append(f"n={g.n}")
    for u, v in g.edges:
        out.append(f"{g.label(u)} {g.label(v)}")
    return "\n".join(out) + "\n"
