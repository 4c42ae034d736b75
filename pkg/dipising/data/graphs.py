"""
Edge-list graph files: first line is the vertex count n, every following line holds one edge "a b"
with 0-based vertices. Blank lines and text after '#' are ignored.
"""

from pathlib import Path

from dipising.cluster.graphstate import QubitGraph
from dipising.errors import GraphParseError


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def parse_edge_list(text: str) -> QubitGraph:
    lines = _content_lines(text)
    if not lines:
        raise GraphParseError("graph file is empty")
    header_number, header = lines[0]
    try:
        n = int(header)
    except ValueError as e:
        raise GraphParseError(f"line {header_number}: expected the vertex count, got {header!r}") from e
    if n < 1:
        raise GraphParseError(f"line {header_number}: vertex count must be positive, got {n}")

    edges = []
    for number, line in lines[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise GraphParseError(f"line {number}: expected 'a b', got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError as e:
            raise GraphParseError(f"line {number}: vertices must be integers, got {line!r}") from e
        if a == b:
            raise GraphParseError(f"line {number}: self-loop on vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(f"line {number}: edge ({a}, {b}) outside vertices 0..{n - 1}")
        edges.append((a, b))
    return QubitGraph(n, frozenset(edges))


def load_graph(path: str | Path) -> QubitGraph:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise GraphParseError(f"cannot read graph file {path}: {e}") from e
    return parse_edge_list(text)
