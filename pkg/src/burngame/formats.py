"""graph6 and plain edge-list encodings."""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, GraphError, make_graph

HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    bitlist = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bitlist.append(row >> i & 1)
    bitlist.extend([0] * (-len(bitlist) % 6))
    body = []
    for k in range(0, len(bitlist), 6):
        value = 0
        for b in bitlist[k:k + 6]:
            value = (value << 1) | b
        body.append(chr(value + 63))
    return _size_prefix(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise FormatError("empty graph6 string")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"illegal graph6 character {ch!r}")
    if text[0] == "~":
        if len(text) < 4 or text[1] == "~":
            raise FormatError("malformed graph6 length field")
        n = 0
        for ch in text[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise FormatError("non-canonical graph6 length field")
        rest = text[4:]
    else:
        n = ord(text[0]) - 63
        rest = text[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise FormatError(f"graph6 vertex count {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(rest)} characters, expected {(nbits + 5) // 6}")
    bitlist = []
    for ch in rest:
        value = ord(ch) - 63
        bitlist.extend((value >> s) & 1 for s in range(5, -1, -1))
    if any(bitlist[nbits:]):
        raise FormatError("graph6 padding bits are not zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitlist[k]:
                edges.append((i, j))
            k += 1
    return make_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """First line ``n m``, then ``m`` lines ``u v`` with 0-based endpoints."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"edge list declares {m} edges but has {len(edges)}")
    try:
        return make_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def read_graph_file(path: str) -> list[Graph]:
    """Load a file as edge list (first line has two integers) or graph6 lines."""
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    first = text.strip().splitlines()[0] if text.strip() else ""
    if len(first.split()) == 2 and all(tok.isdigit() for tok in first.split()):
        return [parse_edge_list(text)]
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            out.append(parse_graph6(line))
        except (FormatError, GraphError) as exc:
            raise FormatError(f"{path}:{lineno}: {exc}") from None
    return out
