"""graph6 and plain edge-list text formats."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed input text; ``offset`` is the 0-based byte offset of the fault."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n < 1 << 36:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise FormatError(f"graph too large for graph6: n={n}")


def write_graph6(g: Graph) -> str:
    """graph6 encoding of ``g`` (no header, no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = _encode_n(g.n)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val)
    return "".join(chr(c + 63) for c in out)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line. A leading ``>>graph6<<`` header is tolerated."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    start = 0
    if text.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    line = text.rstrip("\r\n")
    data = []
    for pos in range(start, len(line)):
        c = ord(line[pos])
        if not 63 <= c <= 126:
            raise FormatError(f"byte {line[pos]!r} outside graph6 range 63..126", pos)
        data.append(c - 63)
    if not data:
        raise FormatError("empty graph6 string", start)

    if data[0] < 63:
        n, k = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise FormatError("truncated 8-byte length header", start + len(data))
        n, k = 0, 8
        for d in data[2:8]:
            n = (n << 6) | d
    else:
        if len(data) < 4:
            raise FormatError("truncated 4-byte length header", start + len(data))
        n, k = 0, 4
        for d in data[1:4]:
            n = (n << 6) | d
        if n < 63:
            raise FormatError(f"non-canonical length header for n={n}", start)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[k:]
    if len(body) < need:
        raise FormatError(f"expected {need} data bytes for n={n}, found {len(body)}", start + len(data))
    if len(body) > need:
        raise FormatError("trailing bytes after graph6 data", start + k + need)
    if nbits % 6 and body and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("nonzero padding bits", start + k + need - 1)

    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` with 0-based ids."""
    tokens = text.split()
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"non-integer token in edge list: {exc}") from None
    if len(nums) < 2:
        raise FormatError("edge list needs a 'n m' header")
    n, m = nums[0], nums[1]
    rest = nums[2:]
    if len(rest) != 2 * m:
        raise FormatError(f"header declares {m} edges, found {len(rest) / 2:g}")
    return Graph.from_edges(n, zip(rest[0::2], rest[1::2]))


def read_graph(text: str) -> Graph:
    """Auto-detect graph6 versus edge-list input."""
    stripped = text.strip()
    first = stripped.split("\n", 1)[0].strip()
    if first and not first[0].isdigit():
        return parse_graph6(first)
    return parse_edge_list(stripped)
