"""graph6 encoding (nauty format).

Bits of the upper triangle are taken column by column, ``(0,1), (0,2), (1,2),
(0,3), ...``, packed big-endian into 6-bit groups and offset by 63.  The order
prefix N(n) is one byte for n <= 62, ``~`` plus three bytes up to 258047, and
``~~`` plus six bytes beyond.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("order too large for graph6")


def graph6_encode(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def _decode_n(data: str) -> tuple[int, int]:
    def val(i: int) -> int:
        if i >= len(data):
            raise Graph6Error("truncated order prefix", i)
        c = ord(data[i])
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {data[i]!r} out of range 63..126", i)
        return c - 63

    if not data:
        raise Graph6Error("empty input", 0)
    if data[0] != "~":
        return val(0), 1
    if len(data) > 1 and data[1] == "~":
        n = 0
        for i in range(2, 8):
            n = (n << 6) | val(i)
        if n <= 258047:
            raise Graph6Error("non-minimal 8-byte order prefix", 0)
        return n, 8
    n = 0
    for i in range(1, 4):
        n = (n << 6) | val(i)
    if n <= 62:
        raise Graph6Error("non-minimal 4-byte order prefix", 0)
    return n, 4


def graph6_decode(text: str) -> Graph:
    data = text.strip("\r\n")
    base = 0
    if data.startswith(HEADER):
        data = data[len(HEADER):]
        base = len(HEADER)
    try:
        n, pos = _decode_n(data)
    except Graph6Error as e:
        raise Graph6Error(str(e).rsplit(" (byte offset", 1)[0], e.offset + base) from None
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        # point at the first surplus byte, or at the end of truncated input
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, found {len(data) - pos}",
                          base + pos + min(nbytes, len(data) - pos))
    rows = [0] * n
    i, j = 0, 1
    for k in range(nbytes):
        c = ord(data[pos + k])
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {data[pos + k]!r} out of range 63..126", base + pos + k)
        c -= 63
        for shift in range(5, -1, -1):
            bit = c >> shift & 1
            if j >= n:
                if bit:
                    raise Graph6Error("nonzero padding bits", base + pos + k)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, tuple(rows))


def write_graph6(graphs: Iterable[Graph]) -> str:
    return "".join(graph6_encode(g) + "\n" for g in graphs)


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line; errors propagate."""
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)
