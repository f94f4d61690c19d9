"""graph6 codec.

One graph per line, printable ASCII per the published format: a length
prefix N(n) followed by the upper adjacency triangle in column order packed
into 6-bit chunks, each offset by 63.  Supports the 1-byte size form
(n <= 62) and the 4-byte form (n <= 258047).  An optional ``>>graph6<<``
header is stripped on parse.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graphs import Graph

__all__ = ["parse_graph6", "write_graph6", "HEADER"]

HEADER = ">>graph6<<"
_MAX_N = 258047


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, bytes consumed) from the N(n) prefix."""
    if not data:
        raise Graph6Error("empty graph6 line")
    c0 = data[0]
    if c0 != 126:
        return c0 - 63, 1
    if len(data) < 4:
        raise Graph6Error("truncated length prefix")
    if data[1] == 126:
        raise Graph6Error(f"vertex counts above {_MAX_N} are not supported")
    n = 0
    for c in data[1:4]:
        if not 63 <= c <= 126:
            raise Graph6Error(f"length prefix byte {c} outside 63..126")
        n = (n << 6) | (c - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line into a Graph.

    Raises Graph6Error for a malformed length prefix, characters outside
    63..126, wrong data length, or nonzero padding bits.
    """
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    data = s.encode("ascii", errors="replace")
    n, used = _decode_size(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(f"expected {expected} data bytes for n={n}, got {len(body)}")
    masks = [0] * n
    bit = 0
    for c in body:
        if not 63 <= c <= 126:
            raise Graph6Error(f"data byte {c} outside 63..126")
        chunk = c - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if (chunk >> k) & 1:
                    raise Graph6Error("nonzero padding bits")
                bit += 1
                continue
            if (chunk >> k) & 1:
                u, v = _bit_to_edge(bit)
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            bit += 1
    return Graph._from_masks(n, masks)


def _bit_to_edge(index: int) -> tuple[int, int]:
    # Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    v = 1
    while v * (v - 1) // 2 <= index:
        v += 1
    v -= 1
    return index - v * (v - 1) // 2, v


def write_graph6(g: Graph) -> str:
    """Canonical graph6 encoding of the labeled graph (no trailing newline)."""
    n = g.n
    if n > _MAX_N:
        raise Graph6Error(f"n={n} exceeds the supported maximum {_MAX_N}")
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    else:
        out.append(126)
        out.extend(63 + ((n >> shift) & 63) for shift in (12, 6, 0))
    chunk = 0
    filled = 0
    masks = g.neighbor_masks
    for v in range(1, n):
        col = masks[v]
        for u in range(v):
            chunk = (chunk << 1) | ((col >> u) & 1)
            filled += 1
            if filled == 6:
                out.append(chunk + 63)
                chunk = 0
                filled = 0
    if filled:
        chunk <<= 6 - filled
        out.append(chunk + 63)
    return out.decode("ascii")
