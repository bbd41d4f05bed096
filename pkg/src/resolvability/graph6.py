"""graph6 encoding and decoding (short form, n <= 62).

The format packs the upper triangle of the adjacency matrix in column
order (pairs (0,1), (0,2), (1,2), (0,3), ...) into 6-bit groups, each
offset by 63 into the printable ASCII range. Unused trailing bits must
be zero. Long form (header byte '~', n >= 63) is not supported.
"""

from .graph import Graph, GraphError

MAX_N = 62
_HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    """Malformed or unsupported graph6 input."""


def parse_graph6(text):
    """Decode one graph6 line into a Graph."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    if any(b < 63 or b > 126 for b in data):
        raise Graph6Error(f"graph6 string {s!r} has bytes outside 63..126")
    if data[0] == 126:
        raise Graph6Error("long-form graph6 (n >= 63) is not supported")
    n = data[0] - 63
    if n < 1:
        raise Graph6Error(f"graph6 vertex count {n} is below 1")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"graph6 string declares n={n} ({nbytes} adjacency bytes) "
            f"but carries {len(body)}"
        )
    bits = 0
    for b in body:
        bits = bits << 6 | (b - 63)
    pad = nbytes * 6 - npairs
    if bits & ((1 << pad) - 1):
        raise Graph6Error("graph6 string has nonzero padding bits")
    bits >>= pad
    adj = [0] * n
    # bits now holds the npairs adjacency bits, first pair at the top
    k = npairs
    for v in range(1, n):
        for u in range(v):
            k -= 1
            if bits >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


def write_graph6(g):
    """Encode a Graph as a canonical short-form graph6 string."""
    n = g.n
    if n > MAX_N:
        raise Graph6Error(f"graph6 short form supports n <= {MAX_N}, got {n}")
    npairs = n * (n - 1) // 2
    bits = 0
    for v in range(1, n):
        for u in range(v):
            bits = bits << 1 | (g.adj[u] >> v & 1)
    nbytes = (npairs + 5) // 6
    bits <<= nbytes * 6 - npairs
    out = [chr(n + 63)]
    for i in range(nbytes - 1, -1, -1):
        out.append(chr((bits >> (6 * i) & 63) + 63))
    return "".join(out)


def iter_graph6(lines):
    """Yield Graphs from an iterable of graph6 lines, skipping blanks."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


def read_graph6_file(path):
    """Yield Graphs from a file with one graph6 string per line."""
    with open(path, "r", encoding="ascii") as fh:
        yield from iter_graph6(fh)
