"""Exhaustive enumeration and extremal-difference verification.

The builtin enumerator walks every labeled connected simple graph of
order n <= 7 (all edge-subset masks, connectivity-filtered, no
isomorphism rejection). Because all six invariants are functions of the
unlabeled graph, the maximum of a difference over the labeled stream
equals the maximum over isomorphism classes; the sweep exploits the
same fact to cache invariant values under a degree-sorted relabeling
key (equal keys always mean isomorphic graphs, so the cache is sound
even though distinct keys may still be isomorphic).

Orders 8 and 9 are reachable through external graph6 streams, one graph
per line; exhaustiveness of such a stream is the caller's claim, not
ours.
"""

from dataclasses import dataclass, field

from .graph import (
    Graph,
    GraphError,
    _reachable_from_zero,
    is_maximal_neighbour_graph,
    max_degree,
)
from .graph6 import read_graph6_file, write_graph6
from .invariants import TAGS, invariant_values

MAX_BUILTIN_N = 7

# Difference pairs appearing in the verification suite.
THEOREM_PAIRS = (
    ("mhs_weak", "psi"),
    ("psi", "mhs_weak"),
    ("mhs_weak", "mhs_strict"),
    ("mhs_strict", "mhs_weak"),
    ("mhs_strict", "beta_M"),
    ("beta_M", "mhs_strict"),
    ("psi", "beta_E"),
    ("beta_E", "psi"),
)


@dataclass(frozen=True)
class ExtremalReport:
    xi1: str
    xi2: str
    n: int
    max_diff: int
    witness_graph6: str
    graphs_scanned: int


@dataclass
class GraphSource:
    """Where graphs come from: builtin labeled enumeration (n <= 7) or a
    graph6 stream file."""

    kind: str  # "enumeration" | "graph6"
    n: int = None
    path: str = None

    @classmethod
    def enumeration(cls, n):
        if not 2 <= n <= MAX_BUILTIN_N:
            raise GraphError(
                f"builtin enumeration supports 2 <= n <= {MAX_BUILTIN_N}; "
                f"use a graph6 stream for n = {n}"
            )
        return cls("enumeration", n=n)

    @classmethod
    def graph6_file(cls, path, n=None):
        return cls("graph6", n=n, path=path)

    def graphs(self):
        if self.kind == "enumeration":
            yield from enumerate_connected(self.n)
        else:
            yield from read_graph6_file(self.path)


def enumerate_connected(n):
    """Yield every labeled connected simple graph on n vertices exactly
    once, in increasing edge-mask order."""
    if not 2 <= n <= MAX_BUILTIN_N:
        raise GraphError(f"builtin enumeration supports 2 <= n <= {MAX_BUILTIN_N}")
    full = (1 << n) - 1
    for mask in range(1 << (n * (n - 1) // 2)):
        adj = _unpack_adjacency(n, mask)
        if _reachable_from_zero(adj) == full:
            yield Graph(n, adj)


def _unpack_adjacency(n, mask):
    adj = [0] * n
    for j in range(1, n):
        for i in range(j):
            if mask & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            mask >>= 1
    return adj


def _degree_sorted_key(n, adj):
    """Adjacency mask after relabeling vertices by (degree, index).

    Key equality implies isomorphism (both graphs relabel to the same
    labeled graph), which makes it a sound cache key.
    """
    order = sorted(range(n), key=lambda v: (adj[v].bit_count(), v))
    key = 0
    b = 0
    for j in range(1, n):
        aj = adj[order[j]]
        for i in range(j):
            if aj >> order[i] & 1:
                key |= 1 << b
            b += 1
    return key


@dataclass(frozen=True)
class _ClassStats:
    values: dict
    maximal_neighbour: bool
    delta: int
    is_path: bool
    law_violations: tuple


# invariant values per (n, degree-sorted key); shared across sweeps
_CLASS_CACHE = {}


def _law_violations(n, values, maximal_neighbour, delta, is_path):
    """Pointwise statements that must hold on every connected graph:
    the mhs chain, the maximal-neighbour biconditionals, the log bound
    on beta_E and the path characterizations."""
    v = values
    out = []
    if not 2 <= v["mhs_weak"] <= v["mhs_strict"] <= n:
        out.append("mhs chain 2 <= mhs_weak <= mhs_strict <= n violated")
    if n >= 3 and v["mhs_weak"] > n - 1:
        out.append("mhs_weak <= n-1 violated")
    if v["mhs_weak"] > v["psi"]:
        out.append("psi >= mhs_weak violated")
    if v["mhs_strict"] > v["beta_M"]:
        out.append("beta_M >= mhs_strict violated")
    if not ((v["mhs_strict"] == n) == maximal_neighbour == (v["beta_M"] == n)):
        out.append("maximal-neighbour biconditional violated")
    if v["beta_E"] < (delta - 1).bit_length():
        out.append("beta_E >= ceil(log2 max_degree) violated")
    if (v["beta_E"] == 1) != is_path:
        out.append("beta_E = 1 iff path violated")
    if (v["beta_M"] == 2) != is_path:
        out.append("beta_M = 2 iff path violated")
    return tuple(out)


def _class_stats(n, key):
    cached = _CLASS_CACHE.get((n, key))
    if cached is not None:
        return cached
    g = Graph(n, _unpack_adjacency(n, key))
    values = invariant_values(g)
    mn = is_maximal_neighbour_graph(g)
    delta = max_degree(g)
    is_path = delta <= 2 and g.num_edges() == n - 1
    stats = _ClassStats(
        values, mn, delta, is_path, _law_violations(n, values, mn, delta, is_path)
    )
    _CLASS_CACHE[(n, key)] = stats
    return stats


@dataclass
class SweepResult:
    n: int
    graphs_scanned: int
    reports: dict  # (xi1, xi2) -> ExtremalReport
    law_failures: list = field(default_factory=list)  # (index, graph6, message)


def sweep(source, pairs=THEOREM_PAIRS, law_checks=False):
    """One pass over a graph source, reducing the requested extremal
    differences (first maximizer in stream order wins) and optionally
    collecting pointwise law failures.
    """
    for xi1, xi2 in pairs:
        _check_tag(xi1)
        _check_tag(xi2)
    if source.kind == "enumeration":
        return _sweep_enumeration(source.n, tuple(pairs), law_checks)
    return _sweep_stream(source, tuple(pairs), law_checks)


def _check_tag(tag):
    if tag not in TAGS:
        raise ValueError(f"unknown invariant tag {tag!r}; choose from {TAGS}")


def _sweep_enumeration(n, pairs, law_checks):
    full = (1 << n) - 1
    best = {p: None for p in pairs}  # (diff, index, mask)
    failures = []
    reported_bad_keys = set()
    scanned = 0
    stats_of = _class_stats
    key_of = _degree_sorted_key
    for mask in range(1 << (n * (n - 1) // 2)):
        # inline adjacency unpack + connectivity check (hot loop)
        adj = [0] * n
        m = mask
        for j in range(1, n):
            for i in range(j):
                if m & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                m >>= 1
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        if seen != full:
            continue
        index = scanned
        scanned += 1
        key = key_of(n, adj)
        stats = stats_of(n, key)
        values = stats.values
        for p in pairs:
            diff = values[p[0]] - values[p[1]]
            cur = best[p]
            if cur is None or diff > cur[0]:
                best[p] = (diff, index, mask)
        if law_checks and stats.law_violations and key not in reported_bad_keys:
            reported_bad_keys.add(key)
            g6 = write_graph6(Graph(n, adj))
            failures.extend(
                (index, g6, msg) for msg in stats.law_violations
            )
    if scanned == 0:
        raise GraphError("graph source produced no graphs")
    reports = {
        p: ExtremalReport(
            p[0],
            p[1],
            n,
            best[p][0],
            write_graph6(Graph(n, _unpack_adjacency(n, best[p][2]))),
            scanned,
        )
        for p in pairs
    }
    return SweepResult(n, scanned, reports, failures)


def _sweep_stream(source, pairs, law_checks):
    best = {p: None for p in pairs}
    failures = []
    reported_bad_keys = set()
    scanned = 0
    n_seen = None
    for g in source.graphs():
        if n_seen is None:
            n_seen = g.n
        elif g.n != n_seen:
            raise GraphError(
                f"graph6 stream mixes orders {n_seen} and {g.n}"
            )
        index = scanned
        scanned += 1
        key = _degree_sorted_key(g.n, g.adj)
        stats = _class_stats(g.n, key)
        values = stats.values
        for p in pairs:
            diff = values[p[0]] - values[p[1]]
            cur = best[p]
            if cur is None or diff > cur[0]:
                best[p] = (diff, index, write_graph6(g))
        if law_checks and stats.law_violations and key not in reported_bad_keys:
            reported_bad_keys.add(key)
            failures.extend(
                (index, write_graph6(g), msg) for msg in stats.law_violations
            )
    if scanned == 0:
        raise GraphError("graph source produced no graphs")
    reports = {
        p: ExtremalReport(p[0], p[1], n_seen, best[p][0], best[p][2], scanned)
        for p in pairs
    }
    return SweepResult(n_seen, scanned, reports, failures)


def extremal_difference(xi1, xi2, source):
    """Exact maximum of xi1(G) - xi2(G) over the source, with the first
    maximizer in stream order as witness."""
    result = sweep(source, pairs=((xi1, xi2),))
    return result.reports[(xi1, xi2)]
