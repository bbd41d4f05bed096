"""Distance-derived vertex sets and resolver families.

For each edge uv the strict sets W(u,v) = {w : d(u,w) < d(v,w)} and
their complements Wbar(u,v) = {w : d(u,w) >= d(v,w)} drive the two
hitting-set invariants. Pair families hold, for every unordered pair of
items (vertices, edges, or both), the set of vertices that resolve the
pair; minimum hitting sets of those families are the metric, edge
metric and mixed metric dimensions.

All set-building functions are pure functions of immutable inputs.
"""

from dataclasses import dataclass
from itertools import combinations

from .graph import GraphError, bits_list


@dataclass(frozen=True)
class SetFamily:
    """Ordered family of vertex subsets (bitmasks) over universe 0..n-1,
    with a provenance label per set."""

    n: int
    sets: tuple
    labels: tuple

    def __len__(self):
        return len(self.sets)

    def to_json_dict(self):
        """Debug serialization: 1-based vertex lists with labels."""
        return {
            "universe": self.n,
            "sets": [
                {"label": lab, "vertices": [v + 1 for v in bits_list(m)]}
                for lab, m in zip(self.labels, self.sets)
            ],
        }


def _require_adjacent(dist, u, v):
    if u == v or dist[u][v] != 1:
        raise GraphError(f"vertices v_{u + 1} and v_{v + 1} are not adjacent")


def w_sets(dist, u, v):
    """The five per-edge sets (W_uv, W_vu, Wbar_uv, Wbar_vu, uWv) as
    bitmasks, where uWv is the set of vertices equidistant from u and v.

    Requires uv to be an edge; d(u,v) = 1 certifies adjacency.
    """
    _require_adjacent(dist, u, v)
    n = len(dist)
    du, dv = dist[u], dist[v]
    w_uv = w_vu = eq = 0
    for w in range(n):
        a, b = du[w], dv[w]
        if a < b:
            w_uv |= 1 << w
        elif b < a:
            w_vu |= 1 << w
        else:
            eq |= 1 << w
    full = (1 << n) - 1
    return w_uv, w_vu, full & ~w_uv, full & ~w_vu, eq


def family_strict(g, dist):
    """Family {W_uv, W_vu} over all edges, canonical edge order, W(u,v)
    before W(v,u). Its minimum hitting set size is mhs_<(G)."""
    sets, labels = [], []
    for u, v in g.edges():
        w_uv, w_vu, _, _, _ = w_sets(dist, u, v)
        sets.append(w_uv)
        labels.append(f"W(v{u + 1},v{v + 1})")
        sets.append(w_vu)
        labels.append(f"W(v{v + 1},v{u + 1})")
    return SetFamily(g.n, tuple(sets), tuple(labels))


def family_weak(g, dist):
    """Family {Wbar_uv, Wbar_vu} over all edges; its minimum hitting set
    size is mhs_<=(G)."""
    sets, labels = [], []
    for u, v in g.edges():
        _, _, wb_uv, wb_vu, _ = w_sets(dist, u, v)
        sets.append(wb_uv)
        labels.append(f"Wbar(v{u + 1},v{v + 1})")
        sets.append(wb_vu)
        labels.append(f"Wbar(v{v + 1},v{u + 1})")
    return SetFamily(g.n, tuple(sets), tuple(labels))


def _vertex_label(v):
    return f"v{v + 1}"


def _edge_label(e):
    return f"e(v{e[0] + 1},v{e[1] + 1})"


def vertex_pair_family(g, dist):
    """One resolver set per unordered pair of distinct vertices:
    {w : d(u,w) != d(v,w)}."""
    n = g.n
    sets, labels = [], []
    for u, v in combinations(range(n), 2):
        du, dv = dist[u], dist[v]
        m = 0
        for w in range(n):
            if du[w] != dv[w]:
                m |= 1 << w
        sets.append(m)
        labels.append(f"pair({_vertex_label(u)},{_vertex_label(v)})")
    return SetFamily(n, tuple(sets), tuple(labels))


def _edge_distance_rows(g, dist):
    """Distance vector d(e, .) for each edge in canonical order, using
    d(e, w) = min(d(u, w), d(v, w))."""
    rows = []
    for u, v in g.edges():
        du, dv = dist[u], dist[v]
        rows.append(tuple(min(du[w], dv[w]) for w in range(g.n)))
    return rows


def edge_pair_family(g, dist):
    """One resolver set per unordered pair of distinct edges."""
    n = g.n
    edges = g.edges()
    rows = _edge_distance_rows(g, dist)
    sets, labels = [], []
    for i, j in combinations(range(len(edges)), 2):
        ri, rj = rows[i], rows[j]
        m = 0
        for w in range(n):
            if ri[w] != rj[w]:
                m |= 1 << w
        sets.append(m)
        labels.append(f"pair({_edge_label(edges[i])},{_edge_label(edges[j])})")
    return SetFamily(n, tuple(sets), tuple(labels))


def mixed_pair_family(g, dist):
    """One resolver set per unordered pair of distinct items, items being
    all vertices followed by all edges in canonical order."""
    n = g.n
    edges = g.edges()
    rows = [dist[v] for v in range(n)] + _edge_distance_rows(g, dist)
    labels_items = [_vertex_label(v) for v in range(n)] + [
        _edge_label(e) for e in edges
    ]
    sets, labels = [], []
    for i, j in combinations(range(len(rows)), 2):
        ri, rj = rows[i], rows[j]
        m = 0
        for w in range(n):
            if ri[w] != rj[w]:
                m |= 1 << w
        sets.append(m)
        labels.append(f"pair({labels_items[i]},{labels_items[j]})")
    return SetFamily(n, tuple(sets), tuple(labels))


def doubly_resolves(dist, x, y, u, v):
    """True iff the witness pair (x, y) doubly resolves (u, v), i.e.
    d(u,x) - d(u,y) != d(v,x) - d(v,y)."""
    return dist[u][x] - dist[u][y] != dist[v][x] - dist[v][y]


def is_doubly_resolving(dist, members):
    """True iff the vertex set doubly resolves every pair of distinct
    vertices. ``members`` is an iterable of vertex indices; sets of
    fewer than two vertices never doubly resolve.

    Equivalent to the two-witness definition: (u, v) is doubly resolved
    by some pair from S iff s -> d(u,s) - d(v,s) is non-constant on S.
    """
    s = tuple(members)
    if len(s) < 2:
        return False
    n = len(dist)
    s0, rest = s[0], s[1:]
    for u in range(n):
        du = dist[u]
        for v in range(u + 1, n):
            dv = dist[v]
            base = du[s0] - dv[s0]
            if all(du[t] - dv[t] == base for t in rest):
                return False
    return True
