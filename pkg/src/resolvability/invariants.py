"""The six resolvability invariants with certifying witnesses.

mhs_strict and mhs_weak are minimum hitting sets of the strict/weak
W-set families. beta, beta_E and beta_M are minimum hitting sets of the
vertex-, edge- and mixed-pair resolver families. psi (the doubly metric
dimension) is not a hitting-set instance (its condition needs two
cooperating witnesses), so it gets a dedicated search over candidate
cardinalities, lower-bounded by max(2, mhs_weak) which is exact on many
families and always sound.

Every returned witness is re-validated by the defining predicate before
it leaves this module.
"""

from dataclasses import dataclass
from itertools import combinations
from math import ceil, log2

from . import families as fam
from .graph import GraphError, all_pairs_distances, bits_list, max_degree
from .hitting import min_hitting_exact, min_hitting_size, verify_hitting

TAGS = ("beta", "beta_E", "beta_M", "psi", "mhs_strict", "mhs_weak")


@dataclass(frozen=True)
class InvariantResult:
    tag: str
    value: int
    witness: tuple  # sorted 0-based vertex indices

    def witness_labels(self):
        return [v + 1 for v in self.witness]


def _distances(g):
    if g.n < 2:
        raise GraphError("invariants are defined for graphs with n >= 2")
    return all_pairs_distances(g)


def _solve_family(g, family, tag):
    for m, label in zip(family.sets, family.labels):
        if m == 0:
            raise GraphError(f"{tag}: no vertex resolves {label}")
    sol = min_hitting_exact(g.n, family.sets)
    if not verify_hitting(family.sets, sol.mask):  # pragma: no cover
        raise RuntimeError(f"{tag}: solver returned a non-hitting witness")
    return InvariantResult(tag, sol.size, bits_list(sol.mask))


def mhs_strict(g, dist=None):
    """Minimum hitting set of {W_uv, W_vu | uv edge} (mhs_<)."""
    dist = dist if dist is not None else _distances(g)
    return _solve_family(g, fam.family_strict(g, dist), "mhs_strict")


def mhs_weak(g, dist=None):
    """Minimum hitting set of {Wbar_uv, Wbar_vu | uv edge} (mhs_<=)."""
    dist = dist if dist is not None else _distances(g)
    return _solve_family(g, fam.family_weak(g, dist), "mhs_weak")


def metric_dimension(g, dist=None):
    """beta(G): minimum resolving set size."""
    dist = dist if dist is not None else _distances(g)
    return _solve_family(g, fam.vertex_pair_family(g, dist), "beta")


def edge_metric_dimension(g, dist=None):
    """beta_E(G): minimum edge resolving set size."""
    dist = dist if dist is not None else _distances(g)
    family = fam.edge_pair_family(g, dist)
    if not family.sets:
        # single-edge graph (P_2): no edge pairs to resolve, but the
        # known closed form beta_E(P_n) = 1 covers n = 2, so the empty
        # set is not reported; {v_1} resolves vacuously
        return InvariantResult("beta_E", 1, (0,))
    return _solve_family(g, family, "beta_E")


def mixed_metric_dimension(g, dist=None):
    """beta_M(G): minimum mixed resolving set size."""
    dist = dist if dist is not None else _distances(g)
    return _solve_family(g, fam.mixed_pair_family(g, dist), "beta_M")


def _pair_class_masks(dist):
    """For each vertex pair (u, v), the partition of V by the value of
    d(u,s) - d(v,s), kept only for classes of size >= 2 (a candidate set
    S fails the pair exactly when S lies inside one class)."""
    n = len(dist)
    per_pair = []
    for u in range(n):
        du = dist[u]
        for v in range(u + 1, n):
            dv = dist[v]
            classes = {}
            for s in range(n):
                key = du[s] - dv[s]
                classes[key] = classes.get(key, 0) | 1 << s
            big = tuple(m for m in classes.values() if m.bit_count() >= 2)
            if big:
                per_pair.append(big)
    return per_pair


def _psi_search(g, dist, lower):
    n = g.n
    per_pair = _pair_class_masks(dist)
    for k in range(max(2, lower), n + 1):
        for combo in combinations(range(n), k):
            mask = 0
            for s in combo:
                mask |= 1 << s
            if all(
                all(mask & ~c for c in classes) for classes in per_pair
            ):
                return k, combo
    raise RuntimeError("no doubly resolving set found; graph invalid")


def doubly_metric_dimension(g, dist=None):
    """psi(G): minimum doubly resolving set size.

    Candidate cardinalities run from max(2, mhs_weak(G)) upward; within
    one cardinality, subsets are tried in lexicographic order and the
    first doubly resolving one is the witness.
    """
    dist = dist if dist is not None else _distances(g)
    lower = min_hitting_size(g.n, fam.family_weak(g, dist).sets)
    k, combo = _psi_search(g, dist, lower)
    if not fam.is_doubly_resolving(dist, combo):  # pragma: no cover
        raise RuntimeError("psi: search returned a non-doubly-resolving witness")
    return InvariantResult("psi", k, tuple(combo))


def edge_dim_log_bound_check(g, dist=None):
    """Sanity invariant: beta_E(G) >= ceil(log2(max degree))."""
    dist = dist if dist is not None else _distances(g)
    value = edge_metric_dimension(g, dist).value
    delta = max_degree(g)
    return value >= ceil(log2(delta))


def all_invariants(g):
    """All six invariants with witnesses, computed from one distance
    matrix. Returns a dict keyed by tag."""
    dist = _distances(g)
    return {
        "beta": metric_dimension(g, dist),
        "beta_E": edge_metric_dimension(g, dist),
        "beta_M": mixed_metric_dimension(g, dist),
        "psi": doubly_metric_dimension(g, dist),
        "mhs_strict": mhs_strict(g, dist),
        "mhs_weak": mhs_weak(g, dist),
    }


def invariant_values(g, dist=None):
    """Values of all six invariants without witnesses (fast path for
    exhaustive sweeps). Returns a dict tag -> int."""
    dist = dist if dist is not None else _distances(g)
    n = g.n
    weak = min_hitting_size(n, fam.family_weak(g, dist).sets)
    psi, _ = _psi_search(g, dist, weak)
    edge_sets = fam.edge_pair_family(g, dist).sets
    return {
        "beta": min_hitting_size(n, fam.vertex_pair_family(g, dist).sets),
        "beta_E": min_hitting_size(n, edge_sets) if edge_sets else 1,
        "beta_M": min_hitting_size(n, fam.mixed_pair_family(g, dist).sets),
        "psi": psi,
        "mhs_strict": min_hitting_size(n, fam.family_strict(g, dist).sets),
        "mhs_weak": weak,
    }


def result_record(g, graph6_string, results):
    """JSON-ready record for one graph: values plus 1-based witnesses."""
    record = {"graph6": graph6_string, "n": g.n, "m": g.num_edges()}
    for tag in TAGS:
        record[tag] = results[tag].value
    record["witnesses"] = {
        tag: results[tag].witness_labels() for tag in TAGS
    }
    return record
