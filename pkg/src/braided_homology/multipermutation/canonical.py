"""Canonical labelings and isomorphism tests for cycle sets."""

from itertools import permutations
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from ..core.errors import TooLarge
from ..core.tables import Table, cycle_type, inverse_permutation, relabel
from ..structures.cycle_set import CycleSet, validate_cycle_set
from ..utils.config import setting

Flat = Tuple[int, ...]


def _relabeled_if_smaller(dot: Table, perm: Sequence[int], best: Optional[Flat]) -> Optional[Flat]:
    """Row-major flattening of the relabeled table, or None once it exceeds best."""
    n = len(dot)
    inv = inverse_permutation(perm)
    out: List[int] = []
    smaller = best is None
    for i in range(n):
        row = dot[inv[i]]
        for j in range(n):
            v = perm[row[inv[j]]]
            if not smaller:
                b = best[len(out)]  # type: ignore[index]
                if v > b:
                    return None
                if v < b:
                    smaller = True
            out.append(v)
    return tuple(out) if smaller else None


def canonical_table(dot: Table, max_size: Optional[int] = None) -> Table:
    """Lexicographically least relabeling of dot over all n! bijections.

    Raises:
        TooLarge: Above the canonical size guard
    """
    n = len(dot)
    limit = setting(max_size, "canonical.max_size")
    if n > limit:
        raise TooLarge(f"canonical form needs n <= {limit}, got {n}", witness={"size": n, "max_size": limit})
    best: Optional[Flat] = None
    for perm in permutations(range(n)):
        candidate = _relabeled_if_smaller(dot, perm, best)
        if candidate is not None:
            best = candidate
    assert best is not None
    return tuple(best[i * n : (i + 1) * n] for i in range(n))


def canonical_form(C: CycleSet, max_size: Optional[int] = None) -> CycleSet:
    return validate_cycle_set(canonical_table(C.dot, max_size))


def automorphism_count(C: CycleSet) -> int:
    """Number of bijections π with relabel(C, π) = C, by brute force."""
    return sum(1 for perm in permutations(range(C.size)) if relabel(C.dot, perm) == C.dot)


def _row_invariant(C: CycleSet, a: int) -> Tuple[Tuple[int, ...], bool]:
    return cycle_type(C.dot[a]), C.dot[a][a] == a


def _operation_graph(C: CycleSet) -> nx.DiGraph:
    """Elements plus one node per pair (a, b), wired a -> (a,b), b -> (a,b), (a,b) -> a·b."""
    graph = nx.DiGraph()
    for a in range(C.size):
        graph.add_node(("e", a), kind="element", invariant=_row_invariant(C, a))
    for a in range(C.size):
        for b in range(C.size):
            pair = ("p", a, b)
            graph.add_node(pair, kind="pair", invariant=None)
            graph.add_edge(("e", a), pair, role="left")
            if a == b:
                graph.edges[("e", a), pair]["role"] = "both"
            else:
                graph.add_edge(("e", b), pair, role="right")
            graph.add_edge(pair, ("e", C.dot[a][b]), role="out")
    return graph


def are_isomorphic(C: CycleSet, D: CycleSet) -> bool:
    """Isomorphism test that also works above the canonical size guard.

    Small inputs compare canonical forms; larger ones run a labeled
    graph isomorphism with row cycle types as node invariants.
    """
    if C.size != D.size:
        return False
    if sorted(_row_invariant(C, a) for a in range(C.size)) != sorted(_row_invariant(D, a) for a in range(D.size)):
        return False
    if C.size <= setting(None, "canonical.max_size"):
        return canonical_table(C.dot) == canonical_table(D.dot)
    return nx.is_isomorphic(
        _operation_graph(C),
        _operation_graph(D),
        node_match=lambda u, v: u["kind"] == v["kind"] and u["invariant"] == v["invariant"],
        edge_match=lambda u, v: u["role"] == v["role"],
    )
