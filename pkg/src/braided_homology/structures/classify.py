"""Property classification, sideways identities and the associated shelf."""

from dataclasses import asdict, dataclass
from itertools import product
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from ..core.report import IdentityReport
from ..core.tables import is_permutation
from .braided import BraidedSet
from .shelf import Shelf, validate_shelf


@dataclass
class PropertyReport:
    """Result of classify()."""

    left_nondegenerate: bool
    right_nondegenerate: bool
    invertible: bool
    involutive: bool
    weakly_ri_compatible: bool
    ri_compatible: bool
    t_map: Optional[Tuple[int, ...]] = None

    @property
    def nondegenerate(self) -> bool:
        return self.left_nondegenerate and self.right_nondegenerate

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        result = asdict(self)
        result["t_map"] = list(self.t_map) if self.t_map is not None else None
        return result


def _fixed_candidates(B: BraidedSet, a: int) -> List[int]:
    """All c with sigma(c, a) = (c, a)."""
    return [c for c in range(B.size) if B.left[c][a] == c and B.right[c][a] == a]


def _t_search(B: BraidedSet) -> Tuple[Optional[Tuple[int, ...]], bool]:
    """First valid t in index order, and whether some bijective t exists."""
    n = B.size
    candidates = [_fixed_candidates(B, a) for a in range(n)]
    if any(not c for c in candidates):
        return None, False
    t_map = tuple(c[0] for c in candidates)
    if is_permutation(t_map):
        return t_map, True
    graph = nx.Graph()
    sources = [("a", a) for a in range(n)]
    graph.add_nodes_from(sources, bipartite=0)
    graph.add_nodes_from((("t", c) for c in range(n)), bipartite=1)
    graph.add_edges_from((("a", a), ("t", c)) for a in range(n) for c in candidates[a])
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=sources)
    return t_map, all(s in matching for s in sources)


def classify(B: BraidedSet) -> PropertyReport:
    """Exhaustively compute the properties of a braided set.

    For LND braidings t(a) = a·a and weak RI-compatibility is a·a = a⊸a;
    otherwise every element is scanned for values c with sigma(c, a) = (c, a)
    and the first hit in index order is stored.
    """
    n = B.size
    lnd = B.is_left_nondegenerate
    involutive = all(
        B.sigma(*B.sigma(a, b)) == (a, b) for a, b in product(range(n), repeat=2)
    )
    t_map: Optional[Tuple[int, ...]]
    if lnd:
        weak = all(B.dot(a, a) == B.hook(a, a) for a in range(n))
        t_map = tuple(B.dot(a, a) for a in range(n)) if weak else None
        strong = weak and t_map is not None and is_permutation(t_map)
    else:
        t_map, strong = _t_search(B)
        weak = t_map is not None
    return PropertyReport(
        left_nondegenerate=lnd,
        right_nondegenerate=B.is_right_nondegenerate,
        invertible=B.is_invertible,
        involutive=involutive,
        weakly_ri_compatible=weak,
        ri_compatible=strong,
        t_map=t_map,
    )


def associated_shelf(B: BraidedSet) -> Shelf:
    """a◁b = (b·a)^b.

    Raises:
        NotLeftNondegenerate: If B is not LND
    """
    B.require_lnd()
    n = B.size
    op = [[B.right[B.dot(b, a)][b] for b in range(n)] for a in range(n)]
    return validate_shelf(op)


def associated_shelf_report(B: BraidedSet) -> IdentityReport:
    """Check the equivalences linking B to its associated shelf.

    rack <-> invertible, trivial <-> involutive, spindle <-> weakly
    RI-compatible; sideways consistency sigma(b⊸a, b) = (a·b, a) is included.
    """
    report = IdentityReport("associated_shelf")
    S = associated_shelf(B)
    props = classify(B)
    report.record(S.is_rack == props.invertible, property="rack/invertible")
    report.record(S.is_trivial == props.involutive, property="trivial/involutive")
    report.record(
        S.is_spindle == props.weakly_ri_compatible, property="spindle/weakly_ri_compatible"
    )
    for a, b in product(range(B.size), repeat=2):
        report.record(B.sigma(B.hook(b, a), b) == (B.dot(a, b), a), pair=(a, b))
    return report


def check_sideways_identities(B: BraidedSet) -> IdentityReport:
    """The three sideways forms of the YBE for an LND braiding.

    (a⊸b)·(a·c) = (b·a)·(b·c), (a·b)⊸(a⊸c) = (b⊸a)⊸(b⊸c),
    (a⊸b)·(a⊸c) = (b·a)⊸(b·c).
    """
    B.require_lnd()
    dot, hook = B.dot, B.hook
    report = IdentityReport("sideways_identities")
    for a, b, c in product(range(B.size), repeat=3):
        report.record(
            dot(hook(a, b), dot(a, c)) == dot(dot(b, a), dot(b, c)), identity=1, triple=(a, b, c)
        )
        report.record(
            hook(dot(a, b), hook(a, c)) == hook(hook(b, a), hook(b, c)), identity=2, triple=(a, b, c)
        )
        report.record(
            dot(hook(a, b), hook(a, c)) == hook(dot(b, a), dot(b, c)), identity=3, triple=(a, b, c)
        )
    return report
