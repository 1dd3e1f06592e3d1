"""Canonical double covers, expected automorphisms, and the stability
decision with its trivial/non-trivial classification.

The cover of a graph on n vertices lives on 2n points: base vertex x gives
the fiber {x, x + n}, with x in layer 0 and x + n in layer 1. A graph is
stable exactly when |Aut(BX)| = 2 |Aut(X)|: the expected subgroup (lifts of
base automorphisms together with the layer swap) always has order exactly
2 |Aut(X)|, so order equality means every cover automorphism is expected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph_core import Graph, is_connected, is_bipartite, has_twins, bits
from .perms import Permutation, PermGroup, group_from_generators
from .aut import OrderedPartition, automorphism_group

REASON_DISCONNECTED = "disconnected"
REASON_BIPARTITE = "bipartite_with_nontrivial_aut"
REASON_TWINS = "has_twins"


@dataclass(frozen=True)
class DoubleCover:
    """A graph together with its canonical double cover."""

    base: Graph
    cover: Graph

    def fiber(self, x: int) -> tuple[int, int]:
        return (x, x + self.base.n)

    def base_vertex(self, cover_vertex: int) -> int:
        return cover_vertex % self.base.n


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of the stability decision for one graph."""

    n: int
    aut_x_order: int
    aut_bx_order: int
    stable: bool
    instability_index: int
    classification: str  # "stable" | "trivially_unstable" | "nontrivially_unstable"
    reasons: tuple[str, ...]

    def as_dict(self) -> dict:
        """JSON-friendly form; group orders as decimal strings."""
        return {
            "n": self.n,
            "aut_x_order": str(self.aut_x_order),
            "aut_bx_order": str(self.aut_bx_order),
            "stable": self.stable,
            "index": str(self.instability_index),
            "classification": self.classification,
            "reasons": list(self.reasons),
        }


def double_cover(g: Graph) -> DoubleCover:
    """The direct product of g with a single edge."""
    n = g.n
    rows = [0] * (2 * n)
    for x in range(n):
        rows[x] = g.adj[x] << n
        rows[x + n] = g.adj[x]
    return DoubleCover(base=g, cover=Graph.from_rows(rows))


def is_base_automorphism(g: Graph, phi: Permutation) -> bool:
    if phi.degree != g.n:
        return False
    img = phi.images
    for v in range(g.n):
        acc = 0
        for u in bits(g.adj[v]):
            acc |= 1 << img[u]
        if acc != g.adj[img[v]]:
            return False
    return True


def lift(d: DoubleCover, phi: Permutation) -> Permutation:
    """Lift a base automorphism to the cover, acting layer-wise."""
    if not is_base_automorphism(d.base, phi):
        raise ValueError("phi is not an automorphism of the base graph")
    n = d.base.n
    return Permutation(tuple(phi.images) + tuple(x + n for x in phi.images))


def tau(d: DoubleCover) -> Permutation:
    """The layer swap (x, i) -> (x, i+1)."""
    n = d.base.n
    return Permutation(tuple(range(n, 2 * n)) + tuple(range(n)))


def expected_subgroup(d: DoubleCover) -> PermGroup:
    """Subgroup of Aut(BX) generated by the layer swap and all lifts.

    Its order is always exactly 2 |Aut(X)|: lifting is faithful and
    layer-preserving while the swap exchanges layers.
    """
    if d.base.n == 0:
        raise ValueError("expected subgroup is undefined for the empty graph")
    aut_x = automorphism_group(d.base)
    gens = [tau(d)]
    gens.extend(lift(d, phi) for phi in aut_x.generators)
    grp = group_from_generators(gens, 2 * d.base.n)
    assert grp.order() == 2 * aut_x.order()
    return grp


def is_cover_automorphism(d: DoubleCover, alpha: Permutation) -> bool:
    return is_base_automorphism(d.cover, alpha)


def is_fiber_preserving(d: DoubleCover, alpha: Permutation) -> bool:
    """Does alpha map every fiber {x, x+n} onto some fiber {y, y+n}?"""
    n = d.base.n
    img = alpha.images
    for x in range(n):
        a, b = img[x], img[x + n]
        if a % n != b % n or a == b:
            return False
    return True


def is_expected(d: DoubleCover, alpha: Permutation) -> bool:
    """Is alpha generated by lifts and the layer swap?

    For a connected non-bipartite base this is equivalent to alpha mapping
    fibers to fibers, which is how it is decided; otherwise it falls back
    to membership in the expected subgroup.
    """
    if not is_cover_automorphism(d, alpha):
        raise ValueError("alpha is not an automorphism of the cover")
    if is_connected(d.base) and not is_bipartite(d.base):
        return is_fiber_preserving(d, alpha)
    return expected_subgroup(d).contains(alpha)


def _layer_partition(n: int) -> OrderedPartition:
    return OrderedPartition.from_cells(
        [list(range(n)), list(range(n, 2 * n))], 2 * n)


def cover_aut_order_and_group(
        d: DoubleCover,
        use_layer_partition: bool = False) -> tuple[int, Optional[PermGroup]]:
    """|Aut(BX)|, plus the group itself when computed directly.

    With ``use_layer_partition`` (valid only for a connected non-bipartite
    base, where the layers are the bipartition classes of the connected
    cover) only layer-preserving automorphisms are searched and the order
    is doubled to account for the layer swap; the full group object is not
    materialized in that mode.
    """
    if use_layer_partition:
        if not (is_connected(d.base) and not is_bipartite(d.base)):
            raise ValueError(
                "layer-partition shortcut requires a connected non-bipartite base")
        fixed = automorphism_group(d.cover, _layer_partition(d.base.n))
        return 2 * fixed.order(), None
    grp = automorphism_group(d.cover)
    return grp.order(), grp


def stability_report(g: Graph, use_layer_partition: bool = False) -> StabilityReport:
    """Decide stability of g by comparing |Aut(BX)| with 2 |Aut(X)|.

    Trivially unstable reasons are all reported even when several apply;
    the report always carries exact orders, also for bipartite or
    disconnected inputs.
    """
    if g.n == 0:
        raise ValueError("stability is undefined for the empty graph")
    cached = g._cache.get("stability")
    if cached is not None and not use_layer_partition:
        return cached
    d = double_cover(g)
    aut_x = automorphism_group(g).order()
    aut_bx, _ = cover_aut_order_and_group(
        d, use_layer_partition=use_layer_partition and
        is_connected(g) and not is_bipartite(g))
    expected = 2 * aut_x
    if aut_bx % expected:
        raise AssertionError(
            f"2|Aut(X)| = {expected} does not divide |Aut(BX)| = {aut_bx}")
    index = aut_bx // expected
    stable = index == 1
    reasons = []
    if stable:
        classification = "stable"
    else:
        connected = is_connected(g)
        bipartite = is_bipartite(g)
        twins = has_twins(g)
        if not connected:
            reasons.append(REASON_DISCONNECTED)
        if bipartite and aut_x > 1:
            reasons.append(REASON_BIPARTITE)
        if twins:
            reasons.append(REASON_TWINS)
        if connected and not bipartite and not twins:
            classification = "nontrivially_unstable"
        else:
            classification = "trivially_unstable"
            assert reasons, "unstable graph escaping both classifications"
    report = StabilityReport(
        n=g.n,
        aut_x_order=aut_x,
        aut_bx_order=aut_bx,
        stable=stable,
        instability_index=index,
        classification=classification,
        reasons=tuple(reasons))
    if not use_layer_partition:
        g._cache["stability"] = report
    return report
