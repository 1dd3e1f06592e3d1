"""Hypothesis checkers for the stability criteria, with strongly-regular
and distance-regular parameter extraction.

Every checker reports whether its hypotheses hold ("applies") and what that
implies; none ever claims instability, since the criteria are sufficient
conditions only. ``criteria_summary`` cross-checks any "stable" implication
against the direct order computation and raises ``SoundnessError`` on
disagreement, which always signals an implementation bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph_core import (Graph, bits, bfs_distances, is_connected,
                         is_bipartite, has_twins)
from .cover import stability_report


class SoundnessError(RuntimeError):
    """A criterion implied stability but the direct computation disagreed."""


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular parameters: k-regular, diameter 2, every adjacent
    pair with lambda_ common neighbours, every non-adjacent pair with mu."""

    n: int
    k: int
    lambda_: int
    mu: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lambda_, self.mu)


@dataclass(frozen=True)
class IntersectionArray:
    """Distance-regular parameters {b_0..b_{d-1}; c_1..c_d}."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.c)


@dataclass(frozen=True)
class CriterionVerdict:
    criterion: str
    applies: bool
    failed_hypotheses: tuple[str, ...] = ()
    implied: str = "none"  # "stable" | "none" | "constraint"
    constraint: Optional[str] = None
    detail: Optional[str] = None

    def as_dict(self) -> dict:
        out = {
            "criterion": self.criterion,
            "applies": self.applies,
            "failed_hypotheses": list(self.failed_hypotheses),
            "implied": self.implied,
        }
        if self.constraint is not None:
            out["constraint"] = self.constraint
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def _every_edge_on_triangle(g: Graph) -> bool:
    adj = g.adj
    for u in range(g.n):
        row = adj[u]
        for v in bits(row >> (u + 1)):
            if not row & adj[u + 1 + v]:
                return False
    return True


def _is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for u in range(g.n):
        row = adj[u]
        for v in bits(row >> (u + 1)):
            if row & adj[u + 1 + v]:
                return False
    return True


def srg_params(g: Graph) -> Optional[SrgParams]:
    """Strongly regular parameters, or None if the uniformity fails.

    Requires connected, regular, diameter exactly 2 (so complete graphs
    never qualify); every non-adjacent pair must then be at distance 2,
    making mu positive automatically.
    """
    n = g.n
    if n < 3 or not is_connected(g):
        return None
    adj = g.adj
    k = adj[0].bit_count()
    if any(row.bit_count() != k for row in adj):
        return None
    lam = mu = -1
    diam = 1
    for u in range(n):
        for v in range(u + 1, n):
            common = (adj[u] & adj[v]).bit_count()
            if (adj[u] >> v) & 1:
                if lam < 0:
                    lam = common
                elif lam != common:
                    return None
            else:
                diam = 2
                if common == 0:
                    return None  # distance > 2
                if mu < 0:
                    mu = common
                elif mu != common:
                    return None
    if diam != 2 or mu <= 0:
        return None
    return SrgParams(n=n, k=k, lambda_=lam, mu=mu)


def intersection_array(g: Graph) -> Optional[IntersectionArray]:
    """Distance-regular parameters by exhaustive per-pair counting."""
    n = g.n
    if n == 0 or not is_connected(g):
        return None
    adj = g.adj
    k = adj[0].bit_count()
    if any(row.bit_count() != k for row in adj):
        return None
    dist = [bfs_distances(g, x) for x in range(n)]
    d = max(max(row) for row in dist)
    if d == 0:
        return None
    b = [-1] * d     # b_0 .. b_{d-1}
    c = [-1] * (d + 1)  # c_1 .. c_d, stored at 1..d
    b.append(0)      # sentinel b_d = 0
    for x in range(n):
        dx = dist[x]
        for y in range(n):
            j = dx[y]
            if j == 0:
                continue
            higher = lower = 0
            for z in bits(adj[y]):
                if dx[z] == j + 1:
                    higher += 1
                elif dx[z] == j - 1:
                    lower += 1
            if j < d:
                if b[j] < 0:
                    b[j] = higher
                elif b[j] != higher:
                    return None
            elif higher:
                return None
            if c[j] < 0:
                c[j] = lower
            elif c[j] != lower:
                return None
    b[0] = k
    return IntersectionArray(b=tuple(b[:d]), c=tuple(c[1:]))


# ---------------------------------------------------------------------------
# criteria for graphs whose every edge lies on a triangle

def check_triangle_distance_growth(g: Graph) -> CriterionVerdict:
    """Stability from triangles plus outward distance growth: every edge on
    a triangle, and from every vertex the second shell is non-empty, every
    distance-2 vertex has a neighbour at distance 3, and every distance-3
    vertex has a neighbour at distance 4.

    Complete graphs have an empty second shell and deliberately do not
    qualify; their stability is covered by the complete-graph fact.
    """
    crit = "triangle-distance-growth"
    failed = []
    if g.n < 2:
        failed.append("graph is trivial")
    if not is_connected(g):
        failed.append("not connected")
    if failed:
        return CriterionVerdict(crit, False, tuple(failed))
    if not _every_edge_on_triangle(g):
        failed.append("an edge lies on no triangle")
    for x in range(g.n):
        dist = bfs_distances(g, x)
        shell2 = [v for v, dv in enumerate(dist) if dv == 2]
        if not shell2:
            failed.append(f"second shell of vertex {x} is empty")
            break
        adj = g.adj
        ok2 = all(any(dist[u] == 3 for u in bits(adj[v])) for v in shell2)
        if not ok2:
            failed.append(
                f"a distance-2 vertex from {x} has no neighbour at distance 3")
            break
        shell3 = [v for v, dv in enumerate(dist) if dv == 3]
        ok3 = all(any(dist[u] == 4 for u in bits(adj[v])) for v in shell3)
        if not ok3:
            failed.append(
                f"a distance-3 vertex from {x} has no neighbour at distance 4")
            break
    if failed:
        return CriterionVerdict(crit, False, tuple(failed))
    return CriterionVerdict(crit, True, (), "stable")


def check_distance_regular(g: Graph) -> tuple[CriterionVerdict, Optional[IntersectionArray]]:
    """Distance-regular specialization: d >= 4, b0 > b1 + 1, b2, b3 >= 1."""
    crit = "distance-regular-growth"
    arr = intersection_array(g)
    if arr is None:
        return (CriterionVerdict(crit, False, ("not distance-regular",)), None)
    failed = []
    if arr.d < 4:
        failed.append(f"diameter {arr.d} < 4")
    if arr.d >= 2 and arr.b[0] <= arr.b[1] + 1:
        failed.append("b0 <= b1 + 1 (some edge lies on no triangle)")
    if arr.d >= 3 and arr.b[2] < 1:
        failed.append("b2 = 0")
    if arr.d >= 4 and arr.b[3] < 1:
        failed.append("b3 = 0")
    if failed:
        return (CriterionVerdict(crit, False, tuple(failed)), arr)
    return (CriterionVerdict(crit, True, (), "stable"), arr)


def check_common_neighbor_separation(g: Graph) -> CriterionVerdict:
    """Stability from separated common-neighbour counts: twin-free, every
    edge on a triangle, and no adjacent pair shares its common-neighbour
    count with any distance-2 pair."""
    crit = "common-neighbor-separation"
    failed = []
    if g.n < 2:
        failed.append("graph is trivial")
    if not is_connected(g):
        failed.append("not connected")
    if failed:
        return CriterionVerdict(crit, False, tuple(failed))
    if has_twins(g):
        failed.append("has twins")
    if not _every_edge_on_triangle(g):
        failed.append("an edge lies on no triangle")
    if failed:
        return CriterionVerdict(crit, False, tuple(failed))
    adj = g.adj
    adjacent_counts = set()
    distance2_counts = set()
    for u in range(g.n):
        du = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if du[v] == 1:
                adjacent_counts.add((adj[u] & adj[v]).bit_count())
            elif du[v] == 2:
                distance2_counts.add((adj[u] & adj[v]).bit_count())
    overlap = adjacent_counts & distance2_counts
    if overlap:
        return CriterionVerdict(
            crit, False,
            (f"count {min(overlap)} occurs both for adjacent and distance-2 pairs",))
    return CriterionVerdict(crit, True, (), "stable",
                            detail=f"adjacent counts {sorted(adjacent_counts)}, "
                                   f"distance-2 counts {sorted(distance2_counts)}")


def check_srg_distinct_counts(g: Graph) -> CriterionVerdict:
    """Strongly regular case: k > mu, mu != lambda, lambda >= 1.

    A strongly regular graph meeting this automatically meets the
    common-neighbour separation criterion; that implication is asserted."""
    crit = "srg-distinct-counts"
    p = srg_params(g)
    if p is None:
        return CriterionVerdict(crit, False, ("not strongly regular",))
    failed = []
    if not p.k > p.mu:
        failed.append(f"k = {p.k} <= mu = {p.mu} (has twins)")
    if p.mu == p.lambda_:
        failed.append(f"mu = lambda = {p.mu}")
    if p.lambda_ < 1:
        failed.append("lambda = 0 (triangle-free)")
    if failed:
        return CriterionVerdict(crit, False, tuple(failed))
    assert check_common_neighbor_separation(g).applies, \
        "srg-distinct-counts must be a special case of common-neighbor-separation"
    return CriterionVerdict(crit, True, (), "stable",
                            detail=f"srg{p.as_tuple()}")


# ---------------------------------------------------------------------------
# triangle-free criteria

def check_triangle_free_diam2(g: Graph) -> CriterionVerdict:
    """No non-trivially unstable triangle-free graph of diameter 2 exists:
    connected, non-bipartite, twin-free, triangle-free, diameter 2 imply
    stability."""
    crit = "triangle-free-diameter-2"
    failed = []
    if g.n < 2:
        failed.append("graph is trivial")
    if not is_connected(g):
        failed.append("not connected")
    else:
        if is_bipartite(g):
            failed.append("bipartite")
        ecc = max(max(bfs_distances(g, x)) for x in range(g.n))
        if ecc != 2:
            failed.append(f"diameter {ecc} != 2")
    if has_twins(g):
        failed.append("has twins")
    if not _is_triangle_free(g):
        failed.append("contains a triangle")
    if failed:
        return CriterionVerdict(crit, False, tuple(failed))
    return CriterionVerdict(crit, True, (), "stable")


def second_shell_split(g: Graph, x: int) -> tuple[frozenset, frozenset]:
    """Split the distance-2 shell of x into the vertices having a neighbour
    inside the shell and the rest.

    For connected non-bipartite triangle-free graphs of diameter 2 the
    first part is never empty (otherwise the shell plus neighbourhood
    structure would 2-color the graph); the suite asserts this.
    """
    dist = bfs_distances(g, x)
    shell = [v for v, d in enumerate(dist) if d == 2]
    shell_bits = 0
    for v in shell:
        shell_bits |= 1 << v
    inner = frozenset(v for v in shell if g.adj[v] & shell_bits)
    return inner, frozenset(shell) - inner


def check_srg_triangle_free(g: Graph) -> CriterionVerdict:
    """Strongly regular, k > mu and lambda = 0 imply stability."""
    crit = "srg-triangle-free"
    p = srg_params(g)
    if p is None:
        return CriterionVerdict(crit, False, ("not strongly regular",))
    failed = []
    if not p.k > p.mu:
        failed.append(f"k = {p.k} <= mu = {p.mu} (has twins)")
    if p.lambda_ != 0:
        failed.append(f"lambda = {p.lambda_} != 0")
    if failed:
        return CriterionVerdict(crit, False, tuple(failed))
    return CriterionVerdict(crit, True, (), "stable",
                            detail=f"srg{p.as_tuple()}")


def check_srg_instability_constraint(g: Graph) -> CriterionVerdict:
    """Necessary condition on strongly regular graphs: a non-trivially
    unstable one must have lambda = mu > 0. Reports a constraint, never a
    stability verdict."""
    crit = "srg-equal-counts-necessary"
    p = srg_params(g)
    if p is None:
        return CriterionVerdict(crit, False, ("not strongly regular",))
    return CriterionVerdict(
        crit, True, (), "constraint",
        constraint="nontrivially unstable => lambda = mu > 0",
        detail=f"srg{p.as_tuple()}")


ALL_CHECKERS = (
    check_triangle_distance_growth,
    lambda g: check_distance_regular(g)[0],
    check_common_neighbor_separation,
    check_srg_distinct_counts,
    check_triangle_free_diam2,
    check_srg_triangle_free,
    check_srg_instability_constraint,
)


def criteria_summary(g: Graph, cross_check: bool = True) -> list[CriterionVerdict]:
    """Run every checker; optionally verify any implied stability against
    the direct decision, raising SoundnessError on disagreement."""
    verdicts = [check(g) for check in ALL_CHECKERS]
    if cross_check and any(v.applies and v.implied == "stable" for v in verdicts):
        report = stability_report(g)
        if not report.stable:
            culprits = [v.criterion for v in verdicts
                        if v.applies and v.implied == "stable"]
            raise SoundnessError(
                f"criteria {culprits} imply stability but "
                f"|Aut(BX)| = {report.aut_bx_order} != "
                f"2|Aut(X)| = {2 * report.aut_x_order}")
    return verdicts
