"""Isomorph-free enumeration of small graphs and the per-order census of
connected non-bipartite twin-free / non-trivially unstable / four-vertex-
extension-realizable graphs.

Generation uses canonical augmentation: children of a parent on m-1
vertices are built by attaching vertex m-1 to one representative subset per
automorphism orbit, and a child is accepted exactly when the new vertex
lies in the automorphism orbit of the canonical deletion vertex. The
labeled-enumeration + canonical-dedup path exists as the slow reference
oracle for cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .graph_core import (Graph, GraphParseError, parse_graph6, write_graph6,
                         bits, is_connected, is_bipartite, has_twins)
from .aut import canonical_form
from .cover import stability_report

BUILTIN_MAX_ORDER = 8

# Graphs per order, OEIS-known, used as a generation self-check.
KNOWN_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


@dataclass(frozen=True)
class CensusRow:
    """One order's counts: connected non-bipartite twin-free graphs, the
    non-trivially unstable ones among them, and those realizable by the
    four-vertex extension."""

    n: int
    count_cnbtf: int
    count_ntu: int
    count_xab: int

    def as_csv(self) -> str:
        return f"{self.n},{self.count_cnbtf},{self.count_ntu},{self.count_xab}"


@dataclass(frozen=True)
class XabWitness:
    """A labeled occurrence of the four-vertex extension inside a graph."""

    a1: int
    a2: int
    b1: int
    b2: int
    A: frozenset
    B: frozenset


def _orbit_of_vertex(gens, v: int) -> set:
    orb = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g[x]
                if y not in orb:
                    orb.add(y)
                    nxt.append(y)
        frontier = nxt
    return orb


def _subset_orbit_reps(m: int, gens) -> list[int]:
    """Orbit representatives (as bitmasks, smallest in orbit) of the action
    of the generated group on subsets of {0..m-1}."""
    total = 1 << m
    if not gens:
        return list(range(total))
    seen = bytearray(total)
    reps = []
    for mask in range(total):
        if seen[mask]:
            continue
        reps.append(mask)
        stack = [mask]
        seen[mask] = 1
        while stack:
            cur = stack.pop()
            for g in gens:
                img = 0
                rem = cur
                while rem:
                    low = rem & -rem
                    img |= 1 << g[low.bit_length() - 1]
                    rem ^= low
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
    return reps


def _augment(parent: Graph) -> Iterator[Graph]:
    """Children of parent accepted by the canonical-deletion test."""
    m = parent.n
    cf = canonical_form(parent)
    gens = [p.images for p in cf.aut_generators]
    for mask in _subset_orbit_reps(m, gens):
        rows = list(parent.adj) + [mask]
        for v in bits(mask):
            rows[v] |= 1 << m
        child = Graph.from_rows(rows)
        ccf = canonical_form(child)
        # canonical deletion vertex: preimage of the last canonical position
        kappa = ccf.relabeling.images.index(m)
        cgens = [p.images for p in ccf.aut_generators]
        if kappa == m or m in _orbit_of_vertex(cgens, kappa):
            yield child


def enumerate_graphs(n: int, max_builtin: int = BUILTIN_MAX_ORDER) -> Iterator[Graph]:
    """All graphs of order n, one representative per isomorphism class.

    The built-in generator covers n <= 8; beyond that, feed a graph6 stream
    (e.g. from an external generator) through stream_graph6 instead.
    """
    if n < 1:
        raise ValueError("enumerate_graphs requires n >= 1")
    if n > max_builtin:
        raise ValueError(
            f"built-in generation supports n <= {max_builtin}; "
            "use a graph6 stream input for larger orders")
    level = [Graph(1)]
    for _ in range(n - 1):
        nxt = []
        for parent in level:
            nxt.extend(_augment(parent))
        level = nxt
    yield from level


def enumerate_graphs_naive(n: int) -> list[Graph]:
    """Reference path: all labeled graphs deduplicated by canonical form.

    Exponential in n**2; usable to n = 6 as the cross-validation oracle.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    seen = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in bits(mask)]
        g = Graph(n, edges)
        key = canonical_form(g).canonical_graph6
        if key not in seen:
            seen[key] = g
    return list(seen.values())


def stream_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a graph6 line stream, skipping blanks; errors carry the line
    number."""
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            yield parse_graph6(stripped)
        except GraphParseError as exc:
            raise GraphParseError(
                f"line {lineno}: {exc.args[0]}") from exc


def is_xab_realizable(g: Graph) -> Optional[XabWitness]:
    """Find a labeled occurrence of the four-vertex extension: distinct
    vertices a1,a2,b1,b2 whose only internal edges are a1-b1 and a2-b2,
    with N(a1)-b1 = N(a2)-b2 and N(b1)-a1 = N(b2)-a2 outside the four.

    Returns a witness or None. No extra conditions are imposed on the
    stripped graph; the census applies this to non-trivially unstable
    inputs only.
    """
    adj = g.adj
    edges = list(g.edges())
    for i, e1 in enumerate(edges):
        for e2 in edges[i + 1:]:
            if set(e1) & set(e2):
                continue
            for a1, b1 in (e1, e1[::-1]):
                for a2, b2 in (e2, e2[::-1]):
                    four = (1 << a1) | (1 << a2) | (1 << b1) | (1 << b2)
                    if (adj[a1] & four != 1 << b1 or
                            adj[a2] & four != 1 << b2 or
                            adj[b1] & four != 1 << a1 or
                            adj[b2] & four != 1 << a2):
                        continue
                    rest = ~four
                    if adj[a1] & rest != adj[a2] & rest:
                        continue
                    if adj[b1] & rest != adj[b2] & rest:
                        continue
                    return XabWitness(
                        a1=a1, a2=a2, b1=b1, b2=b2,
                        A=frozenset(bits(adj[a1] & rest)),
                        B=frozenset(bits(adj[b1] & rest)))
    return None


def classify_graph(g: Graph) -> tuple[bool, bool, bool]:
    """(is cnbtf, is non-trivially unstable, is xab-realizable) flags."""
    if not (is_connected(g) and not is_bipartite(g) and not has_twins(g)):
        return (False, False, False)
    report = stability_report(g)
    if report.stable:
        return (True, False, False)
    assert report.classification == "nontrivially_unstable"
    return (True, True, is_xab_realizable(g) is not None)


def _classify_g6(line: str) -> tuple[bool, bool, bool, str]:
    g = parse_graph6(line)
    return classify_graph(g) + (line,)


def census_row(n: int, source: Optional[Iterable[str]] = None,
               threads: int = 1,
               collect_ntu: Optional[list] = None,
               max_builtin: int = BUILTIN_MAX_ORDER) -> CensusRow:
    """Census counts for order n from the built-in generator or a graph6
    line stream. With threads > 1, graphs are classified in a process pool;
    counting is order-independent, so results are identical either way.
    """
    if source is None:
        lines = (write_graph6(g) for g in enumerate_graphs(n, max_builtin))
    else:
        def checked(src):
            for g in stream_graph6(src):
                if g.n != n:
                    raise GraphParseError(
                        f"stream graph has order {g.n}, expected {n}")
                yield write_graph6(g)
        lines = checked(source)
    cnbtf = ntu = xab = 0
    if threads > 1:
        import multiprocessing
        with multiprocessing.Pool(threads) as pool:
            results = pool.imap(_classify_g6, lines, chunksize=64)
            for is_cnbtf, is_ntu, is_xab, line in results:
                cnbtf += is_cnbtf
                ntu += is_ntu
                xab += is_xab
                if is_ntu and collect_ntu is not None:
                    collect_ntu.append(line)
    else:
        for line in lines:
            is_cnbtf, is_ntu, is_xab, line = _classify_g6(line)
            cnbtf += is_cnbtf
            ntu += is_ntu
            xab += is_xab
            if is_ntu and collect_ntu is not None:
                collect_ntu.append(line)
    row = CensusRow(n=n, count_cnbtf=cnbtf, count_ntu=ntu, count_xab=xab)
    assert row.count_xab <= row.count_ntu <= row.count_cnbtf
    return row
