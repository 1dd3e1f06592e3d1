"""Automorphism groups and canonical forms via equitable-partition
refinement with individualization-refinement backtracking.

The search follows the classical scheme: refine to an equitable partition,
branch on vertices of a deterministically chosen target cell, and keep two
reference leaves (the first leaf for automorphism detection, the best leaf
for the canonical form). Pruning uses path invariants plus orbit pruning
under the already-discovered automorphisms that fix the branching prefix.
Correctness never depends on the pruning: skipped branches are provably
equivalent to explored ones.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph_core import Graph, write_graph6, parse_graph6
from .perms import Permutation, PermGroup, group_from_generators


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered partition of {0..n-1} into non-empty cells."""

    cells: tuple[tuple[int, ...], ...]

    @classmethod
    def unit(cls, n: int) -> "OrderedPartition":
        return cls((tuple(range(n)),) if n else ())

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]], n: int) -> "OrderedPartition":
        norm = tuple(tuple(sorted(c)) for c in cells)
        flat = sorted(v for c in norm for v in c)
        if any(not c for c in norm):
            raise ValueError("empty cell in partition")
        if flat != list(range(n)):
            raise ValueError("cells do not partition the vertex set")
        return cls(norm)

    @property
    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical relabeling of a graph plus the automorphisms found.

    ``relabeling`` maps input vertex -> canonical position; applying it to
    the input graph yields exactly the graph encoded by canonical_graph6.
    """

    relabeling: Permutation
    canonical_graph6: str
    aut_generators: tuple[Permutation, ...]
    base_sequence: tuple[int, ...]


def _refine_cells(adj, cells: list[list[int]], queue: list[int],
                  trace: list[int], n: int) -> None:
    """Refine cells in place to the coarsest equitable partition.

    ``queue`` holds splitter cells as bitsets (FIFO). Fragments are ordered
    by ascending neighbour count, which is label-independent, so equivalent
    branches produce identical traces.
    """
    qi = 0
    ncells = len(cells)
    while qi < len(queue):
        if ncells == n:
            return
        w = queue[qi]
        qi += 1
        ci = 0
        while ci < len(cells):
            cell = cells[ci]
            if len(cell) == 1:
                ci += 1
                continue
            counts = [(adj[v] & w).bit_count() for v in cell]
            first = counts[0]
            if all(c == first for c in counts):
                ci += 1
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            keys = sorted(groups)
            frags = [groups[k] for k in keys]
            cells[ci:ci + 1] = frags
            ncells += len(frags) - 1
            trace.append(ci)
            for k in keys:
                frag = groups[k]
                trace.append(k)
                trace.append(len(frag))
                fb = 0
                for v in frag:
                    fb |= 1 << v
                queue.append(fb)
            ci += len(frags)


def _invariant(cells: list[list[int]], trace: list[int]) -> tuple:
    """Node invariant: cell-size tuple plus a refinement-trace hash."""
    sizes = tuple(len(c) for c in cells)
    h = zlib.crc32(b" ".join(b"%d" % t for t in trace))
    return (sizes, h)


def refine(g: Graph, p: OrderedPartition) -> OrderedPartition:
    """Coarsest equitable refinement of p (deterministic given cell order)."""
    cells = [list(c) for c in p.cells]
    queue = []
    for c in cells:
        fb = 0
        for v in c:
            fb |= 1 << v
        queue.append(fb)
    _refine_cells(g.adj, cells, queue, [], g.n)
    return OrderedPartition(tuple(tuple(c) for c in cells))


def _leaf_payload(adj, lab: list[int], n: int) -> bytes:
    """graph6 payload bytes of the graph relabeled by leaf order ``lab``."""
    out = bytearray()
    buf = 0
    filled = 0
    for j in range(1, n):
        row = adj[lab[j]]
        for i in range(j):
            buf = (buf << 1) | ((row >> lab[i]) & 1)
            filled += 1
            if filled == 6:
                out.append(buf + 63)
                buf = 0
                filled = 0
    if filled:
        out.append((buf << (6 - filled)) + 63)
    return bytes(out)


def _target_cell_index(cells: list[list[int]]) -> int:
    """First largest non-singleton cell (fixed rule for determinism)."""
    best = -1
    best_len = 1
    for i, c in enumerate(cells):
        if len(c) > best_len:
            best = i
            best_len = len(c)
    return best


class _Search:
    """One individualization-refinement run over a fixed graph."""

    def __init__(self, g: Graph, initial: OrderedPartition):
        self.adj = g.adj
        self.n = g.n
        self.initial = initial
        self.gens: list[tuple[int, ...]] = []
        self.zeta_inv: list[tuple] = []
        self.zeta_payload: Optional[bytes] = None
        self.zeta_lab: list[int] = []
        self.zeta_base: list[int] = []
        self.rho_inv: list[tuple] = []
        self.rho_payload: Optional[bytes] = None
        self.rho_lab: list[int] = []
        self.rho_base: list[int] = []
        # Backjump target depth after an automorphism discovery, or None.
        self.jump_to: Optional[int] = None

    def run(self) -> None:
        cells = [list(c) for c in self.initial.cells]
        queue = []
        for c in cells:
            fb = 0
            for v in c:
                fb |= 1 << v
            queue.append(fb)
        trace: list[int] = []
        _refine_cells(self.adj, cells, queue, trace, self.n)
        inv = _invariant(cells, trace)
        self._node(cells, [inv], [])

    # -- path comparisons ----------------------------------------------

    def _eq_zeta(self, path: list[tuple]) -> bool:
        if len(path) > len(self.zeta_inv):
            return False
        return all(a == b for a, b in zip(path, self.zeta_inv))

    def _cmp_rho(self, path: list[tuple]) -> int:
        """Lexicographic compare of path vs the best leaf's invariant path."""
        for a, b in zip(path, self.rho_inv):
            if a != b:
                return 1 if a > b else -1
        return 0 if len(path) <= len(self.rho_inv) else 1

    # -- automorphism bookkeeping ----------------------------------------

    def _add_generator(self, ref_lab: list[int], lab: list[int]) -> None:
        sigma = [0] * self.n
        for ref_v, v in zip(ref_lab, lab):
            sigma[ref_v] = v
        sig = tuple(sigma)
        if all(i == x for i, x in enumerate(sig)):
            return
        if sig not in self.gens:
            self.gens.append(sig)

    def _orbit_reps_done(self, v: int, done: list[int], prefix: list[int]) -> bool:
        """Is v in the orbit of an explored sibling under the known
        automorphisms fixing the branching prefix pointwise?"""
        usable = [g for g in self.gens
                  if all(g[b] == b for b in prefix)]
        if not usable:
            return False
        seen = {v}
        frontier = [v]
        done_set = set(done)
        while frontier:
            nxt = []
            for a in frontier:
                for g in usable:
                    b = g[a]
                    if b in done_set:
                        return True
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return False

    # -- the backtracking search ------------------------------------------

    def _node(self, cells: list[list[int]], path: list[tuple],
              prefix: list[int]) -> None:
        if len(cells) == self.n:
            self._leaf(cells, path, prefix)
            return
        ti = _target_cell_index(cells)
        done: list[int] = []
        for v in sorted(cells[ti]):
            if self._orbit_reps_done(v, done, prefix):
                continue
            done.append(v)
            child = [list(c) for c in cells]
            rest = [u for u in child[ti] if u != v]
            child[ti:ti + 1] = [[v], rest]
            rest_bits = 0
            for u in rest:
                rest_bits |= 1 << u
            trace: list[int] = [ti]
            _refine_cells(self.adj, child, [1 << v, rest_bits], trace, self.n)
            inv = _invariant(child, trace)
            path.append(inv)
            if self.zeta_payload is None:
                self._node(child, path, prefix + [v])
            else:
                eq_z = self._eq_zeta(path)
                cmp_r = self._cmp_rho(path)
                if eq_z or cmp_r >= 0:
                    self._node(child, path, prefix + [v])
            path.pop()
            if self.jump_to is not None:
                # A discovered automorphism showed the remaining siblings'
                # subtrees are images of already-explored ones; unwind to
                # the deepest common ancestor with the matched leaf's path.
                if len(prefix) > self.jump_to:
                    return
                self.jump_to = None

    @staticmethod
    def _common_depth(a: list[int], b: list[int]) -> int:
        d = 0
        for x, y in zip(a, b):
            if x != y:
                break
            d += 1
        return d

    def _leaf(self, cells: list[list[int]], path: list[tuple],
              prefix: list[int]) -> None:
        lab = [c[0] for c in cells]
        payload = _leaf_payload(self.adj, lab, self.n)
        if self.zeta_payload is None:
            self.zeta_inv = list(path)
            self.zeta_payload = payload
            self.zeta_lab = lab
            self.zeta_base = list(prefix)
            self.rho_inv = list(path)
            self.rho_payload = payload
            self.rho_lab = lab
            self.rho_base = list(prefix)
            return
        jump = None
        if self._eq_zeta(path) and payload == self.zeta_payload:
            self._add_generator(self.zeta_lab, lab)
            jump = self._common_depth(prefix, self.zeta_base)
        cmp_r = self._cmp_rho(path)
        if cmp_r == 0 and payload == self.rho_payload and lab != self.rho_lab:
            self._add_generator(self.rho_lab, lab)
            jr = self._common_depth(prefix, self.rho_base)
            jump = jr if jump is None else min(jump, jr)
        if cmp_r > 0 or (cmp_r == 0 and payload > self.rho_payload):
            self.rho_inv = list(path)
            self.rho_payload = payload
            self.rho_lab = lab
            self.rho_base = list(prefix)
        if jump is not None:
            self.jump_to = jump


def canonical_form(g: Graph,
                   initial_partition: Optional[OrderedPartition] = None) -> CanonicalForm:
    """Canonical form, relabeling and automorphism generators of g.

    With the default unit partition the canonical string is invariant under
    arbitrary relabelings. A non-unit ``initial_partition`` restricts the
    search to cell-preserving maps (colored canonical form); results are
    then only canonical among graphs carrying the same partition.
    """
    colored = initial_partition is not None
    if not colored:
        cached = g._cache.get("canon")
        if cached is not None:
            return cached
        initial_partition = OrderedPartition.unit(g.n)
    if g.n == 0:
        cf = CanonicalForm(Permutation(()), write_graph6(g), (), ())
        if not colored:
            g._cache["canon"] = cf
        return cf
    search = _Search(g, initial_partition)
    search.run()
    n = g.n
    relab = [0] * n
    for pos, v in enumerate(search.rho_lab):
        relab[v] = pos
    if n < 63:
        prefix = chr(n + 63)
    else:
        prefix = "~" + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    canon6 = prefix + search.rho_payload.decode("ascii")
    cf = CanonicalForm(
        relabeling=Permutation(relab),
        canonical_graph6=canon6,
        aut_generators=tuple(Permutation(s) for s in search.gens),
        base_sequence=tuple(search.zeta_base))
    if not colored:
        g._cache["canon"] = cf
    return cf


def automorphism_group(g: Graph,
                       initial_partition: Optional[OrderedPartition] = None) -> PermGroup:
    """The full edge-preserving permutation group of g (cell-preserving
    subgroup when an initial partition is given)."""
    colored = initial_partition is not None
    if not colored:
        cached = g._cache.get("aut_group")
        if cached is not None:
            return cached
    cf = canonical_form(g, initial_partition)
    grp = group_from_generators(cf.aut_generators, g.n,
                                base_hint=cf.base_sequence)
    if not colored:
        g._cache["aut_group"] = grp
    return grp


def vertex_orbits(g: Graph) -> list[frozenset]:
    """Orbits of the automorphism group on vertices."""
    return automorphism_group(g).orbits()


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism via canonical-form equality."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return canonical_form(g).canonical_graph6 == canonical_form(h).canonical_graph6


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled copy of g."""
    return parse_graph6(canonical_form(g).canonical_graph6)
