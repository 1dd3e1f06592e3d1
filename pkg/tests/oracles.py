"""Independent reference implementations used as test oracles.

Everything here is deliberately naive and separate from the package's code
paths: string-based graph6 encoding, literal permutation filtering,
breadth-first closures, textbook distance matrices.
"""

from itertools import permutations

from coverstab.graph_core import Graph


def ref_encode_graph6(n, edges):
    """graph6 encoding straight from the format description, via strings."""
    if n < 63:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63),
               chr((n & 63) + 63)]
    edge_set = {frozenset(e) for e in edges}
    bitstring = ""
    for col in range(1, n):
        for row in range(col):
            bitstring += "1" if frozenset((row, col)) in edge_set else "0"
    while len(bitstring) % 6:
        bitstring += "0"
    for i in range(0, len(bitstring), 6):
        out.append(chr(int(bitstring[i:i + 6], 2) + 63))
    return "".join(out)


def brute_force_automorphisms(g):
    """All edge-preserving permutations, by filtering every permutation."""
    edges = list(g.edges())
    adj = g.adj
    found = []
    for p in permutations(range(g.n)):
        if all((adj[p[u]] >> p[v]) & 1 for u, v in edges):
            found.append(p)
    return found


def brute_force_aut_count(g):
    edges = list(g.edges())
    adj = g.adj
    count = 0
    for p in permutations(range(g.n)):
        if all((adj[p[u]] >> p[v]) & 1 for u, v in edges):
            count += 1
    return count


def backtrack_aut_count(g):
    """Exact automorphism count by DFS image assignment in BFS order.

    Independent of the refinement engine; practical well beyond n = 8
    because candidates are constrained through an already-assigned
    neighbour.
    """
    n = g.n
    adj = g.adj
    if n == 0:
        return 1
    order = []
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in range(n):
                if (adj[v] >> u) & 1 and not seen[u]:
                    seen[u] = True
                    queue.append(u)
    pos = {v: i for i, v in enumerate(order)}
    parent = {}
    for v in order:
        for u in range(n):
            if (adj[v] >> u) & 1 and pos[u] < pos[v]:
                if v not in parent or pos[u] < pos[parent[v]]:
                    parent[v] = u
    degs = [adj[v].bit_count() for v in range(n)]
    count = 0
    img = [-1] * n
    used = [False] * n

    def dfs(i):
        nonlocal count
        if i == n:
            count += 1
            return
        v = order[i]
        if v in parent:
            cands = [u for u in range(n) if (adj[img[parent[v]]] >> u) & 1]
        else:
            cands = range(n)
        av = adj[v]
        for w in cands:
            if used[w] or degs[w] != degs[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if ((av >> u) & 1) != ((adj[w] >> img[u]) & 1):
                    ok = False
                    break
            if ok:
                img[v] = w
                used[w] = True
                dfs(i + 1)
                used[w] = False
        img[v] = -1

    dfs(0)
    return count


def naive_closure(gens, n):
    """Every element of the generated group, by breadth-first products."""
    start = tuple(range(n))
    seen = {start}
    frontier = [start]
    gens = [tuple(p) for p in gens]
    while frontier:
        nxt = []
        for p in frontier:
            for q in gens:
                r = tuple(q[x] for x in p)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def naive_all_pairs_distances(g):
    """Floyd-Warshall distances; None for unreachable."""
    n = g.n
    inf = float("inf")
    dist = [[0 if i == j else (1 if g.has_edge(i, j) else inf)
             for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            row_k = dist[k]
            row_i = dist[i]
            for j in range(n):
                alt = dik + row_k[j]
                if alt < row_i[j]:
                    row_i[j] = alt
    return dist


def complement(g):
    full = (1 << g.n) - 1
    rows = [(full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)]
    return Graph.from_rows(rows)


def line_graph(g):
    """Vertices are the edges of g; adjacency is sharing an endpoint."""
    edges = list(g.edges())
    le = []
    for i, e in enumerate(edges):
        for j in range(i + 1, len(edges)):
            if set(e) & set(edges[j]):
                le.append((i, j))
    return Graph(len(edges), le)


def random_graph(rng, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)
