"""Finite graphs cut out of a lattice's Voronoi graph.

Two constructions feed the chromatic bounds: the ball ``C_d`` of graph
radius ``d`` around the origin (lower bound) and the discrete torus
``Z^n / c Z^n`` (upper bound). Also here: automorphism group order by
partition refinement and a small exact coloring oracle.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field

from .voronoi import GeneratorSet


@dataclass(frozen=True)
class FiniteGraph:
    """Undirected simple graph on ``0..vertex_count-1`` with vector labels."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[tuple[int, ...], ...] = ()
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"parallel edge {key}")
            seen.add(key)
        edges = tuple(sorted(seen))
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        if self.labels and len(self.labels) != n:
            raise ValueError("label count differs from vertex count")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def to_edge_list(self) -> str:
        """``p <n> <m>`` header, then one 1-based ``u v`` line per edge."""
        lines = [f"p {self.vertex_count} {self.edge_count}"]
        lines += [f"{u + 1} {v + 1}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> FiniteGraph:
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0][0] != "p":
            raise ValueError("missing 'p <n> <m>' header")
        n, m = int(lines[0][1]), int(lines[0][2])
        edges = tuple((int(a) - 1, int(b) - 1) for a, b in lines[1:])
        if len(edges) != m:
            raise ValueError(f"header announces {m} edges, found {len(edges)}")
        return cls(n, edges)

    def to_json(self) -> str:
        return json.dumps({
            "vertex_count": self.vertex_count,
            "labels": [list(x) for x in self.labels],
            "edges": [list(e) for e in self.edges],
        })


@dataclass(frozen=True)
class Coloring:
    """Colors ``1..k`` per vertex."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise ValueError(f"colors out of range 1..{self.k}: {bad[:5]}")

    @property
    def used(self) -> int:
        return len(set(self.colors))


def ball_graph(gens: GeneratorSet, d: int) -> FiniteGraph:
    """Induced subgraph of ``Cayley(Z^n, S)`` on points within graph distance ``d`` of 0.

    Vertex 0 is the origin; vertices are numbered in BFS order.
    """
    if d < 0:
        raise ValueError("radius must be nonnegative")
    steps = gens.expanded()
    if d >= 1 and not steps:
        raise ValueError("empty generator set")
    origin = (0,) * gens.n
    index = {origin: 0}
    labels = [origin]
    frontier = deque([(origin, 0)])
    while frontier:
        x, dist = frontier.popleft()
        if dist == d:
            continue
        for s in steps:
            y = tuple(a + b for a, b in zip(x, s))
            if y not in index:
                index[y] = len(labels)
                labels.append(y)
                frontier.append((y, dist + 1))
    edges = []
    for i, x in enumerate(labels):
        for s in steps:
            j = index.get(tuple(a + b for a, b in zip(x, s)))
            if j is not None and i < j:
                edges.append((i, j))
    return FiniteGraph(len(labels), tuple(edges), tuple(labels))


def sublattice_avoids_generators(gens: GeneratorSet, c: int) -> bool:
    """True iff no generator lies in ``c Z^n``."""
    if c < 1:
        raise ValueError("scale must be positive")
    return not any(all(x % c == 0 for x in v) for v in gens.vectors)


def torus_graph(gens: GeneratorSet, c: int) -> FiniteGraph:
    """Quotient graph ``Z^n / c Z^n`` with edges induced by the generators.

    Vertices are labelled by representatives in ``{0..c-1}^n`` in
    lexicographic order, so the label of vertex ``i`` is ``i`` written in
    base ``c``.

    Raises:
        ValueError: if ``c Z^n`` contains a generator (including ``c == 1``).
    """
    if c < 2 or not sublattice_avoids_generators(gens, c):
        raise ValueError("sublattice contains a Voronoi vector")
    n = gens.n
    labels = tuple(itertools.product(range(c), repeat=n))
    weights = [c ** (n - 1 - i) for i in range(n)]
    edges = set()
    for i, x in enumerate(labels):
        for s in gens.vectors:
            j = sum(((a + b) % c) * w for a, b, w in zip(x, s, weights))
            edges.add((i, j) if i < j else (j, i))
    return FiniteGraph(len(labels), tuple(sorted(edges)), labels)


def torus_index(label, c: int) -> int:
    """Vertex index of the coset containing the integer vector ``label``."""
    idx = 0
    for x in label:
        idx = idx * c + (x % c)
    return idx


def is_proper_coloring(graph: FiniteGraph, coloring) -> bool:
    """True iff no edge joins two vertices of equal color.

    Raises:
        ValueError: if the coloring does not cover exactly the vertex set.
    """
    colors = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
    if len(colors) != graph.vertex_count:
        raise ValueError(f"coloring has {len(colors)} entries for "
                         f"{graph.vertex_count} vertices")
    return all(colors[u] != colors[v] for u, v in graph.edges)


# --- automorphisms -------------------------------------------------------

def _refine(graph: FiniteGraph, colors: tuple[int, ...]) -> tuple[tuple[int, ...], tuple]:
    """Iterate (color, neighbour color multiset) to the coarsest equitable partition.

    New colors are ranks of sorted signatures, so the result commutes with
    graph isomorphisms. Returns the colors and a trace that must coincide
    for any two colorings related by an isomorphism.
    """
    adj = graph.adjacency
    trace = []
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v])))
                for v in range(graph.vertex_count)]
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        colors = tuple(ranking[s] for s in sigs)
        trace.append(tuple(sorted(ranking.items(), key=lambda kv: kv[1])))
        if len(ranking) == ncolors:
            return colors, tuple(trace)
        ncolors = len(ranking)


def _individualize(colors, v):
    # v becomes a singleton cell placed just before its old cell
    return tuple(2 * c + (0 if u == v else 1) for u, c in enumerate(colors))


def _target_cell(colors):
    sizes = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    cells = [c for c, s in sizes.items() if s > 1]
    if not cells:
        return None
    return min(cells)


def _is_automorphism(graph, perm):
    edges = set(graph.edges)
    for u, v in graph.edges:
        a, b = perm[u], perm[v]
        if ((a, b) if a < b else (b, a)) not in edges:
            return False
    return True


def _extends(graph, ca, ta, cb, tb) -> bool:
    if ta != tb:
        return False
    cell = _target_cell(ca)
    if cell is None:
        perm = [0] * graph.vertex_count
        pos_b = {c: v for v, c in enumerate(cb)}
        for v, c in enumerate(ca):
            perm[v] = pos_b[c]
        return _is_automorphism(graph, perm)
    x = ca.index(cell)
    na, nta = _refine(graph, _individualize(ca, x))
    for y in (v for v, c in enumerate(cb) if c == cell):
        nb, ntb = _refine(graph, _individualize(cb, y))
        if _extends(graph, na, nta, nb, ntb):
            return True
    return False


def automorphism_order(graph: FiniteGraph, colors=None) -> int:
    """Order of the automorphism group of ``graph`` (optionally color preserving).

    Uses the orbit-stabilizer chain: individualize a vertex of the first
    nontrivial cell, count its orbit by searching for one automorphism per
    candidate image, then recurse into the stabilizer.
    """
    if graph.vertex_count == 0:
        return 1
    start = tuple(colors) if colors is not None else (0,) * graph.vertex_count
    cur, _ = _refine(graph, start)
    order = 1
    while True:
        cell = _target_cell(cur)
        if cell is None:
            return order
        x = cur.index(cell)
        fixed, tfixed = _refine(graph, _individualize(cur, x))
        orbit = 1
        for y in (v for v, c in enumerate(cur) if c == cell and v != x):
            other, tother = _refine(graph, _individualize(cur, y))
            if _extends(graph, fixed, tfixed, other, tother):
                orbit += 1
        order *= orbit
        cur = fixed


# --- exact chromatic number for small graphs ------------------------------

EXACT_VERTEX_LIMIT = 24


def _greedy_clique(adj_sets, n):
    best = []
    for start in range(n):
        clique = [start]
        cand = set(adj_sets[start])
        while cand:
            v = max(cand, key=lambda w: len(adj_sets[w] & cand))
            clique.append(v)
            cand &= adj_sets[v]
        if len(clique) > len(best):
            best = clique
    return best


def chromatic_number_exact_small(graph: FiniteGraph) -> int:
    """Exact chromatic number by DSATUR branch and bound.

    Raises:
        ValueError: for graphs above ``EXACT_VERTEX_LIMIT`` vertices.
    """
    n = graph.vertex_count
    if n > EXACT_VERTEX_LIMIT:
        raise ValueError(f"refusing exact search on {n} > {EXACT_VERTEX_LIMIT} vertices")
    if n == 0:
        return 0
    if graph.edge_count == 0:
        return 1
    adj = [set(a) for a in graph.adjacency]
    clique = _greedy_clique(adj, n)
    lower = len(clique)
    best = [n]
    colors = [0] * n
    # clique vertices are pre-colored 1..|clique|; this is w.l.o.g.
    for i, v in enumerate(clique):
        colors[v] = i + 1

    def search(used):
        if used >= best[0]:
            return
        uncolored = [v for v in range(n) if not colors[v]]
        if not uncolored:
            best[0] = used
            return
        v = max(uncolored, key=lambda u: (len({colors[w] for w in adj[u] if colors[w]}),
                                          len(adj[u])))
        forbidden = {colors[w] for w in adj[v]}
        for c in range(1, min(used + 1, best[0] - 1) + 1):
            if c in forbidden:
                continue
            colors[v] = c
            search(max(used, c))
            colors[v] = 0
            if best[0] == lower:
                return

    search(lower)
    return best[0]
