"""Isomorphism of lattice Cayley graphs and the 52 -> 16 classification.

Every isomorphism between Cayley graphs of lattices fixing the origin is
linear, so it suffices to search for unimodular maps carrying one
generator set onto the other. A basis inside ``S`` is fixed once; its
image runs over ordered bases inside ``S'``. Vectors of ``S`` lying in the
span of the first ``k`` basis vectors have their images determined after
``k`` choices, which prunes the search early.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .graphs import automorphism_order, ball_graph
from .linalg import det, inverse, matmul, matvec, rank, solve_coefficients, transpose
from .qform import CatalogEntry, graph_classes
from .voronoi import GeneratorSet, voronoi_of


@dataclass(frozen=True)
class UnimodularMap:
    """Integer matrix with determinant +/-1 acting on column vectors."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if any(len(row) != len(m) for row in m):
            raise ValueError("matrix must be square")
        if abs(det(m)) != 1:
            raise ValueError("matrix is not unimodular")
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def __call__(self, v) -> tuple[int, ...]:
        return matvec(self.matrix, v)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


def _first_basis(vectors):
    basis = []
    for v in vectors:
        if rank(basis + [v]) > len(basis):
            basis.append(v)
    return basis


def find_linear_isomorphism(s: GeneratorSet, t: GeneratorSet) -> UnimodularMap | None:
    """A unimodular ``A`` with ``A(S u -S) == T u -T``, or None if none exists.

    Raises:
        ValueError: if either set fails to span its space.
    """
    src = s.expanded()
    dst = t.expanded()
    n = s.n
    basis = _first_basis(list(src))
    if len(basis) != n or rank(list(dst)) != t.n:
        raise ValueError("generator sets must have full rank")
    if t.n != n or len(src) != len(dst):
        return None
    dst_set = set(dst)

    # vectors first determined after choosing k basis images
    layers = [[] for _ in range(n)]
    for v in src:
        for k in range(1, n + 1):
            coeffs = solve_coefficients(basis[:k], v)
            if coeffs is not None:
                layers[k - 1].append(coeffs)
                break

    chosen: list[tuple[int, ...]] = []

    def image(coeffs):
        out = []
        for i in range(n):
            x = sum((c * w[i] for c, w in zip(coeffs, chosen)), Fraction(0))
            if x.denominator != 1:
                return None
            out.append(int(x))
        return tuple(out)

    def search(k):
        if k == n:
            return True
        for cand in dst:
            if cand in chosen:
                continue
            chosen.append(cand)
            if rank(chosen) == k + 1 and all(image(c) in dst_set for c in layers[k]):
                if search(k + 1):
                    return True
            chosen.pop()
        return False

    if not search(0):
        return None
    # A = B' B^{-1}, columns of B are the basis vectors
    b_inv = inverse(transpose(basis))
    a = matmul(transpose(chosen), b_inv)
    if any(x.denominator != 1 for row in a for x in row):
        return None
    a_int = tuple(tuple(int(x) for x in row) for row in a)
    if abs(det(a_int)) != 1:
        return None
    amap = UnimodularMap(a_int)
    assert {amap(v) for v in src} == dst_set
    return amap


@dataclass(frozen=True)
class Signature:
    r: int
    e1: int
    aut: int

    def as_tuple(self):
        return (self.r, self.e1, self.aut)


def invariant_signature(gens: GeneratorSet) -> Signature:
    """Regularity, edge count of ``C_1`` and ``|Aut(C_1)|``."""
    g = ball_graph(gens, 1)
    return Signature(2 * len(gens), g.edge_count, automorphism_order(g))


@dataclass
class IsoClass:
    class_id: int
    graph_name: str
    signature: Signature
    members: list[str]
    representative: str
    # (member, matrix) for members whose generators differ from the representative's
    witnesses: list[tuple[str, UnimodularMap]]

    def to_json(self) -> dict:
        return {
            "class_id": self.class_id,
            "graph_name": self.graph_name,
            "signature": list(self.signature.as_tuple()),
            "members": list(self.members),
            "representative": self.representative,
            "witnesses": [{"member": m, "matrix": a.to_json()} for m, a in self.witnesses],
        }


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _name_for(members, signature):
    for info in graph_classes():
        if set(members) <= set(info.members) and \
                (info.r, info.edges, info.aut_order) == signature.as_tuple():
            return info.class_id, info.graph_name
    return None, f"V{signature.r}"


def classify(entries: list[CatalogEntry]) -> list[IsoClass]:
    """Group catalog entries by isomorphism type of their Voronoi graphs.

    Entries are bucketed by invariant signature; inside a bucket a pair is
    merged when a unimodular map links their generator sets. Classes come
    back by descending regularity, ties broken by the catalog position of
    their first member (zonotopal types come first in the catalog).
    """
    symbols = [e.symbol for e in entries]
    if len(set(symbols)) != len(symbols):
        raise ValueError("duplicate symbols in input")
    gens = {e.symbol: voronoi_of(e) for e in entries}
    sigs = {s: invariant_signature(g) for s, g in gens.items()}
    uf = _UnionFind(symbols)
    witness: dict[tuple[str, str], UnimodularMap] = {}

    buckets: dict[tuple, list[str]] = {}
    for sym in symbols:
        buckets.setdefault(sigs[sym].as_tuple(), []).append(sym)
    for members in buckets.values():
        # identical generator sets need no search
        by_set: dict[tuple, list[str]] = {}
        for sym in members:
            by_set.setdefault(gens[sym].vectors, []).append(sym)
        heads = []
        for group in by_set.values():
            for other in group[1:]:
                uf.union(group[0], other)
            heads.append(group[0])
        for i, a in enumerate(heads):
            for b in heads[i + 1:]:
                if uf.find(a) == uf.find(b):
                    continue
                amap = find_linear_isomorphism(gens[a], gens[b])
                if amap is not None:
                    uf.union(a, b)
                    witness[(a, b)] = amap

    order = {s: i for i, s in enumerate(_catalog_order(symbols))}
    groups: dict[str, list[str]] = {}
    for sym in symbols:
        groups.setdefault(uf.find(sym), []).append(sym)
    grouped = [sorted(g, key=order.get) for g in groups.values()]
    grouped.sort(key=lambda g: (-sigs[g[0]].r, order[g[0]]))

    out = []
    for i, members in enumerate(grouped, start=1):
        sig = sigs[members[0]]
        known_id, name = _name_for(members, sig)
        rep = _representative(members, known_id)
        wits = []
        for m in members:
            if gens[m].vectors != gens[rep].vectors:
                amap = find_linear_isomorphism(gens[rep], gens[m])
                wits.append((m, amap))
        out.append(IsoClass(i, name, sig, members, rep, wits))
    return out


def _catalog_order(symbols):
    from .qform import catalog

    rank_of = {e.symbol: i for i, e in enumerate(catalog())}
    return sorted(symbols, key=lambda s: (rank_of.get(s, len(rank_of)), s))


def _representative(members, known_id):
    for info in graph_classes():
        if info.class_id == known_id and info.representative in members:
            return info.representative
    return members[0]


def classification_json(classes: list[IsoClass], indent: int | None = 2) -> str:
    return json.dumps([c.to_json() for c in classes], indent=indent)
