"""Integer quadratic forms, the twelve ray matrices and the 4-dim catalog."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache

from . import _tables
from .linalg import det, matmul, transpose


@dataclass(frozen=True)
class QuadraticForm:
    """Symmetric integer Gram matrix defining the metric ``x -> x^T Q x``."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, x) -> int:
        """Exact value ``Q[x]``."""
        q = self.entries
        n = len(q)
        total = 0
        for i in range(n):
            xi = x[i]
            if xi:
                total += xi * sum(q[i][j] * x[j] for j in range(n))
        return total

    def __add__(self, other: QuadraticForm) -> QuadraticForm:
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        return QuadraticForm(tuple(tuple(a + b for a, b in zip(r1, r2))
                                   for r1, r2 in zip(self.entries, other.entries)))

    def scaled(self, k: int) -> QuadraticForm:
        return QuadraticForm(tuple(tuple(k * x for x in row) for row in self.entries))

    def transform(self, a) -> QuadraticForm:
        """The form ``A^T Q A`` (the same lattice in the basis given by ``A``)."""
        return QuadraticForm(tuple(map(tuple, matmul(matmul(transpose(a), self.entries), a))))

    def to_text(self) -> str:
        lines = [str(self.n)] + [" ".join(str(x) for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> QuadraticForm:
        """Parse ``n`` on the first line followed by ``n`` integer rows."""
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        if not lines or len(lines[0]) != 1:
            raise ValueError("first line must hold the dimension")
        n = int(lines[0][0])
        rows = lines[1:]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"expected {n} rows of {n} integers")
        return cls(tuple(tuple(int(x) for x in r) for r in rows))


def ray_matrix(i: int) -> QuadraticForm:
    """The ray matrix ``R_i`` spanning Voronoi's secondary cones, ``1 <= i <= 12``."""
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= 12:
        raise ValueError(f"ray index must be an integer in 1..12, got {i!r}")
    return QuadraticForm(_tables.RAY_MATRICES[i])


def build_form(rays) -> QuadraticForm:
    """Entrywise sum of the ray matrices named in ``rays`` (a multiset)."""
    rays = list(rays)
    if not rays:
        raise ValueError("need at least one ray index")
    form = ray_matrix(rays[0])
    for i in rays[1:]:
        form = form + ray_matrix(i)
    return form


def is_positive_definite(q: QuadraticForm) -> bool:
    """Sylvester's criterion with exact integer minors."""
    entries = q.entries
    return all(det([row[:k] for row in entries[:k]]) > 0 for k in range(1, q.n + 1))


@dataclass(frozen=True)
class CatalogEntry:
    """One Delaunay subdivision type with its representative form.

    Fields prefixed ``expected_`` are reference values kept for
    verification only; nothing in the library computes from them.
    """

    symbol: str
    zonotopal: bool
    rays: tuple[int, ...]
    secondary_cone_dim: int
    expected_voronoi: tuple[tuple[int, ...], ...]
    expected_class: int
    expected_chi: int
    torus_scale_c: int

    @property
    def form(self) -> QuadraticForm:
        return build_form(self.rays)

    def to_json(self) -> dict:
        return {
            "symbol": self.symbol,
            "zonotopal": self.zonotopal,
            "rays": list(self.rays),
            "dim": self.secondary_cone_dim,
            "voronoi": [list(v) for v in self.expected_voronoi],
            "chi": self.expected_chi,
            "c": self.torus_scale_c,
        }


@dataclass(frozen=True)
class GraphClassInfo:
    """Reference row for one isomorphism class of Voronoi graphs."""

    class_id: int
    graph_name: str
    r: int
    edges: int
    aut_order: int
    members: tuple[str, ...]
    representative: str
    chi: int
    c: int


@lru_cache(maxsize=None)
def graph_classes() -> tuple[GraphClassInfo, ...]:
    return tuple(GraphClassInfo(*row) for row in _tables.GRAPH_CLASSES)


@lru_cache(maxsize=None)
def catalog() -> tuple[CatalogEntry, ...]:
    """All 52 four-dimensional entries, zonotopal ones first."""
    classes = {c.class_id: c for c in graph_classes()}
    out = []
    for symbol, zono, rays, dim, idx, cls in _tables.ENTRIES:
        info = classes[cls]
        out.append(CatalogEntry(
            symbol=symbol,
            zonotopal=zono,
            rays=rays,
            secondary_cone_dim=dim,
            expected_voronoi=tuple(_tables.VECTOR_LIST[i - 1] for i in idx),
            expected_class=cls,
            expected_chi=info.chi,
            # Only representatives have a published c; c == chi for all of them.
            torus_scale_c=info.c,
        ))
    return tuple(out)


_SUBSCRIPTS = str.maketrans("₀₁₂₃₄₅₆₇₈₉−–′″", "0123456789--'\"")


def normalize_symbol(symbol: str) -> str:
    """Canonical lookup key: drops TeX markup, spaces and unicode variants."""
    s = symbol.translate(_SUBSCRIPTS).replace('"', "''")
    s = re.sub(r"[\s_{}$]", "", s)
    return s.lower()


def catalog_entry(symbol: str) -> CatalogEntry:
    """Look up an entry by Conway symbol.

    TeX markup and unicode subscripts are ignored, so ``"K_{3,3}"``,
    ``"K3,3"`` and ``"K₅−1"`` all resolve.
    """
    key = normalize_symbol(symbol)
    for entry in catalog():
        if normalize_symbol(entry.symbol) == key:
            return entry
    raise KeyError(f"unknown catalog symbol {symbol!r}")


@dataclass(frozen=True)
class DemoLattice:
    symbol: str
    form: QuadraticForm
    expected_chi: int


def demo_lattices() -> tuple[DemoLattice, ...]:
    """The square and hexagonal lattices plus the five 3-dim Voronoi cell types.

    These are smoke-test data, outside the 4-dim catalog.
    """
    return tuple(DemoLattice(s, QuadraticForm(g), chi) for s, g, chi in _tables.DEMO_LATTICES)


def demo_lattice(symbol: str) -> DemoLattice:
    for d in demo_lattices():
        if d.symbol == symbol:
            return d
    raise KeyError(f"unknown demo lattice {symbol!r}")


def catalog_json(entries=None, indent: int | None = 2) -> str:
    entries = catalog() if entries is None else entries
    return json.dumps([e.to_json() for e in entries], indent=indent)
