"""Strict Voronoi vectors of ``Z^n`` under a positive definite form.

A lattice vector ``v`` is a strict Voronoi (facet) vector exactly when
``+v`` and ``-v`` are the only minimizers of ``Q`` on the coset
``v + 2 Z^n``. Each of the ``2^n - 1`` nonzero parity classes is searched
exhaustively with a Fincke-Pohst enumeration in exact rational arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .qform import CatalogEntry, QuadraticForm, build_form, catalog, is_positive_definite


def canonical_sign(v) -> tuple[int, ...]:
    """Representative of ``{v, -v}`` whose first nonzero coordinate is positive."""
    v = tuple(int(x) for x in v)
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    raise ValueError("zero vector has no sign class")


@dataclass(frozen=True)
class GeneratorSet:
    """A centrally symmetric set of nonzero integer vectors, stored one per +/- pair."""

    n: int
    vectors: tuple[tuple[int, ...], ...]
    form: QuadraticForm | None = field(default=None, compare=False)

    def __post_init__(self):
        reps = []
        for v in self.vectors:
            if len(v) != self.n:
                raise ValueError(f"vector {v} has wrong length for n={self.n}")
            reps.append(canonical_sign(v))
        if len(set(reps)) != len(reps):
            raise ValueError("generator list repeats a vector or its negative")
        object.__setattr__(self, "vectors", tuple(sorted(reps)))

    @classmethod
    def from_vectors(cls, vectors, form=None) -> GeneratorSet:
        vectors = [tuple(v) for v in vectors]
        if not vectors:
            raise ValueError("empty generator list; pass n explicitly")
        return cls(len(vectors[0]), tuple(vectors), form)

    def __len__(self):
        return len(self.vectors)

    def expanded(self) -> tuple[tuple[int, ...], ...]:
        """The full set ``S = -S``, sorted lexicographically."""
        out = list(self.vectors) + [tuple(-x for x in v) for v in self.vectors]
        return tuple(sorted(out))

    def to_json(self) -> list[list[int]]:
        return [list(v) for v in self.vectors]


def _decompose(q: QuadraticForm):
    # Q[x] = sum_i a[i][i] * (x_i + sum_{j>i} a[i][j] x_j)^2
    n = q.n
    a = [[Fraction(x) for x in row] for row in q.entries]
    for i in range(n):
        for j in range(i + 1, n):
            a[j][i] = a[i][j]
            a[i][j] = a[i][j] / a[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                a[k][l] -= a[k][i] * a[i][l]
    return a


def short_vectors(q: QuadraticForm, bound) -> list[tuple[int, ...]]:
    """All integer ``x`` with ``Q[x] <= bound`` (zero included).

    Raises:
        ValueError: if ``q`` is not positive definite.
    """
    if not is_positive_definite(q):
        raise ValueError("form is not positive definite")
    n = q.n
    a = _decompose(q)
    bound = Fraction(bound)
    out = []
    x = [0] * n

    def descend(i, remaining):
        center = -sum((a[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        s = remaining / a[i][i]
        radius = math.sqrt(float(s))
        lo = math.floor(float(center) - radius) - 1
        hi = math.ceil(float(center) + radius) + 1
        for t in range(lo, hi + 1):
            d = t - center
            used = a[i][i] * d * d
            if used > remaining:
                continue
            x[i] = t
            if i == 0:
                out.append(tuple(x))
            else:
                descend(i - 1, remaining - used)
        x[i] = 0

    descend(n - 1, bound)
    return out


def strict_voronoi_vectors(q: QuadraticForm) -> GeneratorSet:
    """Strict Voronoi vectors of ``(Z^n, Q)``, one per +/- pair.

    Raises:
        ValueError: if ``q`` is not positive definite.
    """
    if not is_positive_definite(q):
        raise ValueError("form is not positive definite")
    n = q.n
    classes = [p for p in itertools.product((0, 1), repeat=n) if any(p)]
    # the 0/1 representative of each class bounds its minimum from above
    bound = max(q(p) for p in classes)
    best: dict[tuple[int, ...], tuple[int, list]] = {}
    for x in short_vectors(q, bound):
        parity = tuple(c & 1 for c in x)
        if not any(parity):
            continue
        value = q(x)
        cur = best.get(parity)
        if cur is None or value < cur[0]:
            best[parity] = (value, [x])
        elif value == cur[0]:
            cur[1].append(x)
    strict = []
    for parity in classes:
        _, minimizers = best[parity]
        if len(minimizers) == 2:
            strict.append(canonical_sign(minimizers[0]))
    return GeneratorSet(n, tuple(strict), q)


@dataclass
class CatalogCheck:
    symbol: str
    matches: bool
    computed: tuple[tuple[int, ...], ...]
    expected: tuple[tuple[int, ...], ...]


@dataclass
class CatalogReport:
    checks: list[CatalogCheck]

    @property
    def match_count(self) -> int:
        return sum(c.matches for c in self.checks)

    @property
    def mismatches(self) -> list[CatalogCheck]:
        return [c for c in self.checks if not c.matches]

    def to_json(self) -> dict:
        return {
            "matches": self.match_count,
            "mismatches": len(self.mismatches),
            "entries": [
                {"symbol": c.symbol, "match": c.matches,
                 "computed": [list(v) for v in c.computed],
                 "expected": [list(v) for v in c.expected]}
                for c in self.checks
            ],
        }


def voronoi_of(entry: CatalogEntry) -> GeneratorSet:
    return strict_voronoi_vectors(build_form(entry.rays))


def verify_catalog_vectors(entries=None) -> CatalogReport:
    """Recompute every entry's strict Voronoi vectors and compare as +/- pair sets."""
    entries = catalog() if entries is None else entries
    checks = []
    for entry in entries:
        computed = voronoi_of(entry).vectors
        expected = tuple(sorted(canonical_sign(v) for v in entry.expected_voronoi))
        checks.append(CatalogCheck(entry.symbol, set(computed) == set(expected),
                                   computed, expected))
    return CatalogReport(checks)
