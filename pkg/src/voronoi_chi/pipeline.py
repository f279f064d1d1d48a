"""End-to-end reproduction: catalog check, graph classification, chromatic numbers.

The lower bound comes from the ball graph ``C_1`` (any coloring of the
lattice restricts to it), the upper bound from a proper coloring of the
discrete torus ``Z^n / c Z^n`` extended periodically.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .graphs import Coloring, ball_graph, is_proper_coloring, sublattice_avoids_generators, torus_graph
from .iso import classify, invariant_signature
from .qform import catalog, catalog_entry, demo_lattice, graph_classes
from .sat import DEFAULT_BUDGET, decode_coloring, encode_k_coloring, solve, write_dimacs, write_solution
from .voronoi import GeneratorSet, strict_voronoi_vectors, verify_catalog_vectors

log = logging.getLogger(__name__)


class ReproductionError(RuntimeError):
    """A computed value disagrees with the published reference data."""


def resolve_entry(symbol: str):
    """Catalog entry by Conway symbol, falling back to the demo lattices."""
    try:
        return catalog_entry(symbol)
    except KeyError:
        return demo_lattice(symbol)


def generators_of(entry) -> GeneratorSet:
    return strict_voronoi_vectors(entry.form)


@dataclass
class DpbResult:
    symbol: str
    k: int
    status: str
    vertices: int
    edges: int
    stats: dict
    formula: object = field(default=None, repr=False)


@dataclass
class DtbResult:
    symbol: str
    c: int
    status: str
    vertices: int
    edges: int
    coloring: Coloring | None
    stats: dict
    formula: object = field(default=None, repr=False)
    outcome: object = field(default=None, repr=False)


def run_dpb(entry, k: int, *, budget: int = DEFAULT_BUDGET, seed: int = 0,
            symmetry_breaking: bool = False) -> DpbResult:
    """Is ``C_1`` ``k``-colorable? UNSAT proves ``chi >= k + 1``."""
    if k < 1:
        raise ValueError("k must be positive")
    graph = ball_graph(generators_of(entry), 1)
    formula = encode_k_coloring(graph, k, symmetry_breaking)
    out = solve(formula, budget, seed)
    return DpbResult(entry.symbol, k, out.status, graph.vertex_count, graph.edge_count,
                     out.stats, formula)


def run_dtb(entry, c: int, *, budget: int = DEFAULT_BUDGET, seed: int = 0,
            symmetry_breaking: bool = True) -> DtbResult:
    """Color ``Z^n / c Z^n`` with ``c`` colors; SAT proves ``chi <= c``.

    Raises:
        ValueError: if ``c Z^n`` contains a strict Voronoi vector.
    """
    gens = generators_of(entry)
    if not sublattice_avoids_generators(gens, c):
        raise ValueError("sublattice contains a Voronoi vector")
    graph = torus_graph(gens, c)
    formula = encode_k_coloring(graph, c, symmetry_breaking)
    out = solve(formula, budget, seed)
    coloring = None
    if out.is_sat:
        coloring = decode_coloring(graph.vertex_count, c, out)
        if not is_proper_coloring(graph, coloring):
            raise ReproductionError(f"{entry.symbol}: decoded torus coloring is improper")
    return DtbResult(entry.symbol, c, out.status, graph.vertex_count, graph.edge_count,
                     coloring, out.stats, formula, out)


@dataclass
class ChiCertificate:
    """Matching lower and upper bound for one lattice."""

    class_id: int
    representative: str
    chi: int
    dpb_unsat_k: int
    dpb_graph_stats: tuple[int, int]
    torus_c: int
    torus_stats: tuple[int, int]
    witness_coloring: Coloring
    started: float
    finished: float
    solver_stats: dict

    def __post_init__(self):
        if not self.dpb_unsat_k + 1 == self.chi == self.torus_c:
            raise ReproductionError(
                f"{self.representative}: bounds do not meet "
                f"(unsat at {self.dpb_unsat_k}, torus c={self.torus_c}, chi={self.chi})")
        if self.witness_coloring.used > self.chi:
            raise ReproductionError(f"{self.representative}: witness uses too many colors")

    def to_json(self) -> dict:
        d = asdict(self)
        d["witness_coloring"] = list(self.witness_coloring.colors)
        return d


def certify(entry, chi: int, c: int, class_id: int = 0, *, budget: int = DEFAULT_BUDGET,
            seed: int = 0, symmetry_breaking: bool = True, out_dir=None) -> ChiCertificate:
    """Certify ``chi(entry) == chi`` with a DPB refutation at ``chi - 1`` and a torus coloring.

    Raises:
        ReproductionError: if either verdict is not the expected one.
    """
    started = time.time()
    dpb = run_dpb(entry, chi - 1, budget=budget, seed=seed)
    if dpb.status != "UNSAT":
        raise ReproductionError(f"class {class_id} ({entry.symbol}): C_1 is {chi - 1}-colorable")
    dtb = run_dtb(entry, c, budget=budget, seed=seed, symmetry_breaking=symmetry_breaking)
    if dtb.status != "SAT":
        raise ReproductionError(f"class {class_id} ({entry.symbol}): torus mod {c} "
                                f"is not {c}-colorable")
    cert = ChiCertificate(
        class_id=class_id,
        representative=entry.symbol,
        chi=chi,
        dpb_unsat_k=chi - 1,
        dpb_graph_stats=(dpb.vertices, dpb.edges),
        torus_c=c,
        torus_stats=(dtb.vertices, dtb.edges),
        witness_coloring=dtb.coloring,
        started=started,
        finished=time.time(),
        solver_stats={"dpb": dpb.stats, "dtb": dtb.stats},
    )
    if out_dir is not None:
        _persist(cert, dpb, dtb, Path(out_dir))
    log.info("class %s %s: chi=%d (%.2fs)", class_id, entry.symbol, chi,
             cert.finished - cert.started)
    return cert


def _persist(cert, dpb, dtb, out_dir: Path):
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"class{cert.class_id:02d}"
    (out_dir / f"{stem}_certificate.json").write_text(json.dumps(cert.to_json(), indent=2))
    (out_dir / f"{stem}_dpb_k{dpb.k}.cnf").write_text(write_dimacs(dpb.formula))
    (out_dir / f"{stem}_dtb_c{dtb.c}.cnf").write_text(write_dimacs(dtb.formula))
    (out_dir / f"{stem}_dtb_c{dtb.c}.sol").write_text(write_solution(dtb.outcome))


def _certify_class(args):
    info, budget, seed, symmetry_breaking, out_dir = args
    return certify(catalog_entry(info.representative), info.chi, info.c, info.class_id,
                   budget=budget, seed=seed, symmetry_breaking=symmetry_breaking,
                   out_dir=out_dir)


def run_table5(*, budget: int = DEFAULT_BUDGET, seed: int = 0, symmetry_breaking: bool = True,
               out_dir=None, workers: int = 1, class_ids=None) -> list[ChiCertificate]:
    """Certificates for every class representative, in class order."""
    infos = [i for i in graph_classes() if class_ids is None or i.class_id in class_ids]
    jobs = [(i, budget, seed, symmetry_breaking, out_dir) for i in infos]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            certs = list(pool.map(_certify_class, jobs))
    else:
        certs = [_certify_class(j) for j in jobs]
    for cert, info in zip(certs, infos):
        if cert.chi != info.chi:
            raise ReproductionError(f"class {info.class_id}: chi {cert.chi} != {info.chi}")
    return certs


@dataclass
class Table4Row:
    class_id: int
    graph_name: str
    r: int
    edges: int
    aut_order: int
    members: list[str]
    witnesses: list

    @property
    def number(self) -> int:
        return len(self.members)


def run_table4() -> list[Table4Row]:
    """Check the catalog, classify all 52 entries and compare with the reference rows.

    Raises:
        ReproductionError: listing the first disagreeing row.
    """
    report = verify_catalog_vectors()
    if report.mismatches:
        raise ReproductionError("strict Voronoi vectors differ for "
                                + ", ".join(c.symbol for c in report.mismatches))
    classes = classify(list(catalog()))
    reference = graph_classes()
    if len(classes) != len(reference):
        raise ReproductionError(f"{len(classes)} classes instead of {len(reference)}")
    rows = []
    for got, ref in zip(classes, reference):
        sig = got.signature
        row = Table4Row(got.class_id, got.graph_name, sig.r, sig.e1, sig.aut,
                        got.members, got.witnesses)
        if (row.r, row.edges, row.aut_order) != (ref.r, ref.edges, ref.aut_order) \
                or set(row.members) != set(ref.members):
            raise ReproductionError(
                f"row {ref.class_id}: got ({row.r}, {row.edges}, {row.aut_order}, "
                f"{row.members}), expected ({ref.r}, {ref.edges}, {ref.aut_order}, "
                f"{list(ref.members)})")
        rows.append(row)
    return rows


def invariants_of(entry) -> dict:
    gens = generators_of(entry)
    sig = invariant_signature(gens)
    return {"symbol": entry.symbol, "r": sig.r, "edges": sig.e1, "aut_order": sig.aut,
            "voronoi": gens.to_json()}
