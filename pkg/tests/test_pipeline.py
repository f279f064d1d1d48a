import json

import pytest

from voronoi_chi.cli import main
from voronoi_chi.graphs import is_proper_coloring, torus_graph
from voronoi_chi.pipeline import (ChiCertificate, ReproductionError, certify, generators_of,
                                  resolve_entry, run_dpb, run_dtb, run_table5)
from voronoi_chi.qform import catalog_entry, demo_lattices
from voronoi_chi.sat import read_dimacs, read_solution


@pytest.mark.parametrize("symbol,k,status", [
    ("K_{3,3}", 6, "UNSAT"), ("1+1+1+1", 1, "UNSAT"), ("1+1+1+1", 2, "SAT"),
    ("222+", 3, "UNSAT"), ("hexagonal", 2, "UNSAT")])
def test_run_dpb(symbol, k, status):
    assert run_dpb(resolve_entry(symbol), k).status == status


@pytest.mark.parametrize("symbol,c,vertices", [("K_5", 5, 625), ("1+1+1+1", 2, 16),
                                               ("K_{3,3}", 7, 2401)])
def test_run_dtb(symbol, c, vertices):
    entry = catalog_entry(symbol)
    res = run_dtb(entry, c)
    assert res.status == "SAT" and res.vertices == vertices
    g = torus_graph(generators_of(entry), c)
    assert is_proper_coloring(g, res.coloring)
    assert res.coloring.used <= c


def test_run_dtb_rejects_bad_sublattice():
    with pytest.raises(ValueError):
        run_dtb(catalog_entry("K_5"), 1)


def test_dtb_fails_below_chi():
    assert run_dtb(catalog_entry("C_3+C_3"), 2).status == "UNSAT"


def test_certificate_invariants():
    cert = certify(catalog_entry("C_3+C_3"), 3, 3, 14)
    assert cert.torus_stats == (81, 486)
    assert cert.dpb_graph_stats == (13, 24)
    with pytest.raises(ReproductionError):
        ChiCertificate(**{**cert.__dict__, "torus_c": 4})


def test_certify_wrong_chi():
    with pytest.raises(ReproductionError):
        certify(catalog_entry("C_3+C_3"), 4, 4, 14)
    with pytest.raises(ReproductionError):
        certify(catalog_entry("C_3+C_3"), 2, 2, 14)


def test_demo_lattices_chi():
    for d in demo_lattices():
        cert = certify(d, d.expected_chi, d.expected_chi)
        assert cert.chi == d.expected_chi


def test_table5_subset_persists(tmp_path):
    certs = run_table5(class_ids={14, 16}, out_dir=tmp_path)
    assert [c.chi for c in certs] == [3, 2]
    data = json.loads((tmp_path / "class14_certificate.json").read_text())
    assert data["chi"] == 3 and len(data["witness_coloring"]) == 81
    dpb = read_dimacs((tmp_path / "class14_dpb_k2.cnf").read_text())
    assert dpb.var_count == 13 * 2
    dtb = read_dimacs((tmp_path / "class14_dtb_c3.cnf").read_text())
    status, model = read_solution((tmp_path / "class14_dtb_c3.sol").read_text(), dtb.var_count)
    assert status == "SAT" and dtb.satisfied_by(model)


def test_table5_workers(tmp_path):
    certs = run_table5(class_ids={15, 16}, workers=2)
    assert [c.class_id for c in certs] == [15, 16]


# --- CLI --------------------------------------------------------------------

def test_cli_catalog(capsys):
    assert main(["catalog", "verify"]) == 0
    assert "52/52 match" in capsys.readouterr().out
    assert main(["catalog", "list", "--json"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 52


def test_cli_invariants(capsys):
    assert main(["invariants", "222+"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["r"], data["edges"], data["aut_order"]) == (24, 120, 1152)


def test_cli_chi(capsys):
    assert main(["chi", "dpb", "--entry", "K_{3,3}", "--k", "6"]) == 0
    assert main(["chi", "dpb", "--entry", "K_{3,3}", "--k", "7"]) == 0
    assert main(["chi", "dtb", "--entry", "hexagonal", "--c", "3"]) == 0
    # UNSAT below chi agrees with the reference value
    assert main(["chi", "dtb", "--entry", "C_3+C_3", "--c", "2"]) == 0
    assert main(["chi", "dpb", "--entry", "K_{3,3}", "--k", "6", "--budget", "5"]) == 1
    assert main(["chi", "dtb", "--entry", "K_5", "--c", "1"]) == 1
    assert main(["chi", "full", "--entry", "C_3+1+1", "--no-symmetry-breaking"]) == 0
    assert main(["chi", "dpb", "--entry", "nope", "--k", "2"]) == 1


def test_cli_emit_and_export(tmp_path):
    out = tmp_path / "k33.cnf"
    assert main(["emit-cnf", "--entry", "K_{3,3}", "--torus", "7", "--k", "7",
                 "--no-symmetry-breaking", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "p cnf 16807 254506"
    out = tmp_path / "ball.cnf"
    assert main(["emit-cnf", "--entry", "1+1+1+1", "--ball", "--k", "2", "--out", str(out)]) == 0
    assert out.read_text().startswith("p cnf 18 25\n")
    out = tmp_path / "hex.txt"
    assert main(["graph", "export", "--entry", "hexagonal", "--torus", "3", "--out", str(out)]) == 0
    assert out.read_text().startswith("p 9 27\n")
    out = tmp_path / "ball.json"
    assert main(["graph", "export", "--entry", "K_5", "--ball", "1", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["vertex_count"] == 31
