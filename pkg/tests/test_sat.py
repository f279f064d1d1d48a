import hashlib
import itertools
import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from conftest import gens_of
from voronoi_chi.graphs import (FiniteGraph, ball_graph, chromatic_number_exact_small,
                                is_proper_coloring, torus_graph)
from voronoi_chi.pipeline import generators_of, resolve_entry
from voronoi_chi.qform import catalog
from voronoi_chi.sat import (SAT, UNSAT, BudgetExceeded, CnfFormula, SatOutcome,
                             chromatic_number_sat, decode_coloring, encode_k_coloring,
                             read_dimacs, read_solution, solve, write_dimacs, write_solution)

GOLDEN = Path(__file__).parent / "golden"


def brute_sat(formula):
    for bits in itertools.product((False, True), repeat=formula.var_count):
        if formula.satisfied_by(bits):
            return True
    return False


def random_graph(rng, n, p):
    return FiniteGraph(n, tuple(e for e in itertools.combinations(range(n), 2)
                                if rng.random() < p))


EDGE = FiniteGraph(2, ((0, 1),))
TRIANGLE = FiniteGraph(3, ((0, 1), (1, 2), (0, 2)))


# --- formula / encoding ------------------------------------------------------

def test_formula_validation():
    with pytest.raises(ValueError):
        CnfFormula(1, ((),))
    with pytest.raises(ValueError):
        CnfFormula(1, ((2,),))
    with pytest.raises(ValueError):
        CnfFormula(1, ((0,),))


def test_encode_counts():
    f = encode_k_coloring(EDGE, 2)
    assert (f.var_count, len(f.clauses)) == (4, 4)
    f = encode_k_coloring(ball_graph(gens_of("1+1+1+1"), 1), 2)
    assert (f.var_count, len(f.clauses)) == (18, 9 + 16)


def test_encode_k33_torus_counts():
    g = torus_graph(gens_of("K_{3,3}"), 7)
    f = encode_k_coloring(g, 7)
    assert g.edge_count == 7 ** 4 * 30 // 2
    assert (f.var_count, len(f.clauses)) == (16807, 2401 + 7 * 36015)


def test_encode_numbering():
    f = encode_k_coloring(TRIANGLE, 3)
    assert f.clauses[0] == (1, 2, 3)
    assert f.clauses[2] == (7, 8, 9)
    assert (-1, -4) in f.clauses and (-6, -9) in f.clauses


def test_symmetry_breaking_clauses():
    f = encode_k_coloring(TRIANGLE, 3, symmetry_breaking=True)
    extra = f.clauses[len(encode_k_coloring(TRIANGLE, 3).clauses):]
    assert extra == ((1,), (-2,), (-3,), (-6,))


def test_encode_rejects_zero_colors():
    with pytest.raises(ValueError):
        encode_k_coloring(EDGE, 0)


# --- solver -------------------------------------------------------------------

def test_trivial_instances():
    assert solve(CnfFormula(0, ())).status == SAT
    assert solve(CnfFormula(1, ((1,), (-1,)))).status == UNSAT
    out = solve(CnfFormula(2, ((1, 2), (-1,))))
    assert out.assignment == (False, True)


def test_k5_ball():
    g = ball_graph(gens_of("K_5"), 1)
    assert solve(encode_k_coloring(g, 4)).status == UNSAT
    assert solve(encode_k_coloring(g, 5)).status == SAT


def test_pigeonhole_unsat():
    # 6 pigeons, 5 holes
    p, h = 6, 5
    var = lambda i, j: i * h + j + 1
    clauses = [tuple(var(i, j) for j in range(h)) for i in range(p)]
    clauses += [(-var(i, j), -var(k, j)) for j in range(h)
                for i, k in itertools.combinations(range(p), 2)]
    out = solve(CnfFormula(p * h, tuple(clauses)))
    assert out.status == UNSAT
    assert out.stats["conflicts"] > 0


def test_budget_exceeded():
    p, h = 7, 6
    var = lambda i, j: i * h + j + 1
    clauses = [tuple(var(i, j) for j in range(h)) for i in range(p)]
    clauses += [(-var(i, j), -var(k, j)) for j in range(h)
                for i, k in itertools.combinations(range(p), 2)]
    with pytest.raises(BudgetExceeded):
        solve(CnfFormula(p * h, tuple(clauses)), budget=10)


def test_outcome_self_check():
    f = CnfFormula(1, ((1,),))
    with pytest.raises(AssertionError):
        SatOutcome(SAT, (False,), formula=f)
    with pytest.raises(ValueError):
        SatOutcome(UNSAT, (True,))


clause_st = st.lists(st.integers(1, 8).flatmap(lambda v: st.sampled_from([v, -v])),
                     min_size=1, max_size=4)


@settings(max_examples=300, deadline=None)
@given(st.lists(clause_st, min_size=0, max_size=40))
def test_solver_matches_brute_force(clauses):
    f = CnfFormula(8, tuple(tuple(c) for c in clauses))
    out = solve(f)
    assert out.is_sat == brute_sat(f)
    if out.is_sat:
        assert f.satisfied_by(out.assignment)


def test_random_3sat_medium():
    rng = random.Random(5)
    for _ in range(20):
        n = 40
        clauses = tuple(tuple(rng.choice([1, -1]) * v for v in rng.sample(range(1, n + 1), 3))
                        for _ in range(int(4.26 * n)))
        f = CnfFormula(n, clauses)
        a = solve(f, seed=0)
        b = solve(f, seed=3)
        assert a.status == b.status


def test_deterministic():
    g = torus_graph(gens_of("K_5"), 5)
    f = encode_k_coloring(g, 5, True)
    a, b = solve(f), solve(f)
    assert a.assignment == b.assignment
    assert a.stats["conflicts"] == b.stats["conflicts"]


# --- decoding and chromatic search ---------------------------------------------

def test_decode_edge():
    out = solve(encode_k_coloring(EDGE, 2))
    col = decode_coloring(2, 2, out)
    assert col.colors[0] != col.colors[1]


def test_decode_lowest_color():
    out = SatOutcome(SAT, (False, True, True, True, False, False))
    assert decode_coloring(2, 3, out).colors == (2, 1)


def test_decode_unsat():
    with pytest.raises(ValueError):
        decode_coloring(1, 1, SatOutcome(UNSAT))


def test_decode_cube_torus():
    g = torus_graph(gens_of("1+1+1+1"), 2)
    col = decode_coloring(16, 2, solve(encode_k_coloring(g, 2)))
    assert is_proper_coloring(g, col)
    # a parity coloring exists, so the solver's must be one up to swapping
    parity = [sum(x) % 2 for x in g.labels]
    assert len({(p, c) for p, c in zip(parity, col.colors)}) == 2


def test_chromatic_number_sat():
    assert chromatic_number_sat(TRIANGLE, 1, 5)[::2] == (3, 2)
    chi, col, unsat_k = chromatic_number_sat(ball_graph(gens_of("K_{3,3}"), 1), 2, 10)
    assert (chi, unsat_k) == (7, 6)
    chi, _, _ = chromatic_number_sat(ball_graph(gens_of("C_3+C_3"), 1), 2, 6)
    assert chi == 3
    chi, _, unsat_k = chromatic_number_sat(TRIANGLE, 3, 3)
    assert unsat_k == 2
    with pytest.raises(ValueError):
        chromatic_number_sat(TRIANGLE, 1, 2)
    with pytest.raises(ValueError):
        chromatic_number_sat(TRIANGLE, 0, 2)


def small_ball_graphs():
    out = []
    for e in catalog():
        g = ball_graph(gens_of(e.symbol), 1)
        if g.vertex_count <= 24:
            out.append(pytest.param(g, id=e.symbol))
    return out


@pytest.mark.parametrize("g", small_ball_graphs())
def test_oracle_equivalence_ball_graphs(g):
    assert chromatic_number_sat(g, 1, 10)[0] == chromatic_number_exact_small(g)


@pytest.mark.parametrize("p", [0.2, 0.5])
def test_oracle_equivalence_random(p):
    rng = random.Random(int(p * 100))
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 16), p)
        chi, col, _ = chromatic_number_sat(g, 1, 16)
        assert chi == chromatic_number_exact_small(g)
        assert is_proper_coloring(g, col)


def test_monotone_and_symmetry_breaking():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 12), 0.5)
        verdicts = []
        for k in range(1, 7):
            plain = solve(encode_k_coloring(g, k)).is_sat
            broken = solve(encode_k_coloring(g, k, True)).is_sat
            assert plain == broken
            verdicts.append(plain)
        assert verdicts == sorted(verdicts)


# --- DIMACS ---------------------------------------------------------------------

def test_dimacs_format():
    assert write_dimacs(CnfFormula(1, ((1,),))) == "p cnf 1 1\n1 0\n"
    assert write_dimacs(CnfFormula(1, ((1,), (-1,)))) == "p cnf 1 2\n1 0\n-1 0\n"
    text = write_dimacs(encode_k_coloring(EDGE, 2))
    assert text.splitlines()[0] == "p cnf 4 4" and len(text.splitlines()) == 5
    assert write_dimacs(CnfFormula(1, ((1,),)), ["hi"]) == "c hi\np cnf 1 1\n1 0\n"


def test_dimacs_roundtrip():
    f = encode_k_coloring(TRIANGLE, 3, True)
    assert read_dimacs(write_dimacs(f)) == f
    with pytest.raises(ValueError):
        read_dimacs("p cnf 2 2\n1 0\n")


def golden_cases():
    cube = ball_graph(generators_of(resolve_entry("1+1+1+1")), 1)
    c3c3 = ball_graph(generators_of(resolve_entry("C_3+C_3")), 1)
    hexa = torus_graph(generators_of(resolve_entry("hexagonal")), 3)
    return [
        ("edge_k2.cnf", lambda: encode_k_coloring(EDGE, 2)),
        ("cube_ball_k2.cnf", lambda: encode_k_coloring(cube, 2)),
        ("c3c3_ball_k2.cnf", lambda: encode_k_coloring(c3c3, 2)),
        ("hexagonal_torus3_k3_sb.cnf", lambda: encode_k_coloring(hexa, 3, True)),
    ]


@pytest.mark.parametrize("name,make", golden_cases(), ids=[c[0] for c in golden_cases()])
def test_golden_dimacs(name, make):
    first = write_dimacs(make()).encode()
    second = write_dimacs(make()).encode()
    assert hashlib.sha256(first).digest() == hashlib.sha256(second).digest()
    assert first == (GOLDEN / name).read_bytes()


def test_solution_roundtrip():
    f = encode_k_coloring(TRIANGLE, 3)
    out = solve(f)
    status, values = read_solution(write_solution(out), f.var_count)
    assert status == SAT and values == out.assignment
    assert read_solution(write_solution(solve(encode_k_coloring(TRIANGLE, 2))), 6) == (UNSAT, None)
