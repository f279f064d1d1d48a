import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import gens_of, random_unimodular
from voronoi_chi.linalg import matvec
from voronoi_chi.qform import QuadraticForm, build_form, catalog, ray_matrix
from voronoi_chi.voronoi import (GeneratorSet, canonical_sign, short_vectors,
                                 strict_voronoi_vectors, verify_catalog_vectors)
from voronoi_chi.qform import CatalogEntry


def brute_force_strict(q, box=3):
    """Coset minima by scanning a box; independent of the enumeration code."""
    n = q.n
    best = {}
    for x in itertools.product(range(-box, box + 1), repeat=n):
        parity = tuple(c % 2 for c in x)
        if not any(parity):
            continue
        val = q(x)
        cur = best.get(parity)
        if cur is None or val < cur[0]:
            best[parity] = (val, [x])
        elif val == cur[0]:
            cur[1].append(x)
    return {canonical_sign(m[0]) for _, m in best.values() if len(m) == 2}


def test_identity():
    s = strict_voronoi_vectors(build_form([1, 2, 3, 4]))
    assert set(s.vectors) == {(0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)}


def test_k5_form():
    s = strict_voronoi_vectors(build_form(range(1, 11)))
    assert len(s.expanded()) == 30
    assert (1, -1, 0, 0) not in s.vectors  # v9 absent for K_5


def test_444_form():
    s = strict_voronoi_vectors(build_form([11]))
    expected = {(0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (0, 1, 0, 1), (0, 1, 1, 0),
                (0, 1, 1, 1), (1, -1, 0, 0), (1, 0, 0, 0), (1, 0, 0, 1), (1, 0, 1, 0),
                (1, 0, 1, 1), (1, 1, 1, 1)}
    assert set(s.vectors) == expected


def test_not_positive_definite():
    with pytest.raises(ValueError):
        strict_voronoi_vectors(ray_matrix(1))


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.symbol)
def test_matches_brute_force(entry):
    assert set(strict_voronoi_vectors(entry.form).vectors) == brute_force_strict(entry.form)


def test_short_vectors_brute_force():
    q = build_form([11])
    got = set(short_vectors(q, 8))
    want = {x for x in itertools.product(range(-4, 5), repeat=4) if q(x) <= 8}
    assert got == want


def test_low_dimensional_counts():
    hexagonal = QuadraticForm(((2, -1), (-1, 2)))
    assert len(strict_voronoi_vectors(hexagonal).expanded()) == 6
    assert len(strict_voronoi_vectors(QuadraticForm(((1, 0), (0, 1)))).expanded()) == 4
    bcc = QuadraticForm(((3, -1, -1), (-1, 3, -1), (-1, -1, 3)))
    assert len(strict_voronoi_vectors(bcc).expanded()) == 14
    fcc = QuadraticForm(((2, -1, 0), (-1, 2, -1), (0, -1, 2)))
    assert len(strict_voronoi_vectors(fcc).expanded()) == 12


def test_verify_catalog():
    report = verify_catalog_vectors()
    assert report.match_count == 52 and not report.mismatches


def test_single_entry_report():
    entry = next(e for e in catalog() if e.symbol == "K_5-1")
    report = verify_catalog_vectors([entry])
    assert report.match_count == 1
    assert len(report.checks[0].computed) == 14


def test_corrupted_entry_is_reported():
    entry = next(e for e in catalog() if e.symbol == "K_5")
    bad = CatalogEntry(**{**entry.__dict__, "expected_voronoi": entry.expected_voronoi[:-1]})
    report = verify_catalog_vectors([entry, bad])
    assert report.match_count == 1 and len(report.mismatches) == 1


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.symbol)
def test_bounded_window(entry):
    q = entry.form
    for v in gens_of(entry.symbol).vectors:
        for w in itertools.product(range(-2, 3), repeat=4):
            other = q(tuple(a + 2 * b for a, b in zip(v, w)))
            if not any(w) or w == tuple(-x for x in v):
                assert other == q(v)
            else:
                assert q(v) < other


@pytest.mark.parametrize("k", [2, 3, 7])
def test_scaling_invariance(k):
    for entry in catalog()[::5]:
        assert strict_voronoi_vectors(entry.form.scaled(k)) == gens_of(entry.symbol)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(catalog()), st.integers(0, 2**32))
def test_unimodular_equivariance(entry, seed):
    a = random_unimodular(random.Random(seed), 4)
    moved = strict_voronoi_vectors(entry.form.transform(a))
    # A maps the vectors of A^T Q A back onto those of Q
    back = {canonical_sign(matvec(a, v)) for v in moved.vectors}
    assert back == set(gens_of(entry.symbol).vectors)


def test_generator_set_invariants():
    with pytest.raises(ValueError):
        GeneratorSet(2, ((1, 0), (-1, 0)))
    with pytest.raises(ValueError):
        GeneratorSet(2, ((0, 0),))
    s = GeneratorSet(2, ((0, -1), (1, 1)))
    assert s.vectors == ((0, 1), (1, 1))
    assert set(s.expanded()) == {(0, 1), (0, -1), (1, 1), (-1, -1)}
