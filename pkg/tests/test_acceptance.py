"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines as they complete.
"""

import random
from itertools import combinations

import pytest

from dehnroots.arithmetic import solve_composite_system, solve_simple_system
from dehnroots.datasets import (
    ConePoint,
    DataSet,
    DataSetType,
    are_equivalent,
    canonical_form,
    equivalence_orbit,
    genus,
    is_valid,
)
from dehnroots.enumeration import root_exists, root_exists_closed_form
from dehnroots.errors import Unconstructible
from dehnroots.homology import (
    enumerate_orthogonal,
    find_square_root,
    multiply,
    psi_twist_a1,
    psi_twist_b,
)
from dehnroots.maxdegree import (
    census_type_b,
    exceptional_table,
    max_degree_bruteforce,
    max_degree_closed_form,
    results_agree,
)
from dehnroots.primary import (
    PrimaryQuery,
    construction_dataset,
    degree3_exists,
    is_primary,
    primary_exists_bruteforce,
    primary_exists_closed_form,
)

from test_arithmetic import brute_force_composite
from test_datasets import random_valid

A, B = DataSetType.A, DataSetType.B


def report(num, text):
    print(f"ACCEPTANCE {num:02d} PASS: {text}")


PRINTED_TABLE = {
    16: (3, 4, [(1, 3), (1, 3)]),
    48: (9, 4, [(1, 3), (1, 3)]),
    64: (15, 2, [(1, 5), (1, 5), (1, 3)]),
    112: (23, 2, [(1, 23), (1, 23), (1, 23)]),
    144: (29, 4, [(1, 29)]),
    192: (45, 2, [(1, 5), (1, 5), (1, 3)]),
    256: (45, 4, [(1, 9), (1, 5)]),
    304: (63, 2, [(1, 63), (1, 63), (1, 7)]),
    336: (69, 2, [(1, 23), (1, 23), (1, 23)]),
    496: (105, 2, [(1, 15), (1, 15), (1, 7)]),
}


def test_01_exceptional_table():
    rows = exceptional_table(500)
    assert [g for g, _ in rows] == sorted(PRINTED_TABLE)
    for g, res in rows:
        n, g0, cones = PRINTED_TABLE[g]
        assert res.n == n, (g, res.n, n)
        printed = DataSet(A, n, g0, 2, 2, tuple(ConePoint(c, o) for c, o in cones))
        assert are_equivalent(res.witness, printed), (g, res.witness)
    report(1, "exceptional table (limit 500): 10 genera, N and witnesses match")


def test_02_case_b_census():
    census = census_type_b(500)
    assert census.case11_count == 59
    assert census.case11_n_eq_g == 31
    assert census.case12_count == 24
    assert census.case12_n_eq_g_plus_1 == (4, 16, 64, 256)
    assert census.case12_remark_max_count == 19
    report(2, "type B census (limit 500): 59/31 case 11, 24/{4,16,64,256}/19 case 12")


def test_03_existence_thresholds():
    for g in range(0, 201):
        assert root_exists(A, g) == root_exists_closed_form(A, g), g
    for gp in range(0, 101):
        assert root_exists(B, gp) == root_exists_closed_form(B, gp), gp
    assert not root_exists(A, 4)
    assert not root_exists(B, 1)
    report(3, "existence thresholds: brute force = closed form (A <= 200, B <= 100)")


def test_04_max_degree_agreement():
    for ds_type, factor in ((A, 1), (B, 2)):
        for g in range(0, 501):
            closed = max_degree_closed_form(ds_type, g)
            brute = max_degree_bruteforce(ds_type, g)
            assert results_agree(closed, brute), (ds_type, g, closed, brute)
            if brute.kind == "exact":
                assert is_valid(brute.witness)
                assert genus(brute.witness) == factor * g
                assert brute.witness.n == brute.n
            if closed.witness is not None:
                assert is_valid(closed.witness)
                assert genus(closed.witness) == factor * g
    report(4, "max degree: closed form and brute force agree for all genera <= 500")


def test_05_lemma_solvers():
    for n1 in range(3, 106, 2):
        for d in range(3, 106, 2):
            if n1 * d > 315:
                continue
            got = solve_composite_system(n1, d)
            expected = brute_force_composite(n1, d)
            assert (got is None) == (expected is None), (n1, d)
            assert (got is None) == (n1 % 3 == 0 and d % 3 != 0), (n1, d)
            if got is not None:
                assert got.check()
    for n in range(3, 1000, 2):
        sol = solve_simple_system(n)
        assert (sol is not None) == (n % 3 != 0), n
        if sol is not None:
            assert sol.check()
    report(5, "lemma solvers match triple-loop brute force (n1*d <= 315) and n mod 3 rule (n <= 999)")


def test_06_primary_boundaries():
    for n in range(3, 14, 2):
        for gp in range(0, 121):
            qa = PrimaryQuery(A, n, gp)
            qb = PrimaryQuery(B, n, gp)
            assert primary_exists_bruteforce(qa) == primary_exists_closed_form(qa), (n, gp)
            assert primary_exists_bruteforce(qb) == primary_exists_closed_form(qb), (n, gp)
        edge = (n - 1) ** 2
        assert not primary_exists_closed_form(PrimaryQuery(A, n, edge))
        for g in range(edge + 1, min(edge + 2 * n, 120) + 1):
            assert primary_exists_closed_form(PrimaryQuery(A, n, g))
        for g in range(0, n):
            assert not primary_exists_closed_form(PrimaryQuery(A, n, g))
        start = (n - 3) * (n - 1) // 2
        exceptional = (n * n - 2 * n - 1) // 2
        if start >= 1:
            assert not primary_exists_closed_form(PrimaryQuery(B, n, start - 1))
        for gp in range(max(start, 1), min(start + 3 * n, 120)):
            expected = not (n % 3 == 0 and gp == exceptional)
            assert primary_exists_closed_form(PrimaryQuery(B, n, gp)) == expected
    report(6, "primary-root thresholds and brute/closed agreement (n <= 13, genus <= 120)")


def test_07_degree3_roots():
    for gp in range(0, 301):
        if root_exists_closed_form(A, gp):
            assert degree3_exists(A, gp), gp
        if root_exists_closed_form(B, gp):
            assert degree3_exists(B, gp), gp
    report(7, "every twist with a nontrivial root has a degree-3 root (genus <= 300)")


def test_08_no_square_roots():
    for g in range(2, 7):
        assert find_square_root(psi_twist_a1(g)) is None, g
    for g in (2, 4, 6, 8):
        assert find_square_root(psi_twist_b(g)) is None, g
    for g in (2, 3, 4):
        a = psi_twist_a1(g)
        for p in enumerate_orthogonal(g):
            if multiply(a, p.transpose()) == p:
                assert p.is_symmetric()
    report(8, "no square roots of twist images (a1: g <= 6, b: even g <= 8); symmetry step holds")


def test_09_construction_validity():
    for ds_type in (A, B):
        for n in range(3, 16, 2):
            for g0 in range(0, 5):
                for m in range(0, 5):
                    if ds_type is A and g0 == 0:
                        continue
                    if ds_type is B and (g0, m) == (0, 0):
                        continue
                    if ds_type is B and m == 1 and n % 3 == 0:
                        with pytest.raises(Unconstructible):
                            construction_dataset(ds_type, n, g0, m)
                        continue
                    ds = construction_dataset(ds_type, n, g0, m)
                    assert is_valid(ds) and is_primary(ds)
                    factor = 1 if ds_type is A else 2
                    assert genus(ds) == factor * g0 * n + m * (n - 1)
    report(9, "construction data sets validate, are primary, and have the formula genus")


def test_10_equivalence_properties():
    rng = random.Random(0xD0DE)
    pool = [random_valid(rng, n_max=45, m_max=4) for _ in range(10_000)]
    canon = {}
    for ds in pool:
        c = canonical_form(ds)
        assert canonical_form(c) == c, ds
        assert are_equivalent(ds, ds)
        canon[ds] = c
    for ds in rng.sample(pool, 600):
        g = genus(ds)
        orbit = equivalence_orbit(ds)
        for member in orbit:
            assert is_valid(member)
            assert genus(member) == g
            assert canonical_form(member) == canon[ds]
    for x, y in combinations(rng.sample(pool, 40), 2):
        if x.type is y.type:
            assert are_equivalent(x, y) == are_equivalent(y, x)
    by_class = {}
    for ds in rng.sample(pool, 2000):
        by_class.setdefault(canon[ds], []).append(ds)
    for members in by_class.values():
        for x, y in combinations(members[:4], 2):
            assert are_equivalent(x, y)
            for z in members[:3]:
                if are_equivalent(x, y) and are_equivalent(y, z):
                    assert are_equivalent(x, z)
    report(10, "equivalence relation, orbit invariants, canonical idempotence on 10^4 samples")
