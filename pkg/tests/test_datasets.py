import math
import random

import pytest

from dehnroots.datasets import (
    ConePoint,
    DataSet,
    DataSetType,
    are_equivalent,
    canonical_form,
    dumps,
    equivalence_orbit,
    from_json_dict,
    genus,
    is_valid,
    loads,
    to_json_dict,
    twist_pairs,
    validate,
)
from dehnroots.errors import InvalidDataSet, TypeMismatch


def ds(t, n, g0, a, b, cones=()):
    return DataSet(DataSetType(t), n, g0, a, b, tuple(ConePoint(c, o) for c, o in cones))


def literal_validate(d):
    """Literal transcription of conditions D1-D4B, kept independent."""
    bad = set()
    if not (d.n > 1 and d.n % 2 == 1):
        bad.add("D1")
    for c, o in d.cones:
        if not (o > 1 and d.n % o == 0):
            bad.add("D1")
    if math.gcd(d.a, d.n) != 1 or math.gcd(d.b, d.n) != 1:
        bad.add("D2")
    for c, o in d.cones:
        if math.gcd(c, o) != 1:
            bad.add("D2")
    if d.type is DataSetType.A:
        if not (d.g0 >= 1 and ((d.b + d.a) % d.n == (d.a * d.b) % d.n
                               or (d.b - d.a) % d.n == (d.a * d.b) % d.n)):
            bad.add("D3A")
    else:
        if (d.b - d.a) % d.n != (d.a * d.b) % d.n:
            bad.add("D3B")
        if all(d.n % o == 0 for _, o in d.cones):
            total = d.a + d.b
            for c, o in d.cones:
                total += (d.n // o) * c
            if total % d.n != 0:
                bad.add("D4B")
    return sorted(bad)


def random_tuple(rng):
    n = rng.randrange(1, 50)
    g0 = rng.randrange(0, 5)
    a = rng.randrange(0, n)
    b = rng.randrange(0, n)
    cones = []
    for _ in range(rng.randrange(0, 4)):
        o = rng.randrange(1, 20)
        cones.append((rng.randrange(0, o), o))
    t = rng.choice(["A", "B"])
    return ds(t, n, g0, a, b, cones)


def random_valid(rng, n_max=45, m_max=4):
    """Draw a uniform-ish valid data set by construction."""
    while True:
        t = DataSetType(rng.choice(["A", "B"]))
        n = rng.randrange(3, n_max + 1, 2)
        pairs = twist_pairs(n, t)
        if not pairs:
            continue
        a, b = rng.choice(pairs)
        g0 = rng.randrange(1, 5) if t is DataSetType.A else rng.randrange(0, 4)
        orders = [o for o in range(3, n + 1, 2) if n % o == 0]
        m = rng.randrange(0, m_max + 1)
        cones = []
        for _ in range(m):
            o = rng.choice(orders)
            c = rng.choice([c for c in range(1, o) if math.gcd(c, o) == 1])
            cones.append((c, o))
        if t is DataSetType.B:
            if g0 == 0 and m == 0:
                continue
            # solve the last cone so the weighted sum vanishes
            if m == 0:
                if (a + b) % n != 0:
                    continue
            else:
                c0, o0 = cones[-1]
                w = n // o0
                rhs = (-(a + b + sum((n // o) * c for c, o in cones[:-1]))) % n
                if rhs % w != 0:
                    continue
                c_last = (rhs // w) % o0
                if math.gcd(c_last, o0) != 1:
                    continue
                cones[-1] = (c_last, o0)
        cand = ds(t, n, g0, a, b, cones)
        if is_valid(cand):
            return cand


def test_validate_examples():
    assert validate(ds("A", 5, 1, 2, 2)).valid
    rep = validate(ds("B", 3, 0, 2, 1, [(1, 3)]))
    assert not rep.valid and rep.violations == ("D4B",)
    rep = validate(ds("A", 4, 1, 1, 1))
    assert not rep.valid and set(rep.violations) == {"D1", "D3A"}


def test_validate_matches_literal_transcription():
    rng = random.Random(20260810)
    for _ in range(10_000):
        d = random_tuple(rng)
        rep = validate(d)
        assert sorted(rep.violations) == literal_validate(d), d
        assert rep.valid == (not rep.violations)


def test_genus_examples():
    assert genus(ds("A", 3, 4, 2, 2, [(1, 3), (1, 3)])) == 16
    assert genus(ds("B", 9, 0, 8, 4, [(2, 3)])) == 6
    assert genus(ds("A", 3, 1, 2, 2)) == 3
    with pytest.raises(InvalidDataSet):
        genus(ds("A", 4, 1, 1, 1))


def test_orbit_examples():
    orbit = equivalence_orbit(ds("A", 3, 1, 2, 2))
    assert ds("A", 3, 1, 2, 1) in orbit
    assert orbit == {ds("A", 3, 1, 2, 2), ds("A", 3, 1, 2, 1)}

    orbit = equivalence_orbit(ds("B", 5, 1, 2, 3))
    assert orbit == {ds("B", 5, 1, 2, 3)}

    orbit = equivalence_orbit(ds("A", 5, 2, 2, 2, [(1, 5)]))
    assert any(cone == ConePoint(4, 5) for d in orbit for cone in d.cones)


def test_type_b_orbit_at_most_two():
    rng = random.Random(7)
    for _ in range(300):
        d = random_valid(rng)
        if d.type is DataSetType.B:
            assert len(equivalence_orbit(d)) <= 2


def test_canonical_examples():
    assert canonical_form(ds("A", 3, 1, 2, 2)) == ds("A", 3, 1, 2, 1)
    assert canonical_form(ds("B", 5, 1, 2, 3)) == ds("B", 5, 1, 2, 3)


def independent_orbit(d):
    """Literal closure under the raw moves, on plain tuples."""
    n = d.n

    def norm(a, b, cones):
        return (a % n, b % n, tuple(sorted((c % o, o) for c, o in cones)))

    start = norm(d.a, d.b, [(c.c, c.order) for c in d.cones])
    seen = {start}
    queue = [start]
    while queue:
        a, b, cones = queue.pop()
        images = []
        if d.type is DataSetType.B:
            images.append(norm(-b, -a, [(-c, o) for c, o in cones]))
        else:
            if (b + a) % n == (a * b) % n:
                images.append(norm(b, a, cones))
            if (b - a) % n == (a * b) % n:
                images.append(norm(-b, -a, cones))
            images.append(norm(a, -b, cones))
            for i in range(len(cones)):
                flipped = list(cones)
                flipped[i] = (-cones[i][0], cones[i][1])
                images.append(norm(a, b, flipped))
        for img in images:
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return seen


def test_orbit_matches_independent_transcription():
    rng = random.Random(515)
    for _ in range(400):
        d = random_valid(rng, m_max=3)
        got = {
            (x.a, x.b, tuple(sorted((c.c, c.order) for c in x.cones)))
            for x in equivalence_orbit(d)
        }
        assert got == independent_orbit(d), d


def test_canonical_is_min_of_orbit():
    rng = random.Random(99)
    for _ in range(400):
        d = random_valid(rng, m_max=3)
        orbit = equivalence_orbit(d)
        assert canonical_form(d) == min(orbit, key=DataSet.sort_key)
        assert canonical_form(canonical_form(d)) == canonical_form(d)


def test_orbit_members_valid_and_same_genus():
    rng = random.Random(4)
    for _ in range(300):
        d = random_valid(rng, m_max=3)
        g = genus(d)
        for member in equivalence_orbit(d):
            assert is_valid(member)
            assert genus(member) == g


def test_are_equivalent_examples():
    assert are_equivalent(ds("A", 3, 1, 2, 2), ds("A", 3, 1, 2, 1))
    assert are_equivalent(
        ds("B", 3, 0, 2, 1, [(1, 3), (2, 3)]),
        ds("B", 3, 0, 2, 1, [(2, 3), (1, 3)]),
    )
    assert not are_equivalent(ds("A", 5, 1, 2, 2), ds("A", 5, 1, 1, 3))
    with pytest.raises(TypeMismatch):
        are_equivalent(ds("A", 3, 1, 2, 2), ds("B", 3, 0, 2, 1, [(1, 3), (2, 3)]))


def test_equivalence_is_equivalence_relation():
    rng = random.Random(11)
    pool = [random_valid(rng, n_max=15, m_max=2) for _ in range(60)]
    for d in pool:
        assert are_equivalent(d, d)
    for x in pool:
        for y in pool:
            if x.type is y.type:
                assert are_equivalent(x, y) == are_equivalent(y, x)
    # transitivity via canonical forms on orbit samples
    for d in pool:
        members = sorted(equivalence_orbit(d), key=DataSet.sort_key)
        for u in members:
            for v in members:
                assert are_equivalent(u, v)


def test_json_round_trip():
    rng = random.Random(2)
    for _ in range(200):
        d = random_valid(rng)
        assert from_json_dict(to_json_dict(d)) == d
        assert loads(dumps(d)) == d
    d = ds("B", 9, 0, 8, 4, [(2, 3)])
    assert to_json_dict(d) == {
        "type": "B", "n": 9, "g0": 0, "a": 8, "b": 4,
        "cones": [{"c": 2, "ni": 3}],
    }


def test_twist_pairs_small():
    assert twist_pairs(3, DataSetType.A) == ((2, 1), (2, 2))
    assert twist_pairs(3, DataSetType.B) == ((2, 1),)
    for n in range(3, 40, 2):
        for a, b in twist_pairs(n, DataSetType.A):
            assert math.gcd(a, n) == 1 and math.gcd(b, n) == 1
            assert (b + a - a * b) % n == 0 or (b - a - a * b) % n == 0
        for a, b in twist_pairs(n, DataSetType.B):
            assert (b - a - a * b) % n == 0
