"""Primary data sets: every cone order equals the degree.

For a fixed odd degree n the possible genera of primary data sets follow a
two-parameter arithmetic progression (quotient genus g0 and cone count m),
so existence has a clean closed form; a residue-level search provides the
matching brute force.  The explicit construction families used to realize
roots geometrically are generated and validated here as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .datasets import (
    ConePoint,
    DataSet,
    DataSetType,
    is_valid,
    twist_pairs,
    validate,
)
from .enumeration import GenusQuery, enumerate_datasets, units
from .errors import InvalidDataSet, InvalidInput, Unconstructible


@dataclass(frozen=True)
class PrimaryQuery:
    type: DataSetType
    n: int
    genus_param: int

    def __post_init__(self):
        object.__setattr__(self, "type", DataSetType(self.type))
        if self.n < 3 or self.n % 2 == 0:
            raise InvalidInput(f"degree must be odd and >= 3, got {self.n}")
        if self.genus_param < 0:
            raise InvalidInput(f"genus parameter must be >= 0, got {self.genus_param}")


def is_primary(ds: DataSet) -> bool:
    """True iff every cone order equals the degree."""
    report = validate(ds)
    if not report.valid:
        raise InvalidDataSet(f"{ds} violates {','.join(report.violations)}")
    return all(c.order == ds.n for c in ds.cones)


def _shapes(q: PrimaryQuery) -> list[tuple[int, int]]:
    """(g0, m) pairs solving the primary genus equation for the query."""
    n = q.n
    shapes = []
    if q.type is DataSetType.A:
        # g = g0*n + m*(n-1), g0 >= 1
        for m in range(q.genus_param // (n - 1) + 1):
            rest = q.genus_param - m * (n - 1)
            if rest > 0 and rest % n == 0:
                shapes.append((rest // n, m))
    else:
        # g' = g0*n + m*(n-1)/2, g0 >= 0, (g0, m) != (0, 0)
        half = (n - 1) // 2
        for m in range(q.genus_param // half + 1):
            rest = q.genus_param - m * half
            if rest % n == 0 and (rest > 0 or m > 0):
                shapes.append((rest // n, m))
    return shapes


def primary_exists_closed_form(q: PrimaryQuery) -> bool:
    """Existence of a primary data set via the genus progression.

    Type B excludes the single-cone shape when 3 divides the degree (the
    corresponding congruence system is unsolvable) and the empty shape
    (g0, m) = (0, 0).
    """
    shapes = _shapes(q)
    if q.type is DataSetType.A:
        return bool(shapes)
    return any(not (m == 1 and q.n % 3 == 0) for _, m in shapes)


def primary_exists_bruteforce(q: PrimaryQuery) -> bool:
    """Residue-level search over all primary data sets of the given shape.

    Streams candidate residue tuples (for type B the last cone residue is
    pinned by the weighted-sum condition) and validates each constructed
    data set, stopping at the first valid one.
    """
    n = q.n
    pairs = twist_pairs(n, q.type)
    for g0, m in _shapes(q):
        for a, b in pairs:
            if q.type is DataSetType.A:
                for cs in product(units(n), repeat=m):
                    cand = DataSet(q.type, n, g0, a, b, tuple(ConePoint(c, n) for c in cs))
                    if is_valid(cand):
                        return True
                continue
            if m == 0:
                if is_valid(DataSet(q.type, n, g0, a, b)):
                    return True
                continue
            for prefix in product(units(n), repeat=m - 1):
                c_last = (-(a + b + sum(prefix))) % n
                if math.gcd(c_last, n) != 1:
                    continue
                cand = DataSet(
                    q.type, n, g0, a, b,
                    tuple(ConePoint(c, n) for c in prefix + (c_last,)),
                )
                if is_valid(cand):
                    return True
    return False


def degree3_exists(ds_type: DataSetType, genus_param: int) -> bool:
    """Does any valid data set of degree 3 exist at this genus?"""
    if genus_param < 0:
        return False
    q = GenusQuery(DataSetType(ds_type), genus_param, degree_filter=3)
    return next(enumerate_datasets(q), None) is not None


def construction_dataset(ds_type: DataSetType, n: int, g0: int, m: int) -> DataSet:
    """The standard explicitly-realizable primary data set of the given shape.

    Type A: (n, g0, (2, 2); (4, n) repeated m times), g0 >= 1.
    Type B: (2, -2) with cone residues alternating (-4, 4, ...) for even m,
    the same prefix followed by (2, 2) for odd m >= 3, and the single cone
    ((n+3)/2, n) with (a, b) = ((n+3)/2, -3) for m = 1.  The m = 1 shape
    needs 3 to not divide n; otherwise it raises Unconstructible.
    """
    ds_type = DataSetType(ds_type)
    if n < 3 or n % 2 == 0:
        raise InvalidInput(f"degree must be odd and >= 3, got {n}")
    if m < 0:
        raise InvalidInput(f"cone count must be >= 0, got {m}")
    if ds_type is DataSetType.A:
        if g0 < 1:
            raise InvalidInput(f"type A needs g0 >= 1, got {g0}")
        ds = DataSet(ds_type, n, g0, 2, 2, tuple(ConePoint(4, n) for _ in range(m)))
    else:
        if g0 < 0:
            raise InvalidInput(f"type B needs g0 >= 0, got {g0}")
        if g0 == 0 and m == 0:
            raise InvalidInput("type B with g0 = 0 and no cones has genus 0")
        if m == 1:
            if n % 3 == 0:
                raise Unconstructible(
                    f"no single-cone primary data set of degree {n} (3 divides it)"
                )
            half = (n + 3) // 2
            ds = DataSet(ds_type, n, g0, half, -3, (ConePoint(half, n),))
        else:
            if m % 2 == 0:
                cs = [-4 if i % 2 == 0 else 4 for i in range(m)]
            else:
                cs = [-4 if i % 2 == 0 else 4 for i in range(m - 2)] + [2, 2]
            ds = DataSet(ds_type, n, g0, 2, -2, tuple(ConePoint(c, n) for c in cs))
    assert is_valid(ds) and is_primary(ds)
    return ds
