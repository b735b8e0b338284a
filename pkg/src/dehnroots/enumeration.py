"""Exhaustive generation of valid data sets for a given genus and type.

The stream is deterministic: degrees ascending, then quotient genus g0
ascending, then cone-order multisets in lexicographic order, then residue
tuples in lexicographic order.  Every valid data set of the requested genus
appears exactly once (by field identity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .datasets import ConePoint, DataSet, DataSetType, canonical_form, twist_pairs
from .errors import InvalidInput


@dataclass(frozen=True)
class GenusQuery:
    """A query for data sets: genus g for type A, g' (half genus) for type B."""

    type: DataSetType
    genus_param: int
    degree_filter: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "type", DataSetType(self.type))
        if self.genus_param < 0:
            raise InvalidInput(f"genus parameter must be >= 0, got {self.genus_param}")
        if self.degree_filter is not None and (
            self.degree_filter < 3 or self.degree_filter % 2 == 0
        ):
            raise InvalidInput(f"degree filter must be odd >= 3, got {self.degree_filter}")


@lru_cache(maxsize=4096)
def units(order: int) -> tuple[int, ...]:
    return tuple(c for c in range(1, order) if math.gcd(c, order) == 1)


@lru_cache(maxsize=4096)
def cone_orders(n: int) -> tuple[int, ...]:
    """Divisors of n usable as cone orders (> 1), ascending."""
    return tuple(d for d in range(3, n + 1, 2) if n % d == 0)


def divisor_multisets(n: int, target: int) -> Iterator[tuple[int, ...]]:
    """Non-decreasing tuples of cone orders with sum (n/n_i)(n_i - 1) = target.

    Yielded in lexicographic order; contributions n - n/n_i grow with n_i, so
    the non-decreasing constraint makes each multiset appear once.
    """
    orders = cone_orders(n)

    def rec(prefix: tuple[int, ...], start: int, remaining: int):
        if remaining == 0:
            yield prefix
            return
        for idx in range(start, len(orders)):
            o = orders[idx]
            contrib = n - n // o
            if contrib > remaining:
                break
            yield from rec(prefix + (o,), idx, remaining - contrib)

    yield from rec((), 0, target)


def _cone_tuples_a(orders: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    yield from product(*(units(o) for o in orders))


def _cone_tuples_b(n: int, orders: tuple[int, ...], ab_sum: int) -> Iterator[tuple[int, ...]]:
    """Cone residues for type B: free choices with the last one solved.

    The last residue must satisfy (n/n_m) * c_m = -(ab_sum + partial) mod n,
    which pins c_m modulo n_m; the tuple is kept iff that value is a unit.
    """
    *free, last = orders
    w_last = n // last
    for prefix in product(*(units(o) for o in free)):
        partial = ab_sum + sum((n // o) * c for o, c in zip(free, prefix))
        rhs = (-partial) % n
        if rhs % w_last != 0:
            continue
        c_last = (rhs // w_last) % last
        if math.gcd(c_last, last) == 1:
            yield prefix + (c_last,)


def enumerate_datasets(q: GenusQuery) -> Iterator[DataSet]:
    """Yield every valid data set matching the query, deterministically."""
    if q.type is DataSetType.A:
        target_total = q.genus_param
        degree_cap = q.genus_param
        g0_min, factor = 1, 1
    else:
        target_total = 2 * q.genus_param
        degree_cap = 3 * q.genus_param
        g0_min, factor = 0, 2

    if q.degree_filter is not None:
        degrees = [q.degree_filter] if q.degree_filter <= degree_cap else []
    else:
        degrees = range(3, degree_cap + 1, 2)

    for n in degrees:
        pairs = twist_pairs(n, q.type)
        for g0 in range(g0_min, target_total // (factor * n) + 1):
            remaining = target_total - factor * g0 * n
            for orders in divisor_multisets(n, remaining):
                if q.type is DataSetType.A:
                    for a, b in pairs:
                        for cs in _cone_tuples_a(orders):
                            yield DataSet(
                                q.type, n, g0, a, b,
                                tuple(ConePoint(c, o) for c, o in zip(cs, orders)),
                            )
                else:
                    for a, b in pairs:
                        if not orders:
                            if (a + b) % n == 0:
                                yield DataSet(q.type, n, g0, a, b, ())
                            continue
                        for cs in _cone_tuples_b(n, orders, a + b):
                            yield DataSet(
                                q.type, n, g0, a, b,
                                tuple(ConePoint(c, o) for c, o in zip(cs, orders)),
                            )


def enumerate_classes(q: GenusQuery) -> list[DataSet]:
    """Canonical representatives of the equivalence classes, sorted."""
    reps = {canonical_form(ds) for ds in enumerate_datasets(q)}
    return sorted(reps, key=DataSet.sort_key)


def root_exists(ds_type: DataSetType, genus_param: int) -> bool:
    """Brute-force existence: is the data-set stream nonempty?"""
    if genus_param < 0:
        return False
    q = GenusQuery(DataSetType(ds_type), genus_param)
    return next(enumerate_datasets(q), None) is not None


def root_exists_closed_form(ds_type: DataSetType, genus_param: int) -> bool:
    """Existence thresholds: type A iff g = 3 or g >= 5, type B iff g' >= 2."""
    if DataSetType(ds_type) is DataSetType.A:
        return genus_param == 3 or genus_param >= 5
    return genus_param >= 2
