"""The data-set data model.

A data set ``(n, g0, (a, b); (c_1, n_1), ..., (c_m, n_m))`` is the arithmetic
invariant of a conjugacy class of degree-n roots of a Dehn twist about a
nonseparating circle.  ``n`` is the degree, ``g0`` the quotient-orbifold
genus, ``a, b`` residue classes mod n and each ``(c_i, n_i)`` a cone point:
a residue ``c_i`` mod its order ``n_i``.

Validity conditions (reported by :func:`validate` under these identifiers):

* D1  -- n > 1 odd, every cone order n_i > 1 divides n;
* D2  -- gcd(a, n) = gcd(b, n) = 1 and every gcd(c_i, n_i) = 1;
* D3A -- (type A) g0 >= 1 and b + a = a*b or b - a = a*b (mod n);
* D3B -- (type B) g0 >= 0 and b - a = a*b (mod n);
* D4B -- (type B) a + b + sum_i (n/n_i)*c_i = 0 (mod n).

Type A data sets describe twists whose complement is nonorientable, type B
orientable.  All values are immutable; operations are pure functions.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import InvalidDataSet, InvalidInput, TypeMismatch


class DataSetType(str, Enum):
    A = "A"
    B = "B"


class ConePoint(NamedTuple):
    """A cone point: residue c modulo its order."""

    c: int
    order: int


@dataclass(frozen=True)
class DataSet:
    type: DataSetType
    n: int
    g0: int
    a: int
    b: int
    cones: tuple[ConePoint, ...] = ()

    def __post_init__(self):
        if self.n < 1 or self.g0 < 0:
            raise InvalidInput(f"need n >= 1 and g0 >= 0, got n={self.n}, g0={self.g0}")
        object.__setattr__(self, "type", DataSetType(self.type))
        object.__setattr__(self, "a", self.a % self.n)
        object.__setattr__(self, "b", self.b % self.n)
        cones = []
        for cone in self.cones:
            c, order = cone
            if order < 1:
                raise InvalidInput(f"cone order must be >= 1, got {order}")
            cones.append(ConePoint(c % order, order))
        object.__setattr__(self, "cones", tuple(cones))

    @property
    def m(self) -> int:
        return len(self.cones)

    def sort_key(self):
        """Total order: (n, g0, a, b, cones elementwise by (order, c))."""
        return (
            self.n,
            self.g0,
            self.a,
            self.b,
            tuple((cone.order, cone.c) for cone in self.cones),
        )

    def __str__(self) -> str:
        cones = ",".join(f"({c.c},{c.order})" for c in self.cones)
        return f"{self.type.value}:({self.n},{self.g0},({self.a},{self.b});{cones})"


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[str, ...] = field(default_factory=tuple)


def validate(ds: DataSet) -> ValidationReport:
    """Check conditions D1-D4B and report exactly the violated ones."""
    bad: list[str] = []
    n = ds.n
    if n <= 1 or n % 2 == 0 or any(
        c.order <= 1 or n % c.order != 0 for c in ds.cones
    ):
        bad.append("D1")
    if (
        math.gcd(ds.a, n) != 1
        or math.gcd(ds.b, n) != 1
        or any(math.gcd(c.c, c.order) != 1 for c in ds.cones)
    ):
        bad.append("D2")
    diff = (ds.b - ds.a - ds.a * ds.b) % n
    tot = (ds.b + ds.a - ds.a * ds.b) % n
    if ds.type is DataSetType.A:
        if ds.g0 < 1 or (diff != 0 and tot != 0):
            bad.append("D3A")
    else:
        if diff != 0:
            bad.append("D3B")
        # D4B is well defined only when every cone order divides n; when it
        # is not, D1 already reports the defect.
        if all(n % c.order == 0 for c in ds.cones):
            csum = ds.a + ds.b + sum((n // c.order) * c.c for c in ds.cones)
            if csum % n != 0:
                bad.append("D4B")
    return ValidationReport(not bad, tuple(bad))


def is_valid(ds: DataSet) -> bool:
    return validate(ds).valid


def _require_valid(ds: DataSet) -> None:
    report = validate(ds)
    if not report.valid:
        raise InvalidDataSet(f"{ds} violates {','.join(report.violations)}")


def genus(ds: DataSet) -> int:
    """Data-set genus: g0*n (doubled for type B) plus sum (n/n_i)(n_i - 1)."""
    _require_valid(ds)
    cone_sum = sum((ds.n // c.order) * (c.order - 1) for c in ds.cones)
    factor = 1 if ds.type is DataSetType.A else 2
    return factor * ds.g0 * ds.n + cone_sum


def _sorted_cones(cones: Iterable[ConePoint]) -> tuple[ConePoint, ...]:
    return tuple(sorted(cones, key=lambda c: (c.order, c.c)))


def _normalize(ds: DataSet) -> DataSet:
    return DataSet(ds.type, ds.n, ds.g0, ds.a, ds.b, _sorted_cones(ds.cones))


def _involution(ds: DataSet) -> DataSet:
    """Type B equivalence move: (a, b, c_i) -> (-b, -a, -c_i)."""
    return DataSet(
        ds.type,
        ds.n,
        ds.g0,
        -ds.b,
        -ds.a,
        tuple(ConePoint(-c.c, c.order) for c in ds.cones),
    )


def _pair_orbit_a(n: int, a: int, b: int) -> list[tuple[int, int]]:
    """Closure of (a, b) under the type A moves that touch only a and b.

    Moves: swap a and b (only when b + a = a*b mod n), replace (a, b) by
    (-b, -a) (only when b - a = a*b mod n), and negate b (always).
    """
    seen = {(a, b)}
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        images = [(x, (-y) % n)]
        if (y + x - x * y) % n == 0:
            images.append((y, x))
        if (y - x - x * y) % n == 0:
            images.append(((-y) % n, (-x) % n))
        for img in images:
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return sorted(seen)


def equivalence_orbit(ds: DataSet) -> set[DataSet]:
    """All data sets equivalent to ds, in cone-sorted normalized form.

    Type B orbits are generated by a single involution; type A orbits by the
    (a, b) moves together with independent sign flips of each cone residue.
    Cone reordering is normalized away by sorting, so it never enlarges the
    orbit.  Orbit size is O(2^m) for type A; keep m small before calling.
    """
    _require_valid(ds)
    base = _normalize(ds)
    if ds.type is DataSetType.B:
        return {base, _normalize(_involution(base))}
    cone_patterns = {base.cones}
    stack = [base.cones]
    while stack:
        cones = stack.pop()
        for i in range(len(cones)):
            flipped = list(cones)
            flipped[i] = ConePoint((-cones[i].c) % cones[i].order, cones[i].order)
            key = _sorted_cones(flipped)
            if key not in cone_patterns:
                cone_patterns.add(key)
                stack.append(key)
    return {
        DataSet(ds.type, ds.n, ds.g0, a, b, cones)
        for a, b in _pair_orbit_a(ds.n, ds.a, ds.b)
        for cones in cone_patterns
    }


def canonical_form(ds: DataSet) -> DataSet:
    """The minimal orbit member under the total order of ``DataSet.sort_key``.

    Computed without materializing the orbit: the (a, b) part and each cone
    sign are independent search directions, so the minimum factors.
    """
    _require_valid(ds)
    if ds.type is DataSetType.B:
        return min(
            (_normalize(ds), _normalize(_involution(ds))), key=DataSet.sort_key
        )
    a, b = min(_pair_orbit_a(ds.n, ds.a, ds.b))
    cones = _sorted_cones(
        ConePoint(min(c.c, (-c.c) % c.order), c.order) for c in ds.cones
    )
    return DataSet(ds.type, ds.n, ds.g0, a, b, cones)


def are_equivalent(x: DataSet, y: DataSet) -> bool:
    """True iff x and y lie in the same equivalence class.

    An invalid data set is equivalent to nothing (no orbit), so the answer
    is False whenever either input fails validation.
    """
    if x.type is not y.type:
        raise TypeMismatch(f"cannot compare types {x.type.value} and {y.type.value}")
    if not is_valid(x) or not is_valid(y):
        return False
    return canonical_form(x) == canonical_form(y)


@lru_cache(maxsize=4096)
def twist_pairs(n: int, ds_type: DataSetType) -> tuple[tuple[int, int], ...]:
    """All valid (a, b) residue pairs mod n for the given type, sorted.

    For each unit a there is at most one b per sign branch: b*(1 - a) = -a
    (plus branch, type A only) or b*(1 - a) = a (minus branch, both types),
    solvable only when 1 - a is a unit.
    """
    pairs = []
    for a in range(1, n):
        if math.gcd(a, n) != 1:
            continue
        t = (1 - a) % n
        if math.gcd(t, n) != 1:
            continue
        t_inv = pow(t, -1, n)
        branches = [a * t_inv % n]  # b - a = a*b
        if ds_type is DataSetType.A:
            branches.append(-a * t_inv % n)  # b + a = a*b
        for b in branches:
            if math.gcd(b, n) == 1:
                pairs.append((a, b))
    return tuple(sorted(set(pairs)))


def to_json_dict(ds: DataSet) -> dict:
    return {
        "type": ds.type.value,
        "n": ds.n,
        "g0": ds.g0,
        "a": ds.a,
        "b": ds.b,
        "cones": [{"c": c.c, "ni": c.order} for c in ds.cones],
    }


def from_json_dict(data: dict) -> DataSet:
    return DataSet(
        DataSetType(data["type"]),
        data["n"],
        data["g0"],
        data["a"],
        data["b"],
        tuple(ConePoint(c["c"], c["ni"]) for c in data["cones"]),
    )


def dumps(ds: DataSet) -> str:
    return json.dumps(to_json_dict(ds), separators=(",", ":"))


def loads(text: str) -> DataSet:
    return from_json_dict(json.loads(text))
