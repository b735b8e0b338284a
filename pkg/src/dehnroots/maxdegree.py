"""Maximal root degree N per genus: brute force and closed-form case analyses.

The brute force scans candidate degrees downward and decides, for each
(degree, quotient genus, cone-order multiset), whether residues satisfying
the data-set conditions exist.

For type A the residues (2, 2) with all cone residues 1 always work, so
existence is a pure coin problem on the cone contributions ``n - n/n_i``.

For type B the weighted cone sum must hit ``-(a+b)`` for some valid residue
pair (a, b).  Working prime by prime (the cone residues decompose by CRT),
the reachable sums modulo ``p^e`` form a valuation shell: with ``j_i = e -
v_p(n_i)`` over the cones divisible by p, the sum-set is exactly ``{x :
v_p(x) = min j_i}`` when the minimum is attained once and ``{x : v_p(x) >=
min j_i}`` otherwise (sums of two units cover every residue mod an odd
prime power).  Feasibility is thus a finite check against the valuation
profiles of the available ``-(a+b)`` values; the tests cross-validate this
against direct residue search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arithmetic import divisors, is_prime, prime_factorization
from .datasets import ConePoint, DataSet, DataSetType, twist_pairs
from .enumeration import divisor_multisets, units
from .errors import InvalidInput

GENUS_CAP = 2000


@dataclass(frozen=True)
class MaxDegreeResult:
    """Exact value or bounds for the maximal degree at one genus.

    kind is "exact", "bounds" or "noroot".  For "exact", n holds the value
    (lower = upper = n); for "bounds", lower <= N <= upper.  witness, when
    present, is a valid data set of degree n (or lower).  oracle_n carries
    the brute-force value when a bounds result has been resolved against it.
    """

    kind: str
    case_id: str
    n: int | None = None
    lower: int | None = None
    upper: int | None = None
    witness: DataSet | None = None
    oracle_n: int | None = None

    def describe(self) -> str:
        if self.kind == "noroot":
            return "no nontrivial root"
        if self.kind == "exact":
            return f"N = {self.n} [case {self.case_id}]"
        extra = f", oracle N = {self.oracle_n}" if self.oracle_n is not None else ""
        return f"{self.lower} <= N <= {self.upper} [case {self.case_id}{extra}]"


def _exact(case_id: str, n: int, witness: DataSet | None) -> MaxDegreeResult:
    return MaxDegreeResult("exact", case_id, n=n, lower=n, upper=n, witness=witness)


def _bounds(case_id: str, lower: int, upper: int, witness: DataSet | None) -> MaxDegreeResult:
    return MaxDegreeResult("bounds", case_id, lower=lower, upper=upper, witness=witness)


_NOROOT = MaxDegreeResult("noroot", "none")


def _check_genus(genus_param: int) -> None:
    if genus_param > GENUS_CAP:
        raise InvalidInput(f"genus {genus_param} exceeds the supported cap {GENUS_CAP}")


def _v2(x: int) -> int:
    return (x & -x).bit_length() - 1


def _odd_part(x: int) -> int:
    return x >> _v2(x)


# ---------------------------------------------------------------------------
# type A brute force
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _coin_orders(n: int) -> tuple[int, ...]:
    """Cone orders of n sorted by contribution n - n/order (ascending)."""
    return tuple(o for o in divisors(n) if o > 1)


@lru_cache(maxsize=None)
def _reach_bits(n: int) -> int:
    """Bitset of sums of cone contributions (unbounded multisets), up to cap."""
    mask = (1 << (GENUS_CAP + 1)) - 1
    reach = 1
    for o in _coin_orders(n):
        coin = n - n // o
        prev = 0
        while prev != reach:
            prev = reach
            reach = (reach | (reach << coin)) & mask
    return reach


def _multiset_key(orders: tuple[int, ...]):
    return (max(orders) if orders else 0, orders)


def _witness_a(n: int, g0: int, target: int) -> DataSet:
    orders = min(divisor_multisets(n, target), key=_multiset_key)
    return DataSet(
        DataSetType.A, n, g0, 2, 2, tuple(ConePoint(1, o) for o in orders)
    )


def _max_degree_a(g: int) -> MaxDegreeResult:
    for n in range(g - (1 - g % 2), 2, -2):
        reach = _reach_bits(n)
        for g0 in range(g // n, 0, -1):
            if (reach >> (g - g0 * n)) & 1:
                return _exact("oracle", n, _witness_a(n, g0, g - g0 * n))
    return _NOROOT


# ---------------------------------------------------------------------------
# type B brute force: valuation-shell feasibility
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _prime_powers(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple((p, e, p**e) for p, e in prime_factorization(n))


def _vcap(x: int, p: int, pe: int, e: int) -> int:
    """Valuation of the residue class of x mod p^e, capped at e."""
    x %= pe
    if x == 0:
        return e
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


@lru_cache(maxsize=4096)
def _pair_profiles(n: int):
    """Valid (a, b) pairs with s = -(a+b) and its valuation profile."""
    pps = _prime_powers(n)
    rows = []
    profiles = set()
    for a, b in twist_pairs(n, DataSetType.B):
        s = (-(a + b)) % n
        prof = tuple(_vcap(s, p, pe, e) for p, e, pe in pps)
        rows.append((a, b, s, prof))
        profiles.add(prof)
    return tuple(rows), frozenset(profiles)


def _shell_conditions(n: int, orders: tuple[int, ...]) -> tuple[tuple[bool, int], ...]:
    """Per prime power of n: (exact?, j) constraining v_p of the cone sum."""
    conds = []
    for p, e, _ in _prime_powers(n):
        js = sorted(
            e - next(ee for pp, ee in prime_factorization(o) if pp == p)
            for o in orders
            if o % p == 0
        )
        if not js:
            conds.append((False, e))
        elif len(js) >= 2 and js[0] == js[1]:
            conds.append((False, js[0]))
        else:
            conds.append((True, js[0]))
    return tuple(conds)


def _profile_matches(prof: tuple[int, ...], conds) -> bool:
    for v, (exact, j) in zip(prof, conds):
        if exact:
            if v != j:
                return False
        elif v < j:
            return False
    return True


@lru_cache(maxsize=None)
def _config_feasible(n: int, orders: tuple[int, ...]) -> bool:
    """Does any valid (a, b) make the weighted cone sum close up to 0 mod n?"""
    conds = _shell_conditions(n, orders)
    _, profiles = _pair_profiles(n)
    return any(_profile_matches(prof, conds) for prof in profiles)


def _residue_in_shell(n: int, orders: tuple[int, ...], t: int) -> bool:
    conds = _shell_conditions(n, orders)
    pps = _prime_powers(n)
    prof = tuple(_vcap(t, p, pe, e) for p, e, pe in pps)
    return _profile_matches(prof, conds)


def _solve_cones(n: int, orders: tuple[int, ...], target: int) -> tuple[int, ...] | None:
    """Unit residues c_i with sum (n/n_i) c_i = target (mod n), else None."""
    if not orders:
        return () if target % n == 0 else None
    if len(orders) == 1:
        o = orders[0]
        w = n // o
        if target % w != 0:
            return None
        c = (target // w) % o
        return (c,) if math.gcd(c, o) == 1 else None
    o = orders[0]
    w = n // o
    for c in units(o):
        rest = (target - w * c) % n
        if _residue_in_shell(n, orders[1:], rest):
            sub = _solve_cones(n, orders[1:], rest)
            if sub is not None:
                return (c,) + sub
    return None


def _witness_b(n: int, g0: int, orders: tuple[int, ...]) -> DataSet:
    conds = _shell_conditions(n, orders)
    rows, _ = _pair_profiles(n)
    for a, b, s, prof in rows:
        if _profile_matches(prof, conds):
            cs = _solve_cones(n, orders, s)
            if cs is not None:
                return DataSet(
                    DataSetType.B, n, g0, a, b,
                    tuple(ConePoint(c, o) for c, o in zip(cs, orders)),
                )
    raise AssertionError(f"feasible configuration ({n}, {orders}) has no witness")


def _max_degree_b(gp: int) -> MaxDegreeResult:
    cap = 3 * gp
    for n in range(cap - (1 - cap % 2), 2, -2):
        for g0 in range(gp // n, -1, -1):
            target = 2 * (gp - g0 * n)
            feasible = [
                orders
                for orders in divisor_multisets(n, target)
                if _config_feasible(n, orders)
            ]
            if feasible:
                orders = min(feasible, key=_multiset_key)
                return _exact("oracle", n, _witness_b(n, g0, orders))
    return _NOROOT


@lru_cache(maxsize=None)
def max_degree_bruteforce(ds_type: DataSetType, genus_param: int) -> MaxDegreeResult:
    """Exact maximal degree with a witness, by downward degree scan."""
    _check_genus(genus_param)
    if genus_param < 0:
        return _NOROOT
    if DataSetType(ds_type) is DataSetType.A:
        return _max_degree_a(genus_param)
    return _max_degree_b(genus_param)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _closed_a(g: int) -> MaxDegreeResult:
    if not (g == 3 or g >= 5):
        return _NOROOT
    if g % 2 == 1:
        return _exact("A1", g, DataSet(DataSetType.A, g, 1, 2, 2))
    v = _v2(g)
    k = _odd_part(g)
    if v % 2 == 1:
        n1 = (2**v + 1) // 3
        n = n1 * k
        cones = () if n1 == 1 else (ConePoint(1, n1),)
        return _exact("A2", n, DataSet(DataSetType.A, n, 2, 2, 2, cones))
    k1_candidates = [d for d in divisors(k) if d % 3 == 2]
    if k1_candidates:
        k1 = min(k1_candidates)
        n1 = (2**v * k1 + 1) // 3
        n = n1 * (k // k1)
        return _exact(
            "A3", n, DataSet(DataSetType.A, n, 2, 2, 2, (ConePoint(1, n1),))
        )
    best = None
    for kk in range(1, g // 3 + 1, 2):
        total = g + kk
        for k1 in divisors(total):
            # only k1 = 3 (mod 8) gives an odd degree and a cone order > 1
            if k1 % 8 != 3 or k1 < 11:
                continue
            n1 = (k1 + 1) // 4
            n = n1 * (total // k1)
            if n % kk != 0 or n // kk <= 1:
                continue
            if best is None or n > best[0]:
                best = (n, n1, n // kk)
    if best is not None:
        n, n1, n2 = best
        witness = DataSet(
            DataSetType.A, n, 2, 2, 2, (ConePoint(1, n1), ConePoint(1, n2))
        )
        return _bounds("A4", n, (g - 1) // 3, witness)
    if v == 2:
        return _exact("A5", k, DataSet(DataSetType.A, k, 4, 2, 2))
    if g % 6 == 4:
        n = (g + 2) // 6
        witness = DataSet(
            DataSetType.A, n, 4, 2, 2, (ConePoint(1, n), ConePoint(1, n))
        )
    else:
        # remaining case: g = 0 (mod 6) with even 2-valuation >= 4
        assert g % 6 == 0, g
        k3 = k // 3
        n = (2 ** (v - 1) + 1) * k3
        nu = n // (3 * k3)
        witness = DataSet(
            DataSetType.A, n, 4, 2, 2, (ConePoint(1, nu), ConePoint(1, nu))
        )
    return _bounds("A6", n, (g - 1) // 4, witness)


def _single_cone_dataset(n1: int, d: int) -> DataSet:
    """Type B data set (n1*d, 0, (a, b); (c1, n1)) from the system solvers."""
    from .arithmetic import solve_composite_system, solve_simple_system

    sol = solve_simple_system(n1) if d == 1 else solve_composite_system(n1, d)
    assert sol is not None, (n1, d)
    return DataSet(
        DataSetType.B,
        n1 * d,
        0,
        sol.a.value,
        sol.b.value,
        (ConePoint(sol.c1.value, n1),),
    )


def _closed_b(gp: int) -> MaxDegreeResult:
    if gp < 2:
        return _NOROOT
    v = _v2(gp)
    q = _odd_part(gp)
    odd = v == 0
    if odd and gp % 3 == 0:
        return _exact("B1", 3 * gp, _single_cone_dataset(3, gp))
    if v == 1:
        return _exact("B2", 5 * (gp // 2), _single_cone_dataset(5, gp // 2))
    if v == 2 and gp % 3 == 0:
        return _exact("B3", 9 * (gp // 4), _single_cone_dataset(9, gp // 4))
    if odd and gp % 5 == 0:
        return _exact("B4", 11 * (gp // 5), _single_cone_dataset(11, gp // 5))
    if v == 3:
        return _exact("B5", 17 * (gp // 8), _single_cone_dataset(17, gp // 8))
    if odd and gp % 11 == 0:
        return _exact("B6", 23 * (gp // 11), _single_cone_dataset(23, gp // 11))
    if v == 4 and gp % 3 == 0:
        return _exact("B7", 33 * (gp // 16), _single_cone_dataset(33, gp // 16))
    if odd and gp % 17 == 0:
        return _exact("B8", 35 * (gp // 17), _single_cone_dataset(35, gp // 17))
    upper = 41 * gp // 20
    if gp % 3 == 0:
        choices = [t for t in divisors(q // 3) if (2**v * t) % 3 == 1]
        if choices:
            t = min(choices)
            ell = 2**v * t
            kk = (q // 3) // t
            lower = (2 * ell + 1) * 3 * kk
            return _bounds("B9", lower, upper, _single_cone_dataset(2 * ell + 1, 3 * kk))
    choices = [t for t in divisors(q) if (2**v * t) % 3 == 2]
    if choices:
        if is_prime(gp):
            return _exact("B10", 2 * gp + 1, _single_cone_dataset(2 * gp + 1, 1))
        t = min(choices)
        ell = 2**v * t
        kk = q // t
        lower = (2 * ell + 1) * kk
        return _bounds("B10", lower, upper, _single_cone_dataset(2 * ell + 1, kk))
    upper = 5 * gp // 4
    if gp % 6 == 1:
        witness = DataSet(DataSetType.B, gp, 1, 2, -2)
        return _bounds("B11", gp, upper, witness)
    assert gp % 12 == 4, gp
    n = gp + 1
    witness = DataSet(
        DataSetType.B, n, 0, 2, -2, (ConePoint(1, n), ConePoint(-1, n))
    )
    return _bounds("B12", gp + 1, upper, witness)


def max_degree_closed_form(
    ds_type: DataSetType, genus_param: int, resolve: bool = False
) -> MaxDegreeResult:
    """Case analysis for the maximal degree; exact or bounds per case.

    With ``resolve=True``, bounds results get the brute-force value attached
    as ``oracle_n``.
    """
    if genus_param < 0:
        return _NOROOT
    if DataSetType(ds_type) is DataSetType.A:
        result = _closed_a(genus_param)
    else:
        result = _closed_b(genus_param)
    if resolve and result.kind == "bounds":
        oracle = max_degree_bruteforce(DataSetType(ds_type), genus_param)
        result = MaxDegreeResult(
            result.kind,
            result.case_id,
            n=result.n,
            lower=result.lower,
            upper=result.upper,
            witness=result.witness,
            oracle_n=oracle.n,
        )
    return result


def results_agree(closed: MaxDegreeResult, brute: MaxDegreeResult) -> bool:
    """Exact cases must match; bounds cases must bracket the brute value."""
    if closed.kind == "noroot" or brute.kind == "noroot":
        return closed.kind == brute.kind
    if closed.kind == "exact":
        return brute.n == closed.n
    return closed.lower <= brute.n <= closed.upper


# ---------------------------------------------------------------------------
# censuses
# ---------------------------------------------------------------------------

def _chunks(lo: int, hi: int, jobs: int) -> list[tuple[int, int]]:
    span = hi - lo + 1
    size = max(1, -(-span // jobs))
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def _exceptional_rows(bounds: tuple[int, int]) -> list[tuple[int, MaxDegreeResult]]:
    lo, hi = bounds
    rows = []
    for g in range(lo, hi + 1):
        brute = max_degree_bruteforce(DataSetType.A, g)
        if brute.kind == "exact" and 4 * brute.n < g:
            closed = max_degree_closed_form(DataSetType.A, g)
            rows.append(
                (g, MaxDegreeResult("exact", closed.case_id, n=brute.n,
                                    lower=brute.n, upper=brute.n,
                                    witness=brute.witness))
            )
    return rows


def exceptional_table(limit: int, jobs: int = 1) -> list[tuple[int, MaxDegreeResult]]:
    """Type A genera g <= limit whose maximal degree satisfies N < g/4.

    Each row carries the brute-force exact N and witness, labelled with the
    closed-form case that the genus falls into.  With jobs > 1 the genus
    range fans out over worker processes; rows merge back genus-ascending.
    """
    if limit > GENUS_CAP:
        raise InvalidInput(f"limit {limit} exceeds the supported cap {GENUS_CAP}")
    if jobs <= 1:
        return _exceptional_rows((3, limit))
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_exceptional_rows, _chunks(3, limit, jobs))
    return [row for part in parts for row in part]


@dataclass(frozen=True)
class CensusB:
    """Counts for the two bounds-only cases of the type B analysis."""

    limit: int
    case11_count: int
    case11_n_eq_g: int
    case12_count: int
    case12_n_eq_g_plus_1: tuple[int, ...]
    case12_remark_max_count: int


def _census_counts(bounds: tuple[int, int]) -> tuple[int, int, int, tuple[int, ...], int]:
    lo, hi = bounds
    case11 = case11_eq = case12 = remark_max = 0
    n_eq_gp1: list[int] = []
    for gp in range(lo, hi + 1):
        closed = _closed_b(gp)
        if closed.case_id == "B11":
            case11 += 1
            if max_degree_bruteforce(DataSetType.B, gp).n == gp:
                case11_eq += 1
        elif closed.case_id == "B12":
            case12 += 1
            n = max_degree_bruteforce(DataSetType.B, gp).n
            if n == gp + 1:
                n_eq_gp1.append(gp)
            elif n == (2 ** _v2(gp) + 1) * _odd_part(gp):
                remark_max += 1
    return case11, case11_eq, case12, tuple(n_eq_gp1), remark_max


def census_type_b(limit: int, jobs: int = 1) -> CensusB:
    """Census of cases B11 and B12 for g' <= limit.

    Reports how many B11 genera attain only the minimal degree N = g', which
    B12 genera have N = g' + 1, and for how many B12 genera the two-cone
    data set of degree (2^l + 1) * oddpart(g') is maximal (with N > g' + 1).
    """
    if limit > GENUS_CAP:
        raise InvalidInput(f"limit {limit} exceeds the supported cap {GENUS_CAP}")
    if jobs <= 1:
        parts = [_census_counts((2, limit))]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_census_counts, _chunks(2, limit, jobs)))
    n_eq: list[int] = []
    for part in parts:
        n_eq.extend(part[3])
    return CensusB(
        limit,
        sum(p[0] for p in parts),
        sum(p[1] for p in parts),
        sum(p[2] for p in parts),
        tuple(n_eq),
        sum(p[4] for p in parts),
    )
