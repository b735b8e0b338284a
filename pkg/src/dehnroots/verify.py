"""Claim-by-claim verification sweeps, used by the CLI ``verify`` command.

Each suite checks one family of claims by running the independent routes
against each other (closed form vs. exhaustive computation) and returns a
list of :class:`Claim` records; a build is correct iff every claim passes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .datasets import DataSetType
from .enumeration import root_exists, root_exists_closed_form
from .homology import (
    enumerate_orthogonal,
    find_square_root,
    multiply,
    psi_twist_a1,
    psi_twist_b,
)
from .maxdegree import max_degree_bruteforce, max_degree_closed_form, results_agree
from .primary import (
    PrimaryQuery,
    degree3_exists,
    primary_exists_bruteforce,
    primary_exists_closed_form,
)

A, B = DataSetType.A, DataSetType.B


@dataclass(frozen=True)
class Claim:
    suite: str
    name: str
    ok: bool
    detail: str


def _claim(suite, name, failures, checked) -> Claim:
    if failures:
        head = ", ".join(str(f) for f in failures[:5])
        more = "" if len(failures) <= 5 else f" (+{len(failures) - 5} more)"
        return Claim(suite, name, False, f"failed at {head}{more}")
    return Claim(suite, name, True, f"checked {checked} cases")


def suite_thm32(limit_a: int, limit_b: int) -> list[Claim]:
    """Existence thresholds: brute-force equals closed form."""
    bad_a = [g for g in range(0, limit_a + 1)
             if root_exists(A, g) != root_exists_closed_form(A, g)]
    bad_b = [gp for gp in range(0, limit_b + 1)
             if root_exists(B, gp) != root_exists_closed_form(B, gp)]
    return [
        _claim("thm32", f"type A existence (g <= {limit_a})", bad_a, limit_a + 1),
        _claim("thm32", f"type B existence (g' <= {limit_b})", bad_b, limit_b + 1),
    ]


def _max_degree_suite(suite: str, ds_type: DataSetType, limit: int) -> list[Claim]:
    bad = []
    for g in range(0, limit + 1):
        closed = max_degree_closed_form(ds_type, g)
        brute = max_degree_bruteforce(ds_type, g)
        if not results_agree(closed, brute):
            bad.append(g)
    claims = [_claim(suite, f"closed form vs brute force (<= {limit})", bad, limit + 1)]
    if ds_type is A:
        bad_bound = [
            g
            for g in range(3, limit + 1)
            if max_degree_bruteforce(A, g).kind == "exact"
            and (
                max_degree_bruteforce(A, g).n > g
                or (max_degree_bruteforce(A, g).n == g) != (g % 2 == 1)
            )
        ]
        claims.append(
            _claim(suite, "N <= g with equality iff g odd", bad_bound, limit - 2)
        )
    return claims


def suite_thm41(limit: int) -> list[Claim]:
    return _max_degree_suite("thm41", A, limit)


def suite_thm45(limit: int) -> list[Claim]:
    return _max_degree_suite("thm45", B, limit)


def _primary_suite(suite: str, ds_type: DataSetType, genus_max: int, n_max: int = 13):
    bad = []
    checked = 0
    for n in range(3, n_max + 1, 2):
        for gp in range(0, genus_max + 1):
            q = PrimaryQuery(ds_type, n, gp)
            checked += 1
            if primary_exists_bruteforce(q) != primary_exists_closed_form(q):
                bad.append((n, gp))
    claims = [_claim(suite, f"brute force vs closed form (n <= {n_max}, genus <= {genus_max})",
                     bad, checked)]
    bad_edge = []
    for n in range(3, n_max + 1, 2):
        if ds_type is A:
            edge = (n - 1) ** 2
            if primary_exists_closed_form(PrimaryQuery(A, n, edge)):
                bad_edge.append((n, edge))
            for g in range(edge + 1, min(edge + 2 * n, genus_max) + 1):
                if not primary_exists_closed_form(PrimaryQuery(A, n, g)):
                    bad_edge.append((n, g))
            for g in range(0, n):
                if primary_exists_closed_form(PrimaryQuery(A, n, g)):
                    bad_edge.append((n, g))
        else:
            start = (n - 3) * (n - 1) // 2
            exceptional = (n * n - 2 * n - 1) // 2
            if start >= 1 and primary_exists_closed_form(PrimaryQuery(B, n, start - 1)):
                bad_edge.append((n, start - 1))
            for gp in range(max(start, 1), min(start + 3 * n, genus_max) + 1):
                expected = not (n % 3 == 0 and gp == exceptional)
                if primary_exists_closed_form(PrimaryQuery(B, n, gp)) != expected:
                    bad_edge.append((n, gp))
            for gp in range(0, (n - 1) // 2):
                if primary_exists_closed_form(PrimaryQuery(B, n, gp)):
                    bad_edge.append((n, gp))
    claims.append(_claim(suite, "threshold boundaries", bad_edge, n_max // 2 + 1))
    return claims


def suite_thm51(genus_max: int) -> list[Claim]:
    return _primary_suite("thm51", A, genus_max)


def suite_thm52(genus_max: int) -> list[Claim]:
    return _primary_suite("thm52", B, genus_max)


def suite_cor53(limit: int) -> list[Claim]:
    """A twist with any nontrivial root has one of degree 3."""
    bad = []
    for ds_type in (A, B):
        for gp in range(0, limit + 1):
            if root_exists_closed_form(ds_type, gp) and not degree3_exists(ds_type, gp):
                bad.append((ds_type.value, gp))
    return [_claim("cor53", f"root exists => degree-3 root (genus <= {limit})",
                   bad, 2 * (limit + 1))]


def suite_prop21(cap_a: int = 6, cap_b: int = 8, sym_cap: int = 4) -> list[Claim]:
    """No square roots of the twist images; the symmetry step of the proof."""
    bad = [g for g in range(2, cap_a + 1) if find_square_root(psi_twist_a1(g)) is not None]
    claims = [_claim("prop21", f"no square root of the crosscap-swap image (g <= {cap_a})",
                     bad, cap_a - 1)]
    bad = [g for g in range(2, cap_b + 1, 2) if find_square_root(psi_twist_b(g)) is not None]
    claims.append(_claim("prop21", f"no square root of the all-crosscap image (even g <= {cap_b})",
                         bad, cap_b // 2))
    bad = []
    checked = 0
    for g in range(2, sym_cap + 1):
        a = psi_twist_a1(g)
        for p in enumerate_orthogonal(g):
            if multiply(a, p.transpose()) == p:
                checked += 1
                if not p.is_symmetric():
                    bad.append(g)
    claims.append(
        Claim("prop21", f"orthogonal P with A*P^T = P are symmetric (g <= {sym_cap})",
              not bad, f"{checked} matches" if not bad else f"failed at {bad[:5]}")
    )
    # the entrywise argument needs no orthogonality; check all matrices too
    from .homology import F2Matrix

    bad = []
    checked = 0
    for g in (2, 3):
        a = psi_twist_a1(g)
        for code in range(1 << (g * g)):
            rows = tuple((code >> (g * i)) & ((1 << g) - 1) for i in range(g))
            p = F2Matrix(g, rows)
            if multiply(a, p.transpose()) == p:
                checked += 1
                if not p.is_symmetric():
                    bad.append((g, rows))
    claims.append(
        Claim("prop21", "arbitrary P with A*P^T = P are symmetric (g <= 3)",
              not bad, f"{checked} matches" if not bad else f"failed at {bad[:3]}")
    )
    return claims


SUITE_NAMES = ("thm32", "thm41", "thm45", "thm51", "thm52", "cor53", "prop21")


def run_suites(names: list[str], limit: int) -> list[Claim]:
    """Run the requested suites, capping each sweep by ``limit``."""
    claims: list[Claim] = []
    for name in names:
        if name == "thm32":
            claims += suite_thm32(limit, limit // 2)
        elif name == "thm41":
            claims += suite_thm41(limit)
        elif name == "thm45":
            claims += suite_thm45(limit)
        elif name == "thm51":
            claims += suite_thm51(min(limit, 120))
        elif name == "thm52":
            claims += suite_thm52(min(limit, 120))
        elif name == "cor53":
            claims += suite_cor53(min(limit, 300))
        elif name == "prop21":
            claims += suite_prop21(cap_a=min(6, 2 + limit), cap_b=min(8, 2 + limit))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return claims
