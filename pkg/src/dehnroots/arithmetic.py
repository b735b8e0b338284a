"""Exact residue arithmetic and the two congruence-system solvers.

Everything here works with plain Python integers (inputs are capped at
desk scale, far below 64-bit limits).  Residues are always stored as
least non-negative representatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInput, NotInvertible

INPUT_CAP = 10**6


@dataclass(frozen=True, order=True)
class Residue:
    """A residue class: ``0 <= value < modulus``."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidInput(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class CongruenceSolution:
    """A solution (a, b, c1) of one of the two twist congruence systems.

    Invariants: gcd(a, n) = gcd(b, n) = gcd(c1, n1) = 1,
    b - a = a*b (mod n) and a + b + c1*(n/n1) = 0 (mod n).
    """

    a: Residue
    b: Residue
    c1: Residue
    n: int
    n1: int

    def check(self) -> bool:
        """Return True iff all three defining congruences hold."""
        a, b, c1 = self.a.value, self.b.value, self.c1.value
        if self.n % self.n1 != 0:
            return False
        if math.gcd(a, self.n) != 1 or math.gcd(b, self.n) != 1:
            return False
        if math.gcd(c1, self.n1) != 1:
            return False
        if (b - a - a * b) % self.n != 0:
            return False
        return (a + b + c1 * (self.n // self.n1)) % self.n == 0


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def mod_inverse(x: int, n: int) -> Residue:
    """Inverse of x modulo n; raises NotInvertible if gcd(x, n) != 1."""
    if n < 1:
        raise InvalidInput(f"modulus must be >= 1, got {n}")
    g, s, _ = xgcd(x % n, n)
    if g != 1:
        raise NotInvertible(f"{x} has no inverse modulo {n} (gcd={g})")
    return Residue(s, n)


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """Solve x = r1 (mod m1), x = r2 (mod m2) for coprime m1, m2."""
    g, s, _ = xgcd(m1, m2)
    if g != 1:
        raise InvalidInput(f"moduli {m1}, {m2} are not coprime")
    return (r1 + (r2 - r1) * s % m2 * m1) % (m1 * m2)


@lru_cache(maxsize=8)
def _spf_sieve(limit: int) -> list[int]:
    """Smallest-prime-factor table for 0..limit."""
    spf = list(range(limit + 1))
    i = 2
    while i * i <= limit:
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    return spf


_SIEVE_LIMIT = 1 << 16


def prime_factorization(x: int) -> list[tuple[int, int]]:
    """Sorted list of (prime, exponent) pairs of x >= 1."""
    if x < 1:
        raise InvalidInput(f"cannot factor {x}")
    out: list[tuple[int, int]] = []
    if x <= _SIEVE_LIMIT:
        spf = _spf_sieve(_SIEVE_LIMIT)
        while x > 1:
            p = spf[x]
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            out.append((p, e))
        return out
    d = 2
    while d * d <= x:
        if x % d == 0:
            e = 0
            while x % d == 0:
                x //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if x > 1:
        out.append((x, 1))
    return out


def divisors(x: int) -> list[int]:
    """All positive divisors of x, sorted ascending."""
    divs = [1]
    for p, e in prime_factorization(x):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_prime(x: int) -> bool:
    return x >= 2 and prime_factorization(x)[0][0] == x


def _check_system_input(n1: int, d: int) -> None:
    for name, v in (("n1", n1), ("d", d)):
        if not isinstance(v, int):
            raise InvalidInput(f"{name} must be an integer")
        if v > INPUT_CAP:
            raise InvalidInput(f"{name}={v} exceeds the input cap {INPUT_CAP}")
    if n1 < 3 or n1 % 2 == 0:
        raise InvalidInput(f"n1 must be odd and >= 3, got {n1}")
    if d < 3 or d % 2 == 0:
        raise InvalidInput(f"d must be odd and >= 3, got {d}")


def _distinct_primes(x: int) -> list[int]:
    return [p for p, _ in prime_factorization(x)]


def _search_fallback(n1: int, d: int) -> CongruenceSolution | None:
    """Direct search for the composite system (one pass over a, O(n))."""
    n = n1 * d
    for a in range(1, n):
        if math.gcd(a, n) != 1:
            continue
        t = (1 - a) % n
        if math.gcd(t, n) != 1:
            continue
        b = a * mod_inverse(t, n).value % n
        if math.gcd(b, n) != 1:
            continue
        # a + b + c1*d = 0 (mod n) has a unit solution c1 mod n1 iff
        # d divides (a + b) mod n and the quotient is a unit mod n1.
        s = (-(a + b)) % n
        if s % d != 0:
            continue
        c1 = (s // d) % n1
        if math.gcd(c1, n1) == 1:
            return CongruenceSolution(
                Residue(a, n), Residue(b, n), Residue(c1, n1), n, n1
            )
    return None


def solve_composite_system(n1: int, d: int) -> CongruenceSolution | None:
    """Solve gcd(a,n)=gcd(b,n)=gcd(c1,n1)=1, b-a=ab, a+b+c1*d=0 (mod n=n1*d).

    Returns None exactly when n1 = 0 (mod 3) and d != 0 (mod 3); otherwise
    returns one valid solution, built by the CRT construction with a direct
    search as a safety net.
    """
    _check_system_input(n1, d)
    n = n1 * d
    if n1 % 3 == 0 and d % 3 != 0:
        return None

    if n1 % 3 == 0:
        # both n1 and d divisible by 3
        common = [p for p in _distinct_primes(d // 3) if n1 % p == 0]
    else:
        common = [p for p in _distinct_primes(d) if n1 % p == 0]

    p = math.prod(common)
    q = 1
    for pr in _distinct_primes(n1):
        if pr not in common:
            q *= pr

    if q == 1:
        a1 = 1 % n1
    else:
        # the q-residue makes a1*d land on -3 modulo q in both branches
        if n1 % 3 == 0:
            rhs = (-mod_inverse(d // 3, q).value) % q
        else:
            rhs = (-3 * mod_inverse(d, q).value) % q
        a1 = rhs % n1 if p == 1 else crt_pair(rhs, q, 1, p) % n1
    try:
        b1 = a1 * mod_inverse(a1 * d + 1, n1).value % n1
        sol = CongruenceSolution(
            Residue(a1 * d + 2, n),
            Residue(b1 * d - 2, n),
            Residue(-(a1 + b1), n1),
            n,
            n1,
        )
        if sol.check():
            return sol
    except NotInvertible:
        pass
    # The CRT residues a1 = 1 (mod p) and a1 = rhs (mod q) only pin a1 modulo
    # p*q, which may be a proper divisor of n1; fall back to direct search.
    return _search_fallback(n1, d)


def solve_simple_system(n: int) -> CongruenceSolution | None:
    """Solve the system with a single cone of full order (n1 = n, d = 1).

    Solvable iff n != 0 (mod 3); the explicit solution is
    (a, b, c1) = ((n+3)/2, -3, (n+3)/2).
    """
    if not isinstance(n, int):
        raise InvalidInput("n must be an integer")
    if n > INPUT_CAP:
        raise InvalidInput(f"n={n} exceeds the input cap {INPUT_CAP}")
    if n < 3 or n % 2 == 0:
        raise InvalidInput(f"n must be odd and >= 3, got {n}")
    if n % 3 == 0:
        return None
    half = (n + 3) // 2
    sol = CongruenceSolution(Residue(half, n), Residue(-3, n), Residue(half, n), n, n)
    assert sol.check()
    return sol
