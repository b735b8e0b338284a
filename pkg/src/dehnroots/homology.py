"""Mod-2 homology images of the two reference Dehn twists.

The twist about the crosscap-swapping circle acts on H_1(N_g; Z/2) by
exchanging the first two basis classes; for even g the twist about the
circle through all g crosscaps acts as I + J (J the all-ones matrix).
Both images are orthogonal for the dot-product pairing, so any square
root of either matrix would again be orthogonal; the exhaustive searches
here confirm at desk scale that no such square root exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import _gf2core
from .errors import DimMismatch, InvalidInput, SearchCapExceeded

SEARCH_CAP = 8


@dataclass(frozen=True)
class F2Matrix:
    """A square bit matrix over GF(2); rows[i] bit j is the (i, j) entry."""

    dim: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidInput(f"dimension must be >= 1, got {self.dim}")
        if len(self.rows) != self.dim:
            raise InvalidInput("row count does not match dimension")
        if any(r < 0 or r >> self.dim for r in self.rows):
            raise InvalidInput("row has bits outside the matrix dimension")

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def columns(self) -> tuple[int, ...]:
        """Column bitmasks (bit i of column j is the (i, j) entry)."""
        cols = [0] * self.dim
        for i, row in enumerate(self.rows):
            while row:
                j = (row & -row).bit_length() - 1
                cols[j] |= 1 << i
                row &= row - 1
        return tuple(cols)

    def transpose(self) -> "F2Matrix":
        return F2Matrix(self.dim, self.columns())

    def is_symmetric(self) -> bool:
        return self.rows == self.columns()

    def row_strings(self) -> list[str]:
        return ["".join(str(self.entry(i, j)) for j in range(self.dim)) for i in range(self.dim)]

    def __str__(self) -> str:
        return "\n".join(self.row_strings())


def from_columns(cols: tuple[int, ...]) -> F2Matrix:
    return F2Matrix(len(cols), F2Matrix(len(cols), cols).columns())


def identity(g: int) -> F2Matrix:
    return F2Matrix(g, tuple(1 << i for i in range(g)))


def multiply(x: F2Matrix, y: F2Matrix) -> F2Matrix:
    """Matrix product over GF(2)."""
    if x.dim != y.dim:
        raise DimMismatch(f"dimensions {x.dim} and {y.dim} differ")
    rows = []
    ycols = y.columns()
    for i in range(x.dim):
        xrow = x.rows[i]
        r = 0
        for j, col in enumerate(ycols):
            r |= (bin(xrow & col).count("1") & 1) << j
        rows.append(r)
    return F2Matrix(x.dim, tuple(rows))


def is_orthogonal(x: F2Matrix) -> bool:
    """True iff x^T x = I over GF(2) (columns are orthonormal)."""
    cols = x.columns()
    for i, ci in enumerate(cols):
        for j in range(i, x.dim):
            want = 1 if i == j else 0
            if bin(ci & cols[j]).count("1") & 1 != want:
                return False
    return True


def psi_twist_a1(g: int) -> F2Matrix:
    """Homology image of the twist along the first two crosscaps: swap + I."""
    if g < 2:
        raise InvalidInput(f"need genus >= 2, got {g}")
    rows = [2, 1] + [1 << i for i in range(2, g)]
    return F2Matrix(g, tuple(rows))


def psi_twist_b(g: int) -> F2Matrix:
    """Homology image of the twist through all g crosscaps: I + J (even g)."""
    if g < 2 or g % 2 != 0:
        raise InvalidInput(f"the all-crosscap circle is two-sided only for even genus, got {g}")
    full = (1 << g) - 1
    return F2Matrix(g, tuple(full ^ (1 << i) for i in range(g)))


def enumerate_orthogonal(g: int) -> Iterator[F2Matrix]:
    """Yield every g x g orthogonal matrix over GF(2), exactly once.

    Column-by-column backtracking; each new column has odd weight and is
    orthogonal to the previous ones, candidates in increasing binary value.
    Partitioning by first-column choice parallelizes cleanly if needed.
    """
    if g > SEARCH_CAP:
        raise SearchCapExceeded(f"genus {g} exceeds the search cap {SEARCH_CAP}")
    if g < 1:
        raise InvalidInput(f"dimension must be >= 1, got {g}")
    odd = [v for v in range(1 << g) if bin(v).count("1") & 1]

    def rec(cols: list[int]) -> Iterator[F2Matrix]:
        if len(cols) == g:
            yield from_columns(tuple(cols))
            return
        for v in odd:
            if all(bin(v & p).count("1") & 1 == 0 for p in cols):
                cols.append(v)
                yield from rec(cols)
                cols.pop()

    yield from rec([])


def orthogonal_count(g: int) -> int:
    """Size of the orthogonal group in dimension g (kernel-backed)."""
    if g > SEARCH_CAP:
        raise SearchCapExceeded(f"genus {g} exceeds the search cap {SEARCH_CAP}")
    return _gf2core.orthogonal_count(g)


def find_square_root(m: F2Matrix) -> F2Matrix | None:
    """Some orthogonal P with P*P = m, or None after exhausting the group.

    The search is exhaustive over orthogonal matrices: it walks the same
    column tree as :func:`enumerate_orthogonal`, pruned by the linear
    conditions that characterize square roots (see ``_gf2core``).
    """
    if m.dim > SEARCH_CAP:
        raise SearchCapExceeded(f"dimension {m.dim} exceeds the search cap {SEARCH_CAP}")
    if not is_orthogonal(m):
        raise InvalidInput("square-root search expects an orthogonal matrix")
    cols = _gf2core.square_root_columns(m.columns())
    if cols is None:
        return None
    root = from_columns(cols)
    assert multiply(root, root) == m
    return root


def to_json_strings(m: F2Matrix) -> list[str]:
    return m.row_strings()
