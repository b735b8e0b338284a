"""Hot GF(2) search kernels with two interchangeable backends.

Matrices are handled as arrays of column bitmasks (bit k of column j is the
entry in row k).  Two implementations of each kernel exist:

* a numba ``@njit`` version (default when numba imports cleanly), and
* a vectorized numpy fallback.

Selection: set ``DEHNROOTS_BACKEND=numpy`` (or ``numba``) in the
environment, or call :func:`set_backend` at runtime.  Both backends walk
the same search tree in the same order, so results are bit-identical.

The square-root search uses the identity P*P = M  <=>  P = P^T M for
orthogonal P, i.e. entry (k, j) of P equals the parity of ``p_k & m_j``.
Chosen columns therefore force the low bits of every later column, which
collapses the search tree to polynomial size while remaining exhaustive
over the orthogonal group.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import InvalidInput

_PARITY16 = np.zeros(1 << 16, dtype=np.uint8)
for _i in range(1, 1 << 16):
    _PARITY16[_i] = _PARITY16[_i >> 1] ^ (_i & 1)


def _parity(x: int) -> int:
    return int(_PARITY16[x & 0xFFFF] ^ _PARITY16[(x >> 16) & 0xFFFF])


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------

def _np_candidates(g: int) -> np.ndarray:
    return np.arange(1 << g, dtype=np.int64)


def _np_parity_vec(x: np.ndarray) -> np.ndarray:
    return _PARITY16[x & 0xFFFF] ^ _PARITY16[(x >> 16) & 0xFFFF]


def _np_orthogonal_count(g: int) -> int:
    all_v = _np_candidates(g)
    odd = all_v[_np_parity_vec(all_v) == 1]

    def rec(cols: list[int]) -> int:
        j = len(cols)
        if j == g:
            return 1
        cand = odd
        for p in cols:
            cand = cand[_np_parity_vec(cand & p) == 0]
        return sum(rec(cols + [int(v)]) for v in cand)

    return rec([])


def _np_square_root(m_cols: tuple[int, ...]) -> tuple[int, ...] | None:
    g = len(m_cols)
    all_v = _np_candidates(g)
    odd_mask = _np_parity_vec(all_v) == 1
    m = np.array(m_cols, dtype=np.int64)

    def rec(cols: list[int]) -> tuple[int, ...] | None:
        j = len(cols)
        if j == g:
            return tuple(cols)
        keep = odd_mask.copy()
        for k, p in enumerate(cols):
            # forced bit k of the new column: parity(p_k & m_j)
            forced = _parity(p & m_cols[j])
            keep &= ((all_v >> k) & 1) == forced
            # orthogonality and the square condition row for column k
            keep &= _np_parity_vec(all_v & p) == 0
            keep &= _np_parity_vec(all_v & m_cols[k]) == ((p >> j) & 1)
        # self condition: parity(v & m_j) == bit j of v
        keep &= _np_parity_vec(all_v & m_cols[j]) == ((all_v >> j) & 1)
        for v in all_v[keep]:
            out = rec(cols + [int(v)])
            if out is not None:
                return out
        return None

    return rec([])


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

def _build_numba_kernels():
    from numba import njit

    @njit(cache=True)
    def _par(x):
        x ^= x >> 16
        x ^= x >> 8
        x ^= x >> 4
        x ^= x >> 2
        x ^= x >> 1
        return x & 1

    @njit(cache=True)
    def nb_orthogonal_count(g):
        size = 1 << g
        cols = np.zeros(g, dtype=np.int64)
        cand = np.zeros(g, dtype=np.int64)
        depth = 0
        count = 0
        while True:
            v = cand[depth]
            chosen = -1
            while v < size:
                if _par(v) == 1:
                    ok = True
                    for i in range(depth):
                        if _par(v & cols[i]) != 0:
                            ok = False
                            break
                    if ok:
                        chosen = v
                        break
                v += 1
            if chosen >= 0:
                cols[depth] = chosen
                cand[depth] = chosen + 1
                if depth == g - 1:
                    count += 1
                else:
                    depth += 1
                    cand[depth] = 0
                    continue
            else:
                if depth == 0:
                    return count
                depth -= 1

    @njit(cache=True)
    def nb_square_root(m, g):
        size = 1 << g
        cols = np.zeros(g, dtype=np.int64)
        cand = np.zeros(g, dtype=np.int64)
        depth = 0
        while True:
            v = cand[depth]
            chosen = -1
            while v < size:
                if _par(v) == 1 and _par(v & m[depth]) == ((v >> depth) & 1):
                    ok = True
                    for k in range(depth):
                        p = cols[k]
                        if ((v >> k) & 1) != _par(p & m[depth]):
                            ok = False
                            break
                        if _par(v & p) != 0:
                            ok = False
                            break
                        if _par(v & m[k]) != ((p >> depth) & 1):
                            ok = False
                            break
                    if ok:
                        chosen = v
                        break
                v += 1
            if chosen >= 0:
                cols[depth] = chosen
                cand[depth] = chosen + 1
                if depth == g - 1:
                    return cols
                depth += 1
                cand[depth] = 0
            else:
                if depth == 0:
                    return np.full(g, -1, dtype=np.int64)
                depth -= 1

    return nb_orthogonal_count, nb_square_root


_NUMBA_KERNELS = None
_BACKEND: str | None = None


def _init_backend() -> str:
    global _NUMBA_KERNELS
    requested = os.environ.get("DEHNROOTS_BACKEND", "").strip().lower()
    if requested not in ("", "numba", "numpy"):
        raise InvalidInput(
            f"DEHNROOTS_BACKEND must be 'numba' or 'numpy', got {requested!r}"
        )
    if requested == "numpy":
        return "numpy"
    try:
        _NUMBA_KERNELS = _build_numba_kernels()
        return "numba"
    except ImportError:
        if requested == "numba":
            raise
        return "numpy"


def backend_name() -> str:
    global _BACKEND
    if _BACKEND is None:
        _BACKEND = _init_backend()
    return _BACKEND


def set_backend(name: str) -> None:
    """Force a backend ('numba' or 'numpy'); mainly for tests and benchmarks."""
    global _BACKEND, _NUMBA_KERNELS
    if name not in ("numba", "numpy"):
        raise InvalidInput(f"unknown backend {name!r}")
    if name == "numba" and _NUMBA_KERNELS is None:
        _NUMBA_KERNELS = _build_numba_kernels()
    _BACKEND = name


def orthogonal_count(g: int) -> int:
    """Number of g x g matrices over GF(2) with orthonormal columns."""
    if backend_name() == "numba":
        return int(_NUMBA_KERNELS[0](g))
    return _np_orthogonal_count(g)


def square_root_columns(m_cols: tuple[int, ...]) -> tuple[int, ...] | None:
    """First orthogonal P (as column masks) with P*P = M, else None."""
    g = len(m_cols)
    if backend_name() == "numba":
        out = _NUMBA_KERNELS[1](np.array(m_cols, dtype=np.int64), g)
        if out[0] < 0:
            return None
        return tuple(int(x) for x in out)
    return _np_square_root(m_cols)
