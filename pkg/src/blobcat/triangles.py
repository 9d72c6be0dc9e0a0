"""
The classical Catalan triangle, its doubled-hypotenuse variant, the closed
binomial formula for the latter, and the 2-power weighted decompositions of
binomial coefficients into classical-triangle entries.

Both triangles are indexed from -1 and computed with exact integers.  The
classical one has c_{-1,-1} = 1 and zero elsewhere on its borders; the
doubled variant seeds its first two rows with the parity pattern 1,0,1,0,...
Entries above the main diagonal of the doubled triangle are plain powers of
two and come out of the same recursion without special-casing.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

CLASSICAL = "classical"
BLOBBED = "blobbed"
KINDS = (CLASSICAL, BLOBBED)


def binomial(m: int, k: int) -> int:
    """Exact binomial coefficient, zero outside 0 <= k <= m."""
    if m < 0:
        raise ValueError("binomial needs a non-negative top index")
    if k < 0 or k > m:
        return 0
    return comb(m, k)


@lru_cache(maxsize=None)
def _row(kind: str, i: int, width: int) -> tuple[int, ...]:
    """Entries (C_{i,-1}, ..., C_{i,width-2}), built row by row."""
    if kind == CLASSICAL:
        if i == -1:
            return (1,) + (0,) * (width - 1)
        base = lambda j: 0  # noqa: E731  (borders vanish for i >= 0)
    elif kind == BLOBBED:
        if i <= 0:
            return tuple(1 if (i + j) % 2 == 0 else 0 for j in range(-1, width - 1))
        base = lambda j: 0  # noqa: E731
    else:
        raise ValueError(f"unknown triangle kind {kind!r}")
    prev = _row(kind, i - 1, width + 1)
    out = [base(-1)]
    for j in range(0, width - 1):
        out.append(prev[j] + prev[j + 2])
    return tuple(out)


def _entry(kind: str, i: int, j: int) -> int:
    # total: everything outside the bordered quadrant vanishes, so identity
    # sums never need boundary branches
    if i < -1 or j < -1:
        return 0
    # warm the cache bottom-up so deep rows never recurse deeply
    for r in range(-1, i + 1):
        _row(kind, r, j + 2 + (i - r))
    return _row(kind, i, j + 2)[j + 1]


def classical_entry(i: int, j: int) -> int:
    return _entry(CLASSICAL, i, j)


def blobbed_entry(i: int, j: int) -> int:
    return _entry(BLOBBED, i, j)


def entry(kind: str, i: int, j: int) -> int:
    return _entry(kind, i, j)


def blobbed_closed(i: int, j: int) -> int:
    """Binomial-sum form, valid on and below the diagonal with equal parity."""
    if not 0 <= j <= i:
        raise ValueError(f"need 0 <= j <= i, got ({i}, {j})")
    if (i - j) % 2 != 0:
        raise ValueError(f"indices must share parity, got ({i}, {j})")
    return sum(binomial(i, k) for k in range((i - j) // 2, (i + j) // 2 + 1))


def central_binomial_decomposition(i: int) -> list[tuple[int, int, int]]:
    """
    Terms (k, 2^k, c_{2i-k-1,k-1}) whose weighted sum is the central
    binomial coefficient binom(2i, i).
    """
    if i < 1:
        raise ValueError("need i >= 1")
    return [(k, 2**k, classical_entry(2 * i - k - 1, k - 1)) for k in range(1, i + 1)]


def general_binomial_decomposition(i: int, j: int) -> list[tuple[int, int, int]]:
    """
    Terms (k, 2^(k-1), c_{2i-k-j,j+k-2}) whose weighted sum is binom(2i-j, i).
    """
    if not 1 <= j <= i:
        raise ValueError(f"need 1 <= j <= i, got ({i}, {j})")
    return [
        (k, 2 ** (k - 1), classical_entry(2 * i - k - j, j + k - 2))
        for k in range(1, i - j + 2)
    ]


def triangle_rows(kind: str, rows: int, cols: int) -> list[list[int]]:
    """Row-major slab of entries for i in 0..rows-1, j in 0..cols-1."""
    if kind not in KINDS:
        raise ValueError(f"unknown triangle kind {kind!r}")
    if rows < 0 or cols < 0:
        raise ValueError("rows and cols must be non-negative")
    return [[_entry(kind, i, j) for j in range(cols)] for i in range(rows)]
