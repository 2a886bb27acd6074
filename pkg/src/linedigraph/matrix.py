"""Exact small-integer matrix algebra.

Matrices are dense ``int64`` arrays wrapped in an immutable :class:`ZeroOneMatrix`.
Entries are kept as integers (not booleans) so that a product which is supposed
to be 0/1 can be checked for it instead of silently saturating.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ZeroOneMatrix",
    "Permutation",
    "identity",
    "ones",
    "zeros",
    "kron",
    "direct_sum",
    "matmul",
    "similarity",
    "is_permutation_matrix",
    "first_mismatch",
]

# float64 represents every integer below 2**53 exactly
_EXACT_FLOAT_BOUND = 2**53


class ZeroOneMatrix:
    """Immutable dense matrix of small nonnegative integers."""

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=np.int64, copy=True)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2:
            raise ValueError(f"matrix must be 2-dimensional, got shape {a.shape}")
        if a.size and a.min() < 0:
            raise ValueError("matrix entries must be nonnegative")
        a.flags.writeable = False
        self._a = a

    @classmethod
    def _wrap(cls, a: np.ndarray) -> ZeroOneMatrix:
        # trusted constructor: a is a fresh int64 2-d array owned by the caller
        m = object.__new__(cls)
        a.flags.writeable = False
        m._a = a
        return m

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the underlying array."""
        return self._a

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    def __getitem__(self, idx):
        return self._a[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZeroOneMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        return hash((self.shape, self._a.tobytes()))

    def __add__(self, other: ZeroOneMatrix) -> ZeroOneMatrix:
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape} matrices")
        return ZeroOneMatrix._wrap(self._a + other._a)

    def __repr__(self) -> str:
        if self.rows * self.cols <= 64:
            return f"ZeroOneMatrix({self._a.tolist()})"
        return f"ZeroOneMatrix(<{self.rows}x{self.cols}>)"

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def is_zero_one(self) -> bool:
        return bool(np.all(self._a <= 1))

    def row_sums(self) -> np.ndarray:
        return self._a.sum(axis=1)

    def col_sums(self) -> np.ndarray:
        return self._a.sum(axis=0)

    def support(self) -> np.ndarray:
        """Boolean mask of the nonzero entries."""
        return self._a != 0


def identity(n: int) -> ZeroOneMatrix:
    return ZeroOneMatrix._wrap(np.eye(n, dtype=np.int64))


def ones(n: int, m: int | None = None) -> ZeroOneMatrix:
    """The all-ones matrix ``J_n`` (or ``n x m`` when ``m`` is given)."""
    return ZeroOneMatrix._wrap(np.ones((n, n if m is None else m), dtype=np.int64))


def zeros(n: int, m: int | None = None) -> ZeroOneMatrix:
    return ZeroOneMatrix._wrap(np.zeros((n, n if m is None else m), dtype=np.int64))


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``{0, ..., n-1}``; ``images[i]`` is the image of ``i``.

    The matrix form has ``P[i, images[i]] = 1``, so a permutation read as a
    dicycle factor has exactly the arcs ``(i, images[i])``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """``self`` after ``other``: ``i -> self(other(i))``."""
        if other.size != self.size:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.images[j] for j in other.images))

    def arcs(self) -> list[tuple[int, int]]:
        return list(enumerate(self.images))

    def matrix(self) -> ZeroOneMatrix:
        n = len(self.images)
        a = np.zeros((n, n), dtype=np.int64)
        if n:
            a[np.arange(n), np.asarray(self.images)] = 1
        return ZeroOneMatrix._wrap(a)

    @classmethod
    def from_matrix(cls, m: ZeroOneMatrix) -> Permutation:
        if not is_permutation_matrix(m):
            raise ValueError("matrix is not a permutation matrix")
        return cls(tuple(int(j) for j in np.argmax(m.array, axis=1)))


def kron(a: ZeroOneMatrix, b: ZeroOneMatrix) -> ZeroOneMatrix:
    """Kronecker product; block ``(i, j)`` of the result is ``a[i, j] * b``."""
    return ZeroOneMatrix._wrap(
        np.kron(a.array, b.array).astype(np.int64, copy=False).reshape(
            a.rows * b.rows, a.cols * b.cols
        )
    )


def direct_sum(blocks: Sequence[ZeroOneMatrix]) -> ZeroOneMatrix:
    """Block-diagonal matrix with ``blocks`` along the diagonal."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for b in blocks:
        out[r : r + b.rows, c : c + b.cols] = b.array
        r += b.rows
        c += b.cols
    return ZeroOneMatrix._wrap(out)


def matmul(a: ZeroOneMatrix, b: ZeroOneMatrix) -> ZeroOneMatrix:
    """Exact integer product ``a @ b``."""
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    if a.cols == 0:
        return zeros(a.rows, b.cols)
    # numpy has no BLAS path for integers; route through float64 when every
    # partial sum is provably exact
    bound = int(a.array.max(initial=0)) * int(b.array.max(initial=0)) * a.cols
    if bound < _EXACT_FLOAT_BOUND:
        prod = a.array.astype(np.float64) @ b.array.astype(np.float64)
        return ZeroOneMatrix._wrap(prod.astype(np.int64))
    return ZeroOneMatrix._wrap(a.array @ b.array)


def similarity(p: Permutation, m: ZeroOneMatrix) -> ZeroOneMatrix:
    """Return ``P M P^T``, i.e. the matrix with ``result[p(i), p(j)] = m[i, j]``."""
    if m.rows != m.cols or m.rows != p.size:
        raise ValueError(
            f"permutation of size {p.size} cannot relabel a {m.rows}x{m.cols} matrix"
        )
    out = np.empty_like(m.array)
    idx = np.asarray(p.images, dtype=np.intp)
    out[np.ix_(idx, idx)] = m.array
    return ZeroOneMatrix._wrap(out)


def is_permutation_matrix(m: ZeroOneMatrix) -> bool:
    if m.rows != m.cols:
        return False
    a = m.array
    if not np.all((a == 0) | (a == 1)):
        return False
    return bool(np.all(a.sum(axis=0) == 1) and np.all(a.sum(axis=1) == 1))


def first_mismatch(a: ZeroOneMatrix, b: ZeroOneMatrix) -> tuple[int, int] | None:
    """First ``(row, col)`` in row-major order where ``a`` and ``b`` differ.

    Matrices of different shapes mismatch at the first coordinate outside the
    common region (or ``(0, 0)`` if one of them is empty).
    """
    if a.shape != b.shape:
        r = min(a.rows, b.rows)
        c = min(a.cols, b.cols)
        common = first_mismatch(
            ZeroOneMatrix._wrap(a.array[:r, :c].copy()),
            ZeroOneMatrix._wrap(b.array[:r, :c].copy()),
        )
        if common is not None:
            return common
        return (r, 0) if a.rows != b.rows else (0, c)
    diff = np.argwhere(a.array != b.array)
    if diff.size == 0:
        return None
    return int(diff[0, 0]), int(diff[0, 1])


def from_rows(rows: Iterable[Iterable[int]]) -> ZeroOneMatrix:
    return ZeroOneMatrix([list(r) for r in rows])
