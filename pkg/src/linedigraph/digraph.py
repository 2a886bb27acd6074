"""Simple digraphs (loops allowed, no multiple arcs) on vertices ``0..n-1``."""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .matrix import ZeroOneMatrix

__all__ = [
    "Digraph",
    "DigraphError",
    "NotRegularError",
    "build_digraph",
    "adjacency_matrix",
    "from_adjacency_matrix",
    "regularity",
    "disjoint_union",
    "dicycle",
]


class DigraphError(ValueError):
    """Invalid digraph input or an operation undefined for the given digraph."""


class NotRegularError(DigraphError):
    def __init__(self, vertex: int, indeg: int, outdeg: int, expected: int | None = None):
        self.vertex = vertex
        self.indeg = indeg
        self.outdeg = outdeg
        if expected is None:
            msg = f"digraph is not regular: vertex {vertex} has in-degree {indeg} and out-degree {outdeg}"
        else:
            msg = (
                f"digraph is not regular: vertex {vertex} has in-degree {indeg} and "
                f"out-degree {outdeg}, expected {expected}"
            )
        super().__init__(msg)


@dataclass(frozen=True, eq=True)
class Digraph:
    """A digraph with ``n`` vertices and arcs kept in lexicographic ``(tail, head)`` order.

    The position of an arc in :attr:`arcs` is its arc id; line digraphs and
    labelings are indexed by it.
    """

    n: int
    arcs: tuple[tuple[int, int], ...] = ()
    _offsets: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        n = int(self.n)
        if n < 0:
            raise DigraphError(f"vertex count must be nonnegative, got {n}")
        arcs = sorted({(int(u), int(v)) for u, v in self.arcs})
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise DigraphError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", tuple(arcs))
        tails = [u for u, _ in arcs]
        object.__setattr__(
            self, "_offsets", tuple(bisect_left(tails, v) for v in range(n + 1))
        )

    @property
    def m(self) -> int:
        return len(self.arcs)

    def out_arc_ids(self, u: int) -> range:
        """Arc ids of the arcs leaving ``u`` (contiguous in canonical order)."""
        return range(self._offsets[u], self._offsets[u + 1])

    def successors(self, u: int) -> list[int]:
        return [self.arcs[a][1] for a in self.out_arc_ids(u)]

    def arc_id(self, u: int, v: int) -> int:
        ids = self.out_arc_ids(u)
        heads = [self.arcs[a][1] for a in ids]
        k = bisect_left(heads, v)
        if k == len(heads) or heads[k] != v:
            raise KeyError((u, v))
        return ids.start + k

    def has_arc(self, u: int, v: int) -> bool:
        try:
            self.arc_id(u, v)
        except KeyError:
            return False
        return True

    @cached_property
    def out_degrees(self) -> list[int]:
        return [self._offsets[v + 1] - self._offsets[v] for v in range(self.n)]

    @cached_property
    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for _, v in self.arcs:
            deg[v] += 1
        return deg

    def relabel(self, images: Sequence[int], n: int | None = None) -> Digraph:
        """Digraph with each arc ``(u, v)`` replaced by ``(images[u], images[v])``."""
        return Digraph(self.n if n is None else n, [(images[u], images[v]) for u, v in self.arcs])


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph(n, tuple(arcs))


def dicycle(n: int) -> Digraph:
    """The directed ``n``-cycle ``0 -> 1 -> ... -> n-1 -> 0`` (a loop when ``n == 1``)."""
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def adjacency_matrix(d: Digraph) -> ZeroOneMatrix:
    a = np.zeros((d.n, d.n), dtype=np.int64)
    if d.arcs:
        arr = np.asarray(d.arcs)
        a[arr[:, 0], arr[:, 1]] = 1
    return ZeroOneMatrix._wrap(a)


def from_adjacency_matrix(m: ZeroOneMatrix) -> Digraph:
    if m.rows != m.cols:
        raise DigraphError(f"adjacency matrix must be square, got {m.rows}x{m.cols}")
    if not m.is_zero_one():
        raise DigraphError("adjacency matrix must be 0/1 (multiple arcs are not supported)")
    return Digraph(m.rows, [tuple(x) for x in np.argwhere(m.array).tolist()])


def regularity(d: Digraph) -> int | None:
    """Common in/out-degree of every vertex, or ``None`` if the digraph is not regular."""
    try:
        return require_regular(d)
    except DigraphError:
        return None


def require_regular(d: Digraph) -> int:
    """Like :func:`regularity` but raises :class:`NotRegularError` naming a bad vertex."""
    if d.n == 0:
        raise DigraphError("digraph has no vertices")
    indeg, outdeg = d.in_degrees, d.out_degrees
    target = outdeg[0]
    for v in range(d.n):
        if indeg[v] != target or outdeg[v] != target:
            raise NotRegularError(v, indeg[v], outdeg[v], expected=target)
    return target


def disjoint_union(parts: Sequence[Digraph]) -> tuple[Digraph, list[int]]:
    """Disjoint union of ``parts`` and the offset of each part.

    Vertex ``v`` of ``parts[k]`` becomes ``offsets[k] + v``.
    """
    offsets = []
    arcs = []
    total = 0
    for p in parts:
        offsets.append(total)
        arcs.extend((u + total, v + total) for u, v in p.arcs)
        total += p.n
    return Digraph(total, arcs), offsets
