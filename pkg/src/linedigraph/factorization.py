"""Dicycle factorizations of regular digraphs.

A d-regular digraph is a d-regular bipartite graph between tails and heads, so
it always contains a perfect matching; removing one leaves a (d-1)-regular
digraph.  Repeating this d times splits the arc set into d permutations.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .digraph import Digraph, DigraphError, adjacency_matrix, require_regular
from .matrix import Permutation, ZeroOneMatrix

__all__ = [
    "DicycleFactorization",
    "NoPerfectMatching",
    "FactorizationError",
    "perfect_matching",
    "maximum_matching",
    "dicycle_factorization",
    "orbits",
    "random_regular_digraph",
]

_MAX_RETRIES = 1000


class NoPerfectMatching(ValueError):
    """Raised when a square 0/1 matrix has no perfect matching.

    ``rows`` is a set of row indices whose combined support, ``cols``, is
    smaller than the set itself (a Hall violation).
    """

    def __init__(self, rows: list[int], cols: list[int]):
        self.rows = rows
        self.cols = cols
        super().__init__(
            f"no perfect matching: rows {rows} only reach {len(cols)} column(s) {cols}"
        )


class FactorizationError(DigraphError):
    pass


@dataclass(frozen=True)
class DicycleFactorization:
    """Ordered list of arc-disjoint permutations whose matrices sum to ``M(D)``."""

    factors: tuple[Permutation, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if factors:
            n = factors[0].size
            if any(f.size != n for f in factors):
                raise FactorizationError("factors must all have the same size")
            for i in range(n):
                heads = [f.images[i] for f in factors]
                if len(set(heads)) != len(heads):
                    raise FactorizationError(
                        f"factors are not arc-disjoint: vertex {i} repeats a head in {heads}"
                    )
        object.__setattr__(self, "factors", factors)

    @property
    def d(self) -> int:
        return len(self.factors)

    @property
    def n(self) -> int:
        return self.factors[0].size if self.factors else 0

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, j: int) -> Permutation:
        return self.factors[j]

    def matrices(self) -> list[ZeroOneMatrix]:
        return [f.matrix() for f in self.factors]

    def digraph(self) -> Digraph:
        """The digraph whose arcs are the union of the factors."""
        return Digraph(self.n, [a for f in self.factors for a in f.arcs()])

    def factor_of_arc(self) -> dict[tuple[int, int], int]:
        return {(i, j): k for k, f in enumerate(self.factors) for i, j in enumerate(f.images)}

    def check_against(self, d: Digraph) -> None:
        """Raise :class:`FactorizationError` unless this factorizes ``d``."""
        if self.n != d.n:
            raise FactorizationError(
                f"factorization acts on {self.n} vertices, digraph has {d.n}"
            )
        arcs = self.factor_of_arc()
        if set(arcs) != set(d.arcs):
            extra = sorted(set(arcs) - set(d.arcs))
            missing = sorted(set(d.arcs) - set(arcs))
            raise FactorizationError(
                f"factor arcs do not match the digraph (extra {extra[:5]}, missing {missing[:5]})"
            )


def _adjacency_lists(b: ZeroOneMatrix) -> list[list[int]]:
    return [np.flatnonzero(row).tolist() for row in b.array]


def maximum_matching(adj: Sequence[Sequence[int]], n_right: int) -> list[int]:
    """Hopcroft-Karp maximum matching on a bipartite graph.

    ``adj[u]`` lists the right vertices adjacent to left vertex ``u`` and is
    scanned in the given order, so the result is deterministic.  Returns
    ``match[u]`` (``-1`` when ``u`` is unmatched).
    """
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    inf = n_left + 1

    while True:
        # layered BFS from the free left vertices
        dist = [inf] * n_left
        queue = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = min(found, dist[u] + 1)
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if found == inf:
            return match_l

        # vertex-disjoint shortest augmenting paths, iterative DFS
        pointer = [0] * n_left
        for root in range(n_left):
            if match_l[root] != -1:
                continue
            stack = [root]
            while stack:
                u = stack[-1]
                advanced = False
                while pointer[u] < len(adj[u]):
                    v = adj[u][pointer[u]]
                    pointer[u] += 1
                    w = match_r[v]
                    if w == -1:
                        if dist[u] + 1 == found:
                            # augment along the stack
                            for x in reversed(stack):
                                prev = match_l[x]
                                match_l[x] = v
                                match_r[v] = x
                                v = prev
                            stack = []
                            advanced = True
                            break
                    elif dist[w] == dist[u] + 1:
                        stack.append(w)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = inf
                    stack.pop()


def _hall_witness(adj: Sequence[Sequence[int]], match_l: list[int], n_right: int) -> NoPerfectMatching:
    match_r = [-1] * n_right
    for u, v in enumerate(match_l):
        if v != -1:
            match_r[v] = u
    root = match_l.index(-1)
    rows = {root}
    cols = set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in cols:
                cols.add(v)
                w = match_r[v]
                # every reached column is matched, otherwise the matching was not maximum
                if w not in rows:
                    rows.add(w)
                    queue.append(w)
    return NoPerfectMatching(sorted(rows), sorted(cols))


def perfect_matching(b: ZeroOneMatrix) -> Permutation:
    """A permutation ``p`` with ``b[i, p(i)] = 1`` for every row ``i``.

    Raises :class:`NoPerfectMatching` (with a Hall-violating row set) if none exists.
    """
    if b.rows != b.cols:
        raise ValueError(f"matrix must be square, got {b.rows}x{b.cols}")
    adj = _adjacency_lists(b)
    match_l = maximum_matching(adj, b.cols)
    if -1 in match_l:
        raise _hall_witness(adj, match_l, b.cols)
    return Permutation(tuple(match_l))


def dicycle_factorization(d: Digraph) -> DicycleFactorization:
    """Split a d-regular digraph into d dicycle factors by repeated perfect matching."""
    deg = require_regular(d)
    if deg < 1:
        raise FactorizationError("a 0-regular digraph has no dicycle factors")
    adj = [d.successors(u) for u in range(d.n)]
    factors = []
    for _ in range(deg):
        match_l = maximum_matching(adj, d.n)
        if -1 in match_l:
            # cannot happen for regular input
            raise _hall_witness(adj, match_l, d.n)
        factors.append(Permutation(tuple(match_l)))
        adj = [[v for v in heads if v != match_l[u]] for u, heads in enumerate(adj)]
    return DicycleFactorization(tuple(factors))


def orbits(p: Permutation) -> list[list[int]]:
    """Cycles of ``p``, each starting at its minimum, sorted by that minimum."""
    seen = [False] * p.size
    cycles = []
    for start in range(p.size):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = p.images[i]
        cycles.append(cycle)
    return cycles


def random_regular_digraph(n: int, d: int, seed: int) -> Digraph:
    """Union of ``d`` arc-disjoint uniformly random permutations of ``0..n-1``.

    Each permutation is redrawn (Fisher-Yates via numpy's ``Generator``) while
    it shares an arc with one already accepted, at most 1000 times.  The output
    is not uniform over d-regular digraphs.
    """
    if d < 1:
        raise DigraphError(f"degree must be at least 1, got {d}")
    if d > n:
        raise DigraphError(f"a {d}-regular simple digraph needs at least {d} vertices, got {n}")
    rng = np.random.default_rng(seed)
    taken = np.zeros((n, n), dtype=bool)
    rows = np.arange(n)
    arcs = []
    for k in range(d):
        for _ in range(_MAX_RETRIES):
            perm = rng.permutation(n)
            if not taken[rows, perm].any():
                break
        else:
            raise DigraphError(
                f"gave up after {_MAX_RETRIES} draws for factor {k} (n={n}, d={d}, seed={seed})"
            )
        taken[rows, perm] = True
        arcs.extend(zip(rows.tolist(), perm.tolist()))
    return Digraph(n, arcs)


def adjacency_sum(f: DicycleFactorization) -> ZeroOneMatrix:
    """Entrywise sum of the factor matrices."""
    total = np.zeros((f.n, f.n), dtype=np.int64)
    for m in f.matrices():
        total += m.array
    return ZeroOneMatrix._wrap(total)


def is_factorization_of(f: DicycleFactorization, d: Digraph) -> bool:
    return adjacency_sum(f) == adjacency_matrix(d)
