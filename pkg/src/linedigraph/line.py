"""Line digraphs and the block structure of their adjacency matrices.

For a d-regular digraph ``D`` on ``n`` vertices with dicycle factorization
``H_0, ..., H_{d-1}``, labelling the arc ``(u, v)`` of ``H_j`` by ``j*n + v``
turns ``M(L(D))`` into ``(J_d ⊗ I_n) · (M(H_0) ⊕ ... ⊕ M(H_{d-1}))``.  This
module builds both sides and checks them entrywise, together with the growth
digraphs and spiked dicycles used to explain the identity.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np

from .digraph import (
    Digraph,
    DigraphError,
    adjacency_matrix,
    disjoint_union,
    require_regular,
)
from .factorization import DicycleFactorization, dicycle_factorization, orbits
from .matrix import (
    Permutation,
    ZeroOneMatrix,
    direct_sum,
    first_mismatch,
    identity,
    kron,
    matmul,
    ones,
    similarity,
)

__all__ = [
    "LineDigraphResult",
    "ArcLabeling",
    "VerificationReport",
    "GrowthResult",
    "line_digraph",
    "iterated_line_digraph",
    "canonical_labeling",
    "canonical_line_digraph",
    "structured_product",
    "verify_theorem",
    "growth",
    "factor_growth",
    "spiked_dicycle",
    "lemma2_isomorphism",
    "verify_growth_decomposition",
]


@dataclass(frozen=True)
class LineDigraphResult:
    """A (possibly iterated) line digraph with provenance.

    ``origin[a]`` is the arc id, in the digraph one step back, that vertex
    ``a`` stands for; ``walks[a]`` is the walk in the base digraph that it
    stands for (``k + 1`` vertices after ``k`` iterations).
    """

    digraph: Digraph
    origin: tuple[int, ...]
    walks: tuple[tuple[int, ...], ...]
    iterations: int = 1


@dataclass(frozen=True)
class ArcLabeling:
    digraph: Digraph
    factorization: DicycleFactorization
    labels: tuple[int, ...]

    def __getitem__(self, arc_id: int) -> int:
        return self.labels[arc_id]

    def label_of(self, u: int, v: int) -> int:
        return self.labels[self.digraph.arc_id(u, v)]

    def as_permutation(self) -> Permutation:
        """Map from line-digraph vertices (arc ids) to labels."""
        return Permutation(self.labels)


@dataclass
class VerificationReport:
    """Outcome of an exact matrix-equality check."""

    claim: str
    lhs: ZeroOneMatrix
    rhs: ZeroOneMatrix
    equal: bool = field(init=False)
    mismatch: tuple[int, int] | None = field(init=False)
    # extra named sub-checks; all must hold for the claim to hold
    checks: dict[str, bool] = field(default_factory=dict)
    params: dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        self.mismatch = first_mismatch(self.lhs, self.rhs)
        self.equal = self.mismatch is None and all(self.checks.values())

    def __bool__(self) -> bool:
        return self.equal

    def summary_line(self) -> str:
        line = f"CLAIM {self.claim} RESULT {'equal' if self.equal else 'mismatch'}"
        if self.mismatch is not None:
            line += f" AT {self.mismatch[0]} {self.mismatch[1]}"
        return line

    def to_text(self) -> str:
        out = [f"claim:    {self.claim}"]
        if self.params:
            out.append("params:   " + ", ".join(f"{k}={v}" for k, v in self.params.items()))
        out.append(f"lhs:      {self.lhs.rows}x{self.lhs.cols}")
        out.append(f"rhs:      {self.rhs.rows}x{self.rhs.cols}")
        for name, ok in self.checks.items():
            out.append(f"check:    {name} {'ok' if ok else 'FAILED'}")
        if self.mismatch is not None:
            r, c = self.mismatch
            lv = int(self.lhs[r, c]) if r < self.lhs.rows and c < self.lhs.cols else None
            rv = int(self.rhs[r, c]) if r < self.rhs.rows and c < self.rhs.cols else None
            out.append(f"mismatch: ({r}, {c}) lhs={lv} rhs={rv}")
        out.append(f"result:   {'equal' if self.equal else 'mismatch'}")
        return "\n".join(out)


def line_digraph(d: Digraph) -> LineDigraphResult:
    """Vertices are the arcs of ``d`` in arc-id order; ``a -> b`` iff head(a) == tail(b)."""
    if d.m == 0:
        raise DigraphError("line digraph undefined for empty arc set")
    arcs = []
    for a, (_, v) in enumerate(d.arcs):
        arcs.extend((a, b) for b in d.out_arc_ids(v))
    return LineDigraphResult(
        digraph=Digraph(d.m, arcs),
        origin=tuple(range(d.m)),
        walks=d.arcs,
        iterations=1,
    )


def iterated_line_digraph(d: Digraph, k: int) -> LineDigraphResult:
    if k < 0:
        raise ValueError(f"iteration count must be nonnegative, got {k}")
    if k == 0:
        return LineDigraphResult(
            digraph=d,
            origin=tuple(range(d.n)),
            walks=tuple((v,) for v in range(d.n)),
            iterations=0,
        )
    current = line_digraph(d)
    walks = current.walks
    for step in range(2, k + 1):
        nxt = line_digraph(current.digraph)
        # an arc (a, b) of the previous level extends walk a by the last vertex of walk b
        walks = tuple(walks[a] + (walks[b][-1],) for a, b in current.digraph.arcs)
        current = LineDigraphResult(nxt.digraph, nxt.origin, walks, step)
    return current


def canonical_labeling(d: Digraph, f: DicycleFactorization) -> ArcLabeling:
    """Label arc ``(u, v)`` of factor ``j`` by ``j*n + v``."""
    f.check_against(d)
    which = f.factor_of_arc()
    labels = tuple(which[(u, v)] * d.n + v for u, v in d.arcs)
    return ArcLabeling(d, f, labels)


def canonical_line_digraph(d: Digraph, f: DicycleFactorization | None = None) -> Digraph:
    """``L(d)`` with its vertices renamed by the canonical labeling."""
    if f is None:
        f = dicycle_factorization(d)
    lab = canonical_labeling(d, f)
    return line_digraph(d).digraph.relabel(lab.labels)


def structured_product(f: DicycleFactorization) -> ZeroOneMatrix:
    """``(J_d ⊗ I_n) · (M(H_0) ⊕ ... ⊕ M(H_{d-1}))``."""
    left = kron(ones(f.d), identity(f.n))
    right = direct_sum(f.matrices())
    return matmul(left, right)


def verify_theorem(d: Digraph, f: DicycleFactorization | None = None) -> VerificationReport:
    require_regular(d)
    if f is None:
        f = dicycle_factorization(d)
    line = line_digraph(d)
    lab = canonical_labeling(d, f)
    lhs = similarity(lab.as_permutation(), adjacency_matrix(line.digraph))
    rhs = structured_product(f)
    return VerificationReport(
        "theorem", lhs, rhs, params={"n": d.n, "d": f.d}
    )


@dataclass(frozen=True)
class GrowthResult:
    """A growth digraph.

    Vertices ``0..n-1`` are those of the base digraph; vertex ``n + t`` is a
    new sink standing for the base arc ``spike_arcs[t]`` that the spanning
    subdigraph left out.
    """

    digraph: Digraph
    spike_arcs: tuple[tuple[int, int], ...]

    def spikes_of(self, v: int) -> list[int]:
        base = self.digraph.n - len(self.spike_arcs)
        return [base + t for t, (u, _) in enumerate(self.spike_arcs) if u == v]


def growth(d: Digraph, h: Iterable[tuple[int, int]]) -> GrowthResult:
    """Keep the arcs of ``h`` and give every vertex one new sink per missing out-arc."""
    h_arcs = sorted({(int(u), int(v)) for u, v in h})
    base = set(d.arcs)
    for arc in h_arcs:
        if arc not in base:
            raise DigraphError(f"arc {arc} is not an arc of the base digraph")
        if not (0 <= arc[0] < d.n and 0 <= arc[1] < d.n):
            raise DigraphError(f"arc {arc} leaves the vertex set")
    keep = set(h_arcs)
    spike_arcs = tuple(a for a in d.arcs if a not in keep)
    arcs = list(h_arcs)
    arcs.extend((u, d.n + t) for t, (u, _) in enumerate(spike_arcs))
    return GrowthResult(Digraph(d.n + len(spike_arcs), arcs), spike_arcs)


def _proof_relabeling(g: GrowthResult, f: DicycleFactorization, j: int) -> Permutation:
    # vertex i of H_j -> j*n + i; the sink for arc (i, m) of H_l -> l*n + m
    n = f.n
    which = f.factor_of_arc()
    images = [j * n + i for i in range(n)]
    images.extend(which[arc] * n + arc[1] for arc in g.spike_arcs)
    return Permutation(tuple(images))


def factor_growth(d: Digraph, f: DicycleFactorization, j: int) -> ZeroOneMatrix:
    """``M`` of the growth of ``d`` by factor ``j``, with vertices named like the line digraph.

    The ``nd`` vertices are ``l*n + m`` for "factor ``l``, vertex ``m``"; the
    only nonzero block-row is row ``j``, equal to ``[M(H_0) ... M(H_{d-1})]``.
    """
    g = growth(d, f[j].arcs())
    return similarity(_proof_relabeling(g, f, j), adjacency_matrix(g.digraph))


def spiked_dicycle(n: int, s: int) -> Digraph:
    """Directed ``n``-cycle ``0..n-1`` with ``s`` sinks ``n + i*s + t`` hanging off vertex ``i``."""
    if n < 1:
        raise DigraphError(f"a dicycle needs at least one vertex, got n={n}")
    if s < 0:
        raise DigraphError(f"spike count must be nonnegative, got {s}")
    arcs = [(i, (i + 1) % n) for i in range(n)]
    arcs.extend((i, n + i * s + t) for i in range(n) for t in range(s))
    return Digraph(n * (1 + s), arcs)


def _head_map(d: Digraph) -> Permutation:
    """Send each arc to its head; a bijection when every vertex has in-degree one."""
    return Permutation(tuple(v for _, v in d.arcs))


def lemma2_isomorphism(n: int, s: int) -> tuple[Permutation, VerificationReport]:
    """Explicit isomorphism from ``L(D)`` onto ``D`` for the ``s``-spiked ``n``-dicycle ``D``.

    Cycle arc ``(i-1, i)`` goes to ``i`` and spike arc ``(i, w)`` goes to ``w``;
    both are "arc to its head".
    """
    d = spiked_dicycle(n, s)
    line = line_digraph(d)
    p = _head_map(d)
    lhs = similarity(p, adjacency_matrix(line.digraph))
    return p, VerificationReport(
        "lemma2", lhs, adjacency_matrix(d), params={"n": n, "s": s}
    )


def _spiked_union_map(g: GrowthResult, cycles: list[list[int]], s: int) -> Permutation:
    # vertex of the union of spiked dicycles -> vertex of the growth digraph
    images = []
    for cycle in cycles:
        spikes = [g.spikes_of(v) for v in cycle]
        images.extend(cycle)
        for sp in spikes:
            if len(sp) != s:
                raise DigraphError("growth digraph does not have uniform spike counts")
            images.extend(sp)
    return Permutation(tuple(images))


def verify_growth_decomposition(
    d: Digraph, f: DicycleFactorization | None = None
) -> VerificationReport:
    """Check that the growth digraphs of the factors assemble into ``M(L(D))``.

    Sub-checks: the growth matrices have pairwise disjoint supports, each has a
    single nonzero block-row equal to ``[M(H_0) ... M(H_{d-1})]``, and each growth
    digraph is a disjoint union of spiked dicycles over the orbits of its factor
    and is isomorphic to its own line digraph.  The report compares the sum of
    growth matrices with the structured product.
    """
    deg = require_regular(d)
    if f is None:
        f = dicycle_factorization(d)
    f.check_against(d)
    n = d.n
    product = structured_product(f)
    mats = [factor_growth(d, f, j) for j in range(deg)]

    covered = np.zeros(product.shape, dtype=np.int64)
    for m in mats:
        covered += m.support()
    disjoint = bool(np.all(covered <= 1))

    block_rows = True
    for j, m in enumerate(mats):
        rows = slice(j * n, (j + 1) * n)
        outside = m.array.copy()
        outside[rows, :] = 0
        if outside.any() or not np.array_equal(m.array[rows, :], product.array[rows, :]):
            block_rows = False

    spiked = True
    self_line = True
    for j in range(deg):
        g = growth(d, f[j].arcs())
        cycles = orbits(f[j])
        union, _ = disjoint_union([spiked_dicycle(len(c), deg - 1) for c in cycles])
        to_growth = _spiked_union_map(g, cycles, deg - 1)
        if similarity(to_growth, adjacency_matrix(union)) != adjacency_matrix(g.digraph):
            spiked = False
        if not all(lemma2_isomorphism(len(c), deg - 1)[1].equal for c in cycles):
            self_line = False
        # the per-orbit isomorphisms glue to "arc -> head" on the whole growth digraph
        lg = line_digraph(g.digraph)
        if similarity(_head_map(g.digraph), adjacency_matrix(lg.digraph)) != adjacency_matrix(
            g.digraph
        ):
            self_line = False

    total = mats[0]
    for m in mats[1:]:
        total = total + m
    return VerificationReport(
        "decomposition",
        total,
        product,
        checks={
            "disjoint_supports": disjoint,
            "block_rows": block_rows,
            "spiked_orbits": spiked,
            "self_line_isomorphic": self_line,
        },
        params={"n": n, "d": deg},
    )
