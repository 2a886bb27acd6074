"""Complete digraphs with loops, de Bruijn digraphs and their line-digraph form."""

from __future__ import annotations

from itertools import product

from .digraph import Digraph, DigraphError, adjacency_matrix
from .factorization import DicycleFactorization, dicycle_factorization
from .line import (
    VerificationReport,
    canonical_labeling,
    iterated_line_digraph,
    structured_product,
)
from .matrix import Permutation, similarity

__all__ = [
    "complete_digraph_with_loops",
    "de_bruijn",
    "word_string",
    "circulant_factorization",
    "fya_relabeling",
    "verify_debruijn_remark",
]

Word = tuple[int, ...]


def complete_digraph_with_loops(d: int) -> Digraph:
    """``K_d^+``: every ordered pair of vertices, loops included."""
    if d < 1:
        raise DigraphError(f"K_d^+ needs d >= 1, got {d}")
    return Digraph(d, [(u, v) for u in range(d) for v in range(d)])


def de_bruijn(d: int, k: int) -> tuple[Digraph, list[Word]]:
    """``B(d, k)`` with vertices numbered by the lexicographic order of their words.

    Word ``w`` has index ``sum(w[i] * d**(k-1-i))``; its successors are
    ``w[1:] + (a,)`` for every letter ``a``.
    """
    if d < 1 or k < 1:
        raise DigraphError(f"de Bruijn digraph needs d >= 1 and k >= 1, got d={d}, k={k}")
    words = list(product(range(d), repeat=k))
    size = d**k
    arcs = []
    for idx in range(size):
        shifted = (idx * d) % size
        arcs.extend((idx, shifted + a) for a in range(d))
    return Digraph(size, arcs), words


def word_string(word: Word, d: int) -> str:
    if d <= 10:
        return "".join(str(x) for x in word)
    return "-".join(str(x) for x in word)


def word_index(word: Word, d: int) -> int:
    idx = 0
    for x in word:
        idx = idx * d + x
    return idx


def circulant_factorization(d: int) -> DicycleFactorization:
    """Shifts ``i -> i + l (mod d)`` for ``l = 0..d-1``; they sum to ``J_d``."""
    if d < 1:
        raise DigraphError(f"d must be >= 1, got {d}")
    return DicycleFactorization(
        tuple(Permutation(tuple((i + l) % d for i in range(d))) for l in range(d))
    )


def fya_relabeling(d: int, k: int) -> tuple[Permutation, VerificationReport]:
    """Relabel ``L^{k-1}(K_d^+)`` onto ``B(d, k)`` by reading each vertex as a walk.

    A vertex of the iterated line digraph is a walk ``v_1 -> ... -> v_k`` in
    ``K_d^+``; it is sent to the word ``v_1 ... v_k``.
    """
    base = complete_digraph_with_loops(d)
    line = iterated_line_digraph(base, k - 1)
    p = Permutation(tuple(word_index(w, d) for w in line.walks))
    db, _ = de_bruijn(d, k)
    lhs = similarity(p, adjacency_matrix(line.digraph))
    report = VerificationReport(
        "fya",
        lhs,
        adjacency_matrix(db),
        checks={"vertex_count": line.digraph.n == d**k == db.n},
        params={"d": d, "k": k},
    )
    return p, report


def verify_debruijn_remark(
    d: int, f: DicycleFactorization | None = None, name: str = "circulant"
) -> VerificationReport:
    """Relabel ``B(d, 2)`` so its matrix is ``(J_d ⊗ I_d) · ⊕ M(H_i)`` for the factorization ``f``.

    ``f`` defaults to :func:`circulant_factorization`.  The relabeling is the
    canonical labeling of ``L(K_d^+)`` composed with the inverse of the
    walk-to-word map.
    """
    kplus = complete_digraph_with_loops(d)
    if f is None:
        f = circulant_factorization(d)
    to_word, _ = fya_relabeling(d, 2)
    to_label = canonical_labeling(kplus, f).as_permutation()
    q = to_label.compose(to_word.inverse())
    db, _ = de_bruijn(d, 2)
    return VerificationReport(
        f"remark[{name}]",
        similarity(q, adjacency_matrix(db)),
        structured_product(f),
        params={"d": d},
    )


def remark_reports(d: int) -> list[VerificationReport]:
    """The remark checked with the circulant and the matching-derived factorizations."""
    kplus = complete_digraph_with_loops(d)
    return [
        verify_debruijn_remark(d, circulant_factorization(d), "circulant"),
        verify_debruijn_remark(d, dicycle_factorization(kplus), "matching"),
    ]
