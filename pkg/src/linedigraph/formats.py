"""Text formats: edge lists, DOT, Matrix Market, dense matrices and factorizations.

All vertex numbers are 0-based except in Matrix Market, whose standard is 1-based.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .digraph import Digraph, DigraphError, adjacency_matrix, from_adjacency_matrix
from .factorization import DicycleFactorization
from .matrix import Permutation, ZeroOneMatrix

MM_HEADER = "%%MatrixMarket matrix coordinate integer general"


class FormatError(DigraphError):
    pass


def _data_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _ints(line: str, count: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"{what}: expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"{what}: expected integers, got {line!r}") from None


def write_edgelist(d: Digraph) -> str:
    lines = [f"{d.n} {d.m}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs)
    return "\n".join(lines) + "\n"


def read_edgelist(text: str) -> Digraph:
    lines = _data_lines(text)
    if not lines:
        raise FormatError("edge list is empty")
    n, m = _ints(lines[0], 2, "edge list header")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"edge list header announces {m} arcs, found {len(body)}")
    arcs = [tuple(_ints(ln, 2, "arc")) for ln in body]
    d = Digraph(n, arcs)
    if d.m != m:
        raise FormatError("edge list contains repeated arcs")
    return d


def write_dot(d: Digraph, labels: Sequence[str] | None = None, name: str = "") -> str:
    head = f"digraph {name} {{" if name else "digraph {"
    lines = [head]
    if labels is not None:
        lines.extend(f'  {v} [label="{labels[v]}"];' for v in range(d.n))
    else:
        # isolated vertices would otherwise vanish
        lines.extend(f"  {v};" for v in range(d.n) if d.out_degrees[v] == 0 and d.in_degrees[v] == 0)
    lines.extend(f"  {u} -> {v};" for u, v in d.arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_matrix_market(m: ZeroOneMatrix) -> str:
    nz = np.argwhere(m.array)
    lines = [MM_HEADER, f"{m.rows} {m.cols} {len(nz)}"]
    lines.extend(f"{i + 1} {j + 1} {int(m[i, j])}" for i, j in nz.tolist())
    return "\n".join(lines) + "\n"


def read_matrix_market(text: str) -> ZeroOneMatrix:
    raw = text.splitlines()
    if not raw or not raw[0].lower().startswith("%%matrixmarket"):
        raise FormatError("missing %%MatrixMarket header")
    banner = raw[0].split()
    if len(banner) < 5 or banner[2].lower() != "coordinate" or banner[3].lower() not in ("integer", "pattern"):
        raise FormatError(f"unsupported Matrix Market banner {raw[0]!r}")
    pattern = banner[3].lower() == "pattern"
    lines = [ln.strip() for ln in raw[1:] if ln.strip() and not ln.startswith("%")]
    if not lines:
        raise FormatError("Matrix Market size line missing")
    rows, cols, nnz = _ints(lines[0], 3, "size line")
    if len(lines) - 1 != nnz:
        raise FormatError(f"size line announces {nnz} entries, found {len(lines) - 1}")
    a = np.zeros((rows, cols), dtype=np.int64)
    for ln in lines[1:]:
        if pattern:
            i, j = _ints(ln, 2, "entry")
            v = 1
        else:
            i, j, v = _ints(ln, 3, "entry")
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise FormatError(f"entry ({i}, {j}) outside a {rows}x{cols} matrix")
        if v < 0:
            raise FormatError(f"negative entry at ({i}, {j})")
        a[i - 1, j - 1] = v
    return ZeroOneMatrix(a)


def read_matrix_market_digraph(text: str) -> Digraph:
    return from_adjacency_matrix(read_matrix_market(text))


def write_dense(m: ZeroOneMatrix) -> str:
    return "".join(" ".join(str(x) for x in row) + "\n" for row in m.tolist())


def read_dense(text: str) -> ZeroOneMatrix:
    rows = [[int(x) for x in ln.split()] for ln in _data_lines(text)]
    if len({len(r) for r in rows}) > 1:
        raise FormatError("dense matrix rows have different lengths")
    return ZeroOneMatrix(rows)


def write_factorization(f: DicycleFactorization) -> str:
    lines = [f"{f.d} {f.n}"]
    lines.extend(" ".join(str(x) for x in p.images) for p in f.factors)
    return "\n".join(lines) + "\n"


def read_factorization(text: str) -> DicycleFactorization:
    lines = _data_lines(text)
    if not lines:
        raise FormatError("factorization is empty")
    d, n = _ints(lines[0], 2, "factorization header")
    if len(lines) - 1 != d:
        raise FormatError(f"header announces {d} factors, found {len(lines) - 1}")
    try:
        return DicycleFactorization(
            tuple(Permutation(tuple(_ints(ln, n, "factor"))) for ln in lines[1:])
        )
    except ValueError as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError(str(e)) from None


def write_adjacency(d: Digraph, fmt: str, labels: Sequence[str] | None = None) -> str:
    if fmt == "edgelist":
        return write_edgelist(d)
    if fmt == "dot":
        return write_dot(d, labels)
    if fmt == "mm":
        return write_matrix_market(adjacency_matrix(d))
    raise FormatError(f"unknown output format {fmt!r}")


def read_digraph(text: str, fmt: str) -> Digraph:
    if fmt == "edgelist":
        return read_edgelist(text)
    if fmt == "mm":
        return read_matrix_market_digraph(text)
    if fmt == "dot":
        raise FormatError("DOT is an export-only format")
    raise FormatError(f"unknown input format {fmt!r}")


def detect_format(path: str) -> str:
    """Input format from a file name: ``.mm`` Matrix Market, ``.dot`` (rejected later), else edge list."""
    lower = path.lower()
    if lower.endswith(".mm") or lower.endswith(".mtx"):
        return "mm"
    if lower.endswith(".dot") or lower.endswith(".gv"):
        return "dot"
    return "edgelist"
