"""Line digraphs of regular digraphs and the Kronecker block structure of their adjacency matrices."""

from .digraph import (
    Digraph,
    DigraphError,
    NotRegularError,
    adjacency_matrix,
    build_digraph,
    dicycle,
    disjoint_union,
    from_adjacency_matrix,
    regularity,
)
from .factorization import (
    DicycleFactorization,
    NoPerfectMatching,
    dicycle_factorization,
    orbits,
    perfect_matching,
    random_regular_digraph,
)
from .line import (
    ArcLabeling,
    LineDigraphResult,
    VerificationReport,
    canonical_labeling,
    growth,
    iterated_line_digraph,
    lemma2_isomorphism,
    line_digraph,
    spiked_dicycle,
    structured_product,
    verify_growth_decomposition,
    verify_theorem,
)
from .matrix import (
    Permutation,
    ZeroOneMatrix,
    direct_sum,
    identity,
    is_permutation_matrix,
    kron,
    matmul,
    ones,
    similarity,
    zeros,
)
from .topologies import (
    circulant_factorization,
    complete_digraph_with_loops,
    de_bruijn,
    fya_relabeling,
    verify_debruijn_remark,
)

__version__ = "0.1.0"
