"""Exact and approximate lower bounds for face vectors of simplicial complexes.

The exact machinery (binomial cascades and their shadow bounds, plus the
colored variant built on Turán clique counts) is paired with closed-form
approximations and with explicit small complexes that serve as brute-force
oracles.  The kkbounds command line exposes bound evaluation, cascade display,
face-vector validation, CSV sweeps, and a self-test of the core invariants.
"""

from .approx import (
    BoundReport,
    SymmetricChain,
    best_r,
    bound_report,
    colorapprox_bound,
    flag_r,
    lovasz_bound,
    lovasz_x,
    noreasy_bound,
    symmetric_chain,
    withoutr_bound,
)
from .binomials import (
    DEFAULT_ORACLE_LIMIT,
    TuranGraph,
    binom_real,
    binomial,
    turan_clique_count_oracle,
    turan_coefficient,
    turan_graph,
)
from .cascade import (
    CascadeRep,
    FaceVector,
    ValidationResult,
    cascade_decompose,
    cascade_evaluate,
    shadow_bound,
    validate_face_vector,
)
from .colored import (
    ColoredCascadeRep,
    colored_cascade_decompose,
    colored_cascade_evaluate,
    colored_shadow_bound,
    validate_colored_face_vector,
)
from .complexes import (
    DEFAULT_MAX_FACES,
    DEFAULT_VERTEX_LIMIT,
    Graph,
    SimplicialComplex,
    clique_complex,
    f_vector,
    from_facets,
    is_flag,
    is_r_colorable,
    one_skeleton,
    random_complex,
    realize_face_vector,
    replicate,
    revlex_complex,
    revlex_ksets,
    revlex_precedes,
    serialize,
    turan_clique_complex,
)

__all__ = [
    "BoundReport",
    "CascadeRep",
    "ColoredCascadeRep",
    "DEFAULT_MAX_FACES",
    "DEFAULT_ORACLE_LIMIT",
    "DEFAULT_VERTEX_LIMIT",
    "FaceVector",
    "Graph",
    "SimplicialComplex",
    "SymmetricChain",
    "TuranGraph",
    "ValidationResult",
    "best_r",
    "binom_real",
    "binomial",
    "bound_report",
    "cascade_decompose",
    "cascade_evaluate",
    "clique_complex",
    "colorapprox_bound",
    "colored_cascade_decompose",
    "colored_cascade_evaluate",
    "colored_shadow_bound",
    "f_vector",
    "flag_r",
    "from_facets",
    "is_flag",
    "is_r_colorable",
    "lovasz_bound",
    "lovasz_x",
    "noreasy_bound",
    "one_skeleton",
    "random_complex",
    "realize_face_vector",
    "replicate",
    "revlex_complex",
    "revlex_ksets",
    "revlex_precedes",
    "serialize",
    "shadow_bound",
    "symmetric_chain",
    "turan_clique_complex",
    "turan_clique_count_oracle",
    "turan_coefficient",
    "turan_graph",
    "validate_colored_face_vector",
    "validate_face_vector",
    "withoutr_bound",
]
