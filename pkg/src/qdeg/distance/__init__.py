"""Distance functions, exceptional roots, and the verification suites."""

from .core import (
    AdjacencyGraph,
    ChainWitness,
    DegreeFront,
    adjacency_graph,
    chain_front_exact,
    chain_witness,
    coset_order,
    delta_uv,
    delta_w,
)
from .exceptional import (
    ExceptionalReport,
    exceptional_roots,
    is_exceptional,
    orthogonal_components,
    verify_lemma_technical,
    verify_lemma_technical2,
)
from .suites import (
    CheckResult,
    FrontCoverage,
    SuiteReport,
    front_coverage,
    suite_names,
    verify_suite,
)

__all__ = [
    "AdjacencyGraph",
    "ChainWitness",
    "CheckResult",
    "DegreeFront",
    "ExceptionalReport",
    "FrontCoverage",
    "SuiteReport",
    "front_coverage",
    "adjacency_graph",
    "chain_front_exact",
    "chain_witness",
    "coset_order",
    "delta_uv",
    "delta_w",
    "exceptional_roots",
    "is_exceptional",
    "orthogonal_components",
    "suite_names",
    "verify_lemma_technical",
    "verify_lemma_technical2",
    "verify_suite",
]
