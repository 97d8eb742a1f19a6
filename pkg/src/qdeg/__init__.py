"""qdeg: minimal degrees in quantum products of Schubert classes on G/P.

Computes curve neighborhoods z_d^P, the distance fronts delta_P(w) and
delta_P(u, v), Kostant's cascade of orthogonal roots and the closed d_X
formulas, and exhaustively verifies the structural theorems on small-rank
root systems.
"""

from .cascade import (
    Cascade,
    ChainCascade,
    alpha_beta_phi,
    cascade,
    chain_cascade,
    d_gpbeta,
    d_x,
    delta_circ,
    is_locally_high,
    is_strongly_orthogonal,
    w_o_of,
)
from .curveneighborhood import (
    CurveNbhdResult,
    curve_neighborhood,
    equalwx_criterion,
    is_cosmall,
    is_very_cosmall,
    z,
    z_lift_check,
)
from .degreelattice import (
    ChernVector,
    Degree,
    c1,
    d_of_root,
    extended_support,
    greedy_decomposition,
    induce,
    maximal_roots,
    minimal_elements,
    naive_support,
    restrict,
)
from .distance import (
    DegreeFront,
    delta_uv,
    delta_w,
    exceptional_roots,
    verify_suite,
)
from .errors import (
    ConfigurationError,
    DomainError,
    InvariantViolationError,
    QdegError,
    ResourceError,
    VerificationError,
)
from .rootsystem import RootSystem, build_root_system, subsystem
from .weylgroup import CosetRep, Parabolic, WeylGroup, weyl_group

__version__ = "0.1.0"
