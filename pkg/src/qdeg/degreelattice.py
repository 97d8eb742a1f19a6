"""The degree lattice H_2(G/P): d(alpha), c_1, greedy decompositions, supports.

A degree is a nonnegative integer vector over Delta \\ Delta_P, the image of
the coroot lattice modulo Z Delta_P^vee.  The partial order is coefficientwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .rootsystem import RootSystem
from .weylgroup import Parabolic


@dataclass(frozen=True)
class Degree:
    """An effective class in H_2(G/P), coefficients indexed by parabolic.free."""

    parabolic: Parabolic
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != len(self.parabolic.free):
            raise DomainError("degree coefficients do not match the parabolic")
        if any(c < 0 for c in self.coeffs):
            raise DomainError("degrees are effective: coefficients must be >= 0")

    @classmethod
    def zero(cls, parabolic: Parabolic) -> "Degree":
        return cls(parabolic, (0,) * len(parabolic.free))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "Degree"):
        if self.parabolic != other.parabolic:
            raise DomainError("degrees over different parabolics")

    def leq(self, other: "Degree") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def __add__(self, other: "Degree") -> "Degree":
        self._check(other)
        return Degree(self.parabolic, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Degree") -> "Degree":
        self._check(other)
        return Degree(self.parabolic, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def coeff_at(self, beta: int) -> int:
        """(omega_beta, d) for a free simple root beta (ambient index)."""
        try:
            return self.coeffs[self.parabolic.free.index(beta)]
        except ValueError:
            raise DomainError(f"alpha_{beta + 1} lies in Delta_P") from None


@dataclass(frozen=True)
class ChernVector:
    """c_1(X) on the fundamental-weight basis omega_beta, beta outside Delta_P."""

    parabolic: Parabolic
    coeffs: tuple

    def pair(self, d: Degree) -> int:
        if d.parabolic != self.parabolic:
            raise DomainError("degree over a different parabolic")
        return sum(a * b for a, b in zip(self.coeffs, d.coeffs))


def d_of_root(system: RootSystem, parabolic: Parabolic, alpha) -> Degree:
    """d(alpha): the image of alpha^vee in H_2(G/P); zero iff alpha in R_P^+."""
    if not system.is_positive_root(alpha):
        raise DomainError(f"{alpha} is not a positive root")
    cov = system.coroot(alpha)
    return Degree(parabolic, tuple(cov[i] for i in parabolic.free))


def in_r_p(system: RootSystem, parabolic: Parabolic, alpha) -> bool:
    return system.support(alpha) <= parabolic.delta_p


def c1(system: RootSystem, parabolic: Parabolic) -> ChernVector:
    """c_1(X) = sum of the roots outside R_P, on the fundamental weights."""
    total = [0] * system.rank
    for alpha in system.positive_roots:
        if not in_r_p(system, parabolic, alpha):
            for i, c in enumerate(alpha):
                total[i] += c
    weight = tuple(total)
    for j in parabolic.delta_p:
        if system.pair_simple_coroot(weight, j) != 0:
            raise DomainError("c_1 pairs nontrivially inside Delta_P")
    return ChernVector(
        parabolic,
        tuple(system.pair_simple_coroot(weight, j) for j in parabolic.free),
    )


def maximal_roots(system: RootSystem, parabolic: Parabolic, d: Degree) -> tuple:
    """Maximal elements of {alpha in R^+ \\ R_P^+ : d(alpha) <= d}."""
    inside = [
        alpha
        for alpha in system.positive_roots
        if not in_r_p(system, parabolic, alpha)
        and d_of_root(system, parabolic, alpha).leq(d)
    ]
    out = [
        a for a in inside if not any(a != b and system.root_leq(a, b) for b in inside)
    ]
    return tuple(sorted(out))


def greedy_decomposition(system: RootSystem, parabolic: Parabolic, d: Degree) -> tuple:
    """Greedy decomposition of d; ties broken by the lex-largest coefficient vector.

    The multiset of entries is independent of the tie-break (checked in the
    property suites), so the choice only pins a deterministic representative.
    """
    out = []
    while not d.is_zero():
        candidates = maximal_roots(system, parabolic, d)
        alpha = max(candidates)
        out.append(alpha)
        d = d - d_of_root(system, parabolic, alpha)
    return tuple(out)


def all_greedy_decompositions(system: RootSystem, parabolic: Parabolic, d: Degree):
    """Every greedy decomposition of d, over all tie-break choices (test oracle)."""
    if d.is_zero():
        yield ()
        return
    for alpha in maximal_roots(system, parabolic, d):
        for tail in all_greedy_decompositions(
            system, parabolic, d - d_of_root(system, parabolic, alpha)
        ):
            yield (alpha,) + tail


def naive_support(parabolic: Parabolic, d: Degree) -> frozenset:
    """Delta(d) = {beta outside Delta_P : (omega_beta, d) > 0}."""
    return frozenset(b for b, c in zip(parabolic.free, d.coeffs) if c > 0)


def extended_support(system: RootSystem, parabolic: Parabolic, d: Degree) -> frozenset:
    """Union of the supports of the greedy entries of d."""
    out: frozenset = frozenset()
    for alpha in greedy_decomposition(system, parabolic, d):
        out |= system.support(alpha)
    return out


def is_connected_degree(system: RootSystem, parabolic: Parabolic, d: Degree) -> bool:
    return system.is_connected(extended_support(system, parabolic, d))


def alpha_of_connected(system: RootSystem, parabolic: Parabolic, d: Degree):
    """The first greedy entry of a connected degree, independent of tie-breaks."""
    if d.is_zero() or not is_connected_degree(system, parabolic, d):
        raise DomainError("degree is not a nonzero connected degree")
    return greedy_decomposition(system, parabolic, d)[0]


def restrict(d: Degree, q: Parabolic) -> Degree:
    """d_Q: drop the coordinates of Delta_Q \\ Delta_P.  Requires P <= Q."""
    p = d.parabolic
    if not q.contains(p):
        raise DomainError("restriction requires nested parabolics P <= Q")
    return Degree(q, tuple(d.coeff_at(b) for b in q.free))


def induce(system: RootSystem, e: Degree, p: Parabolic) -> Degree:
    """e^P = sum of d(alpha_i) over a greedy decomposition of e.  Requires P <= Q."""
    q = e.parabolic
    if not q.contains(p):
        raise DomainError("induction requires nested parabolics P <= Q")
    out = Degree.zero(p)
    for alpha in greedy_decomposition(system, q, e):
        out = out + d_of_root(system, p, alpha)
    return out


def minimal_elements(degrees: Iterable[Degree]) -> tuple:
    """The Pareto-minimal antichain of a finite set of degrees.

    Candidates are processed in increasing total order, so a candidate can
    only ever be dominated by an already-kept element.
    """
    ordered = sorted(set(degrees), key=lambda d: (sum(d.coeffs), d.coeffs))
    kept: list[Degree] = []
    for d in ordered:
        if not any(k.leq(d) for k in kept):
            kept.append(d)
    return tuple(sorted(kept, key=lambda d: d.coeffs))


def degree_box(parabolic: Parabolic, corner: Degree, pad: int = 0):
    """All degrees d <= corner + pad (componentwise), in lexicographic order."""
    ranges = [range(c + pad + 1) for c in corner.coeffs]
    for coeffs in itertools.product(*ranges):
        yield Degree(parabolic, coeffs)
