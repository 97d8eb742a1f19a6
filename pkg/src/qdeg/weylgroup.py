"""Weyl group elements, Bruhat order, parabolic cosets, and the Hecke monoid.

An element is canonically a rank x rank integer matrix, stored as a tuple of
rows where row i is the image of the i-th simple root in the root basis.
Equality of elements is equality of actions, which makes every operation
independent of reduced-word choices.  All operations are pure; caches are
per-WeylGroup dictionaries keyed by the immutable element tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import DomainError, ResourceError
from .rootsystem import RootSystem

#: default enumeration cap (elements or cosets)
ENUMERATION_CAP = 10**6

Weyl = tuple  # tuple of row tuples


@dataclass(frozen=True)
class Parabolic:
    """A standard parabolic subgroup, identified by its subset of Delta."""

    rank: int
    delta_p: frozenset

    @classmethod
    def from_indices(cls, rank: int, indices: Iterable) -> "Parabolic":
        s = frozenset(indices)
        if not s <= set(range(rank)):
            raise DomainError(f"{sorted(s)} is not a subset of Delta")
        return cls(rank, s)

    @cached_property
    def free(self) -> tuple:
        """Delta \\ Delta_P, sorted: the coordinates of H_2(G/P)."""
        return tuple(i for i in range(self.rank) if i not in self.delta_p)

    def contains(self, other: "Parabolic") -> bool:
        """P >= Q as parabolics, i.e. Delta_Q <= Delta_P."""
        return other.delta_p <= self.delta_p

    def is_maximal(self) -> bool:
        return len(self.free) == 1

    def maximal_above(self, beta: int) -> "Parabolic":
        """P_beta: the maximal parabolic omitting the free simple root beta."""
        if beta in self.delta_p:
            raise DomainError(f"alpha_{beta + 1} lies in Delta_P")
        return Parabolic(self.rank, frozenset(range(self.rank)) - {beta})

    def __repr__(self):  # pragma: no cover
        return f"Parabolic({sorted(i + 1 for i in self.delta_p)})"


@dataclass(frozen=True)
class CosetRep:
    element: Weyl
    parabolic: Parabolic
    flavor: str  # "minimal" or "maximal"


class WeylGroup:
    """Operations on W(R) with shared memoization.

    Instances are cheap; build one per root system and reuse it so that the
    length/Bruhat/Hecke caches amortize across computations.
    """

    def __init__(self, system: RootSystem):
        self.system = system
        rank = system.rank
        self.identity: Weyl = tuple(
            tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)
        )
        self._simple = tuple(
            tuple(system.reflect_simple(system.simple_roots[i], j) for i in range(rank))
            for j in range(rank)
        )
        self._length: dict = {self.identity: 0}
        self._inverse: dict = {self.identity: self.identity}
        self._word: dict = {self.identity: ()}
        self._bruhat: dict = {}
        self._longest: dict = {frozenset(): self.identity}
        self._reflection: dict = {}
        self.memo: dict = {}  # shared cross-module memoization

    # -- basic action ----------------------------------------------------------

    def apply(self, w: Weyl, coeffs) -> tuple:
        """Image of a root-basis vector under w."""
        rank = self.system.rank
        out = [0] * rank
        for i, c in enumerate(coeffs):
            if c:
                row = w[i]
                for j in range(rank):
                    out[j] += c * row[j]
        return tuple(out)

    @staticmethod
    def is_negative(coeffs) -> bool:
        """True for the image of a root lying in R^-; roots never mix signs."""
        for c in coeffs:
            if c < 0:
                return True
            if c > 0:
                return False
        raise DomainError("zero vector is not a root")

    def simple_reflection(self, j: int) -> Weyl:
        if not 0 <= j < self.system.rank:
            raise DomainError(f"no simple root with index {j}")
        return self._simple[j]

    def reflection(self, alpha) -> Weyl:
        """The reflection along any root alpha."""
        alpha = self.system.check_root(alpha)
        if alpha not in self._reflection:
            cov = self.system.coroot(alpha)
            rows = []
            for i in range(self.system.rank):
                p = self.system.pair(self.system.simple_roots[i], cov)
                rows.append(
                    tuple(
                        (1 if i == j else 0) - p * alpha[j]
                        for j in range(self.system.rank)
                    )
                )
            self._reflection[alpha] = tuple(rows)
        return self._reflection[alpha]

    def multiply(self, u: Weyl, v: Weyl) -> Weyl:
        """(u v)(x) = u(v(x))."""
        return tuple(self.apply(u, v[i]) for i in range(self.system.rank))

    def product(self, ws) -> Weyl:
        out = self.identity
        for w in ws:
            out = self.multiply(out, w)
        return out

    # -- length, words, inverses -----------------------------------------------

    def length(self, w: Weyl) -> int:
        if w not in self._length:
            self._length[w] = sum(
                1 for a in self.system.positive_roots if self.is_negative(self.apply(w, a))
            )
        return self._length[w]

    def right_descents(self, w: Weyl) -> tuple:
        return tuple(j for j in range(self.system.rank) if self.is_negative(w[j]))

    def reduced_word(self, w: Weyl) -> tuple:
        """Canonical reduced word: repeated least-index right-descent extraction."""
        if w not in self._word:
            word = []
            x = w
            while True:
                descents = self.right_descents(x)
                if not descents:
                    break
                j = descents[0]
                word.append(j)
                x = self.multiply(x, self._simple[j])
            if x != self.identity:
                raise DomainError("descent extraction did not terminate at identity")
            self._word[w] = tuple(reversed(word))
        return self._word[w]

    def inverse(self, w: Weyl) -> Weyl:
        if w not in self._inverse:
            out = self.identity
            for j in reversed(self.reduced_word(w)):
                out = self.multiply(out, self._simple[j])
            self._inverse[w] = out
        return self._inverse[w]

    def from_word(self, word: Iterable) -> Weyl:
        out = self.identity
        for j in word:
            out = self.multiply(out, self.simple_reflection(j))
        return out

    # -- longest elements and cosets --------------------------------------------

    def longest_element(self, subset) -> Weyl:
        """w_S for a subset S of Delta; w_o for the full set, identity for {}."""
        if isinstance(subset, Parabolic):
            subset = subset.delta_p
        s = frozenset(subset)
        if s not in self._longest:
            w = self.identity
            while True:
                ascent = next((j for j in sorted(s) if not self.is_negative(w[j])), None)
                if ascent is None:
                    break
                w = self.multiply(w, self._simple[ascent])
            self._longest[s] = w
        return self._longest[s]

    @cached_property
    def w_o(self) -> Weyl:
        return self.longest_element(frozenset(range(self.system.rank)))

    def coset_min(self, w: Weyl, parabolic: Parabolic) -> Weyl:
        """The minimal representative in wW_P."""
        members = sorted(parabolic.delta_p)
        while True:
            descent = next((j for j in members if self.is_negative(w[j])), None)
            if descent is None:
                return w
            w = self.multiply(w, self._simple[descent])

    def coset_min_rep(self, w: Weyl, parabolic: Parabolic) -> CosetRep:
        return CosetRep(self.coset_min(w, parabolic), parabolic, "minimal")

    def coset_max_rep(self, w: Weyl, parabolic: Parabolic) -> CosetRep:
        m = self.coset_min(w, parabolic)
        w_p = self.longest_element(parabolic)
        top = self.multiply(m, w_p)
        assert self.length(top) == self.length(m) + self.length(w_p)
        return CosetRep(top, parabolic, "maximal")

    def w_x(self, parabolic: Parabolic) -> Weyl:
        """w_X = w_o w_P, the minimal representative in w_o W_P."""
        return self.multiply(self.w_o, self.longest_element(parabolic))

    def dual(self, w: Weyl) -> Weyl:
        """w* = w_o w."""
        return self.multiply(self.w_o, w)

    # -- Bruhat order ------------------------------------------------------------

    def bruhat_leq(self, u: Weyl, v: Weyl) -> bool:
        """Descent recursion; the subword criterion is kept as a test oracle."""
        if u == v:
            return True
        key = (u, v)
        cached = self._bruhat.get(key)
        if cached is not None:
            return cached
        lu, lv = self.length(u), self.length(v)
        if lu >= lv:
            result = False
        else:
            inv_v = self.inverse(v)
            s = self._simple[
                next(j for j in range(self.system.rank) if self.is_negative(inv_v[j]))
            ]
            sv = self.multiply(s, v)
            su = self.multiply(s, u)
            if self.length(su) < lu:
                result = self.bruhat_leq(su, sv)
            else:
                result = self.bruhat_leq(u, sv)
        self._bruhat[key] = result
        return result

    def bruhat_leq_coset(self, u: Weyl, v: Weyl, parabolic: Parabolic) -> bool:
        """Bruhat order on W/W_P via minimal representatives."""
        return self.bruhat_leq(self.coset_min(u, parabolic), self.coset_min(v, parabolic))

    # -- Hecke monoid --------------------------------------------------------------

    def hecke_step(self, u: Weyl, j: int) -> Weyl:
        """u . s_j: multiply if the length goes up, absorb otherwise."""
        return self.multiply(u, self._simple[j]) if not self.is_negative(u[j]) else u

    def hecke_product(self, u: Weyl, v: Weyl) -> Weyl:
        for j in self.reduced_word(v):
            u = self.hecke_step(u, j)
        return u

    def hecke_coset(self, u: Weyl, v: Weyl, parabolic: Parabolic) -> Weyl:
        """u . (vW_P), returned as a minimal representative."""
        return self.coset_min(
            self.hecke_product(u, self.coset_min(v, parabolic)), parabolic
        )

    def stabilizer_delta(self, w: Weyl, parabolic: Parabolic) -> frozenset:
        """Delta_{P_w} = {beta : s_beta . wW_P = wW_P}."""
        m = self.coset_min(w, parabolic)
        return frozenset(
            j
            for j in range(self.system.rank)
            if self.hecke_coset(self._simple[j], m, parabolic) == m
        )

    # -- enumeration -----------------------------------------------------------------

    def elements(self, cap: int = ENUMERATION_CAP) -> tuple:
        key = ("elements", cap)
        if key not in self.memo:
            self.memo[key] = tuple(
                sorted(self._bfs(self.identity, self._right_neighbors, cap),
                       key=lambda w: (self.length(w), self.reduced_word(w)))
            )
        return self.memo[key]

    def cosets(self, parabolic: Parabolic, cap: int = ENUMERATION_CAP) -> tuple:
        """All cosets of W/W_P as minimal representatives, each exactly once."""
        key = ("cosets", parabolic.delta_p, cap)
        if key not in self.memo:
            def neighbors(m):
                return (
                    self.coset_min(self.multiply(self._simple[j], m), parabolic)
                    for j in range(self.system.rank)
                )

            reps = self._bfs(self.identity, neighbors, cap)
            self.memo[key] = tuple(
                sorted(reps, key=lambda w: (self.length(w), self.reduced_word(w)))
            )
        return self.memo[key]

    def _right_neighbors(self, w):
        return (self.multiply(w, s) for s in self._simple)

    @staticmethod
    def _bfs(start, neighbors, cap) -> list:
        seen = {start}
        frontier = [start]
        while frontier:
            fresh = []
            for x in frontier:
                for y in neighbors(x):
                    if y not in seen:
                        seen.add(y)
                        if len(seen) > cap:
                            raise ResourceError(f"enumeration exceeded the cap of {cap}")
                        fresh.append(y)
            frontier = fresh
        return list(seen)

    def iter_cosets(self, parabolic: Parabolic, cap: int = ENUMERATION_CAP) -> Iterator:
        return iter(self.cosets(parabolic, cap))


def weyl_group(type_letter: str, rank: int) -> WeylGroup:
    """Shared per-process WeylGroup instances keyed by (type, rank)."""
    key = (str(type_letter).upper(), rank)
    if key not in _GROUPS:
        from .rootsystem import build_root_system

        _GROUPS[key] = WeylGroup(build_root_system(*key))
    return _GROUPS[key]


_GROUPS: dict = {}
