"""Irreducible root systems of all simple types, with coroots and pairings.

A root is a plain tuple of integer coefficients over the simple-root basis
(all nonnegative for positive roots).  A coroot vector is a tuple of integer
coefficients over the simple-coroot basis.  Simple roots follow the Bourbaki
numbering; the invariant form is normalized so short roots have squared
length 2.  Everything downstream consumes only Cartan integers, so the
normalization is observationally irrelevant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NewType

from .errors import ConfigurationError, DomainError

Root = NewType("Root", tuple)
CorootVector = NewType("CorootVector", tuple)

#: admissible ranks per type letter
ADMISSIBLE = {
    "A": lambda l: l >= 1,
    "B": lambda l: l >= 2,
    "C": lambda l: l >= 2,
    "D": lambda l: l >= 3,
    "E": lambda l: l in (6, 7, 8),
    "F": lambda l: l == 4,
    "G": lambda l: l == 2,
}

#: classical |R+| counts, used as a construction invariant
POSITIVE_ROOT_COUNT = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "E": lambda l: {6: 36, 7: 63, 8: 120}[l],
    "F": lambda l: 24,
    "G": lambda l: 6,
}


def _dynkin_edges(letter: str, rank: int) -> dict[tuple[int, int], int]:
    """Directed bond data: (i, j) -> Cartan entry a_ij = <alpha_i, alpha_j^vee>.

    Only off-diagonal nonzero entries are listed; unlisted pairs are 0.
    Indices are 0-based but follow the Bourbaki 1-based pictures.
    """
    edges: dict[tuple[int, int], int] = {}

    def bond(i, j, aij=-1, aji=-1):
        edges[(i, j)] = aij
        edges[(j, i)] = aji

    if letter == "A":
        for i in range(rank - 1):
            bond(i, i + 1)
    elif letter == "B":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1, -2, -1)  # alpha_l short
    elif letter == "C":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1, -1, -2)  # alpha_l long
    elif letter == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif letter == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, rank - 1):
            bond(i, i + 1)
    elif letter == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        bond(2, 3)
    elif letter == "G":
        bond(0, 1, -1, -3)  # alpha_1 short, alpha_2 long
    return edges


def _cartan_matrix(letter: str, rank: int) -> tuple:
    edges = _dynkin_edges(letter, rank)
    rows = []
    for i in range(rank):
        rows.append(tuple(2 if i == j else edges.get((i, j), 0) for j in range(rank)))
    return tuple(rows)


def _symmetrizer(cartan: tuple) -> tuple:
    """Positive integers d_i with d_i*a_ij = d_j*a_ji, short roots at d = 1."""
    rank = len(cartan)
    d: list[Fraction | None] = [None] * rank
    d[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(rank):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                # (alpha_i, alpha_j) = d_j a_ij = d_i a_ji
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                queue.append(j)
    if any(x is None for x in d):
        raise ConfigurationError("Dynkin diagram is not connected")
    low = min(d)
    scaled = [x / low for x in d]
    if any(x.denominator != 1 for x in scaled):
        raise ConfigurationError("non-integral symmetrizer")
    return tuple(int(x) for x in scaled)


@dataclass(frozen=True)
class RootSystem:
    """An irreducible root system with a fixed simple-root basis.

    Immutable after construction; safe to share across concurrent tasks.
    """

    type_letter: str
    rank: int
    cartan: tuple
    symmetrizer: tuple
    simple_roots: tuple
    positive_roots: tuple

    @cached_property
    def cache(self) -> dict:
        """Per-instance scratch cache used by downstream modules."""
        return {}

    @cached_property
    def positive_set(self) -> frozenset:
        return frozenset(self.positive_roots)

    @cached_property
    def adjacency(self) -> tuple:
        """Dynkin-diagram neighbor sets of the simple roots."""
        return tuple(
            frozenset(j for j in range(self.rank) if j != i and self.cartan[i][j] != 0)
            for i in range(self.rank)
        )

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"RootSystem({self.type_letter}{self.rank})"

    # -- membership and orders ------------------------------------------------

    def is_positive_root(self, v) -> bool:
        return tuple(v) in self.positive_set

    def is_root(self, v) -> bool:
        v = tuple(v)
        return v in self.positive_set or tuple(-c for c in v) in self.positive_set

    def check_root(self, v) -> Root:
        v = tuple(v)
        if not self.is_root(v):
            raise DomainError(f"{v} is not a root of {self.type_letter}{self.rank}")
        return v

    def root_leq(self, a, b) -> bool:
        """Coefficientwise partial order on roots."""
        if len(a) != len(b):
            raise DomainError("roots from mismatched systems")
        return all(y - x >= 0 for x, y in zip(a, b))

    def support(self, a) -> frozenset:
        """Simple roots occurring with positive coefficient in a positive root."""
        return frozenset(i for i, c in enumerate(a) if c != 0)

    # -- pairings -------------------------------------------------------------

    def pair_simple_coroot(self, x, j: int) -> int:
        """<x, alpha_j^vee> for x written in the simple-root basis."""
        return sum(x[i] * self.cartan[i][j] for i in range(self.rank))

    def pair(self, x, c) -> int:
        """<x, c> for a root x and a coroot vector c (both coefficient tuples)."""
        if len(x) != self.rank or len(c) != self.rank:
            raise DomainError("mismatched systems in pairing")
        return sum(c[j] * self.pair_simple_coroot(x, j) for j in range(self.rank) if c[j])

    @staticmethod
    def pair_weight(beta: int, c) -> int:
        """(omega_beta, c): the coefficient of beta^vee in the coroot vector c."""
        return c[beta]

    def inner(self, a, b) -> int:
        """The W-invariant form, short roots normalized to squared length 2."""
        total = 0
        for j in range(self.rank):
            if b[j]:
                total += b[j] * self.symmetrizer[j] * self.pair_simple_coroot(a, j)
        return total

    def coroot(self, a) -> CorootVector:
        """alpha^vee = 2*alpha/(alpha, alpha) in the simple-coroot basis."""
        a = self.check_root(a)
        sq = self.inner(a, a)
        coeffs = []
        for i, c in enumerate(a):
            num = 2 * c * self.symmetrizer[i]
            if num % sq:
                raise DomainError(f"non-integral coroot for {a}")
            coeffs.append(num // sq)
        return tuple(coeffs)

    def reflect_simple(self, a, j: int):
        """s_j(a) = a - <a, alpha_j^vee> alpha_j."""
        p = self.pair_simple_coroot(a, j)
        if p == 0:
            return tuple(a)
        out = list(a)
        out[j] -= p
        return tuple(out)

    # -- distinguished roots --------------------------------------------------

    @cached_property
    def highest_root(self) -> Root:
        maxima = _maximal(self.positive_roots, self.root_leq)
        if len(maxima) != 1:
            raise ConfigurationError("root system is not irreducible")
        return maxima[0]

    @cached_property
    def highest_short_root(self):
        """The maximal short root, or None for simply-laced systems."""
        lengths = {self.inner(a, a) for a in self.positive_roots}
        if len(lengths) == 1:
            return None
        short = [a for a in self.positive_roots if self.inner(a, a) == min(lengths)]
        maxima = _maximal(short, self.root_leq)
        if len(maxima) != 1:
            raise ConfigurationError("no unique highest short root")
        return maxima[0]

    def highest_root_of_support(self, s: Iterable) -> Root:
        """Highest root of the sub-root-system generated by the subset s of Delta.

        Requires s to be connected in the Dynkin diagram.
        """
        s = frozenset(s)
        key = ("subhigh", s)
        if key not in self.cache:
            inside = [a for a in self.positive_roots if self.support(a) <= s]
            maxima = _maximal(inside, self.root_leq)
            if len(maxima) != 1:
                raise DomainError(f"support {sorted(s)} is not connected")
            self.cache[key] = maxima[0]
        return self.cache[key]

    # -- Dynkin graph helpers -------------------------------------------------

    def components(self, s: Iterable) -> tuple:
        """Connected components of a subset of Delta, each sorted, in index order."""
        left = set(s)
        comps = []
        while left:
            seed = min(left)
            comp = {seed}
            frontier = [seed]
            while frontier:
                i = frontier.pop()
                for j in self.adjacency[i] & left:
                    if j not in comp:
                        comp.add(j)
                        frontier.append(j)
            left -= comp
            comps.append(tuple(sorted(comp)))
        return tuple(sorted(comps))

    def is_connected(self, s: Iterable) -> bool:
        s = set(s)
        return len(s) <= 1 or len(self.components(s)) == 1


def _maximal(items, leq):
    out = []
    for a in items:
        if any(a != b and leq(a, b) for b in items):
            continue
        out.append(a)
    return sorted(out)


def _generate_positive_roots(cartan: tuple) -> tuple:
    rank = len(cartan)
    simple = [tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        fresh = []
        for a in frontier:
            for j in range(rank):
                p = sum(a[i] * cartan[i][j] for i in range(rank))
                if p >= 0:
                    continue  # reflection can only move up when the pairing is negative
                b = list(a)
                b[j] -= p
                b = tuple(b)
                if b not in seen:
                    seen.add(b)
                    fresh.append(b)
        frontier = fresh
    return tuple(sorted(seen, key=lambda r: (sum(r), r)))


def build_root_system(type_letter: str, rank: int) -> RootSystem:
    """Construct the irreducible root system of the given type and rank.

    D_3 is admitted and yields a system isomorphic to A_3 with the D-series
    labeling of its simple roots.
    """
    letter = str(type_letter).upper()
    if letter not in ADMISSIBLE or not isinstance(rank, int):
        raise ConfigurationError(f"unknown type {type_letter!r}")
    if not ADMISSIBLE[letter](rank):
        raise ConfigurationError(f"inadmissible rank {rank} for type {letter}")
    cartan = _cartan_matrix(letter, rank)
    positive = _generate_positive_roots(cartan)
    expected = POSITIVE_ROOT_COUNT[letter](rank)
    if len(positive) != expected:
        raise ConfigurationError(
            f"{letter}{rank}: generated {len(positive)} positive roots, expected {expected}"
        )
    simple = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    system = RootSystem(letter, rank, cartan, _symmetrizer(cartan), simple, positive)
    system.highest_root  # force the irreducibility invariant
    return system


# -- sub-root-systems ---------------------------------------------------------


@dataclass(frozen=True)
class SubsystemComponent:
    """One irreducible component of R(S), with its embedding into the ambient R."""

    system: RootSystem
    nodes: tuple  # ambient index of each local simple root

    def to_ambient_root(self, local, ambient_rank: int):
        out = [0] * ambient_rank
        for i, c in enumerate(local):
            out[self.nodes[i]] = c
        return tuple(out)

    def to_local_root(self, ambient):
        out = [0] * len(self.nodes)
        position = {n: i for i, n in enumerate(self.nodes)}
        for j, c in enumerate(ambient):
            if c:
                if j not in position:
                    raise DomainError("root not supported on the component")
                out[position[j]] = c
        return tuple(out)


def _match_ordering(sub_cartan, nodes, target) -> tuple | None:
    """Backtracking search for an ordering of nodes realizing the target Cartan."""
    n = len(nodes)
    chosen: list[int] = []
    used = [False] * n

    def entry(x, y):
        return sub_cartan[(x, y)] if x != y else 2

    def extend(i):
        if i == n:
            return True
        for k in range(n):
            if used[k]:
                continue
            ok = all(
                entry(nodes[k], chosen[j]) == target[i][j]
                and entry(chosen[j], nodes[k]) == target[j][i]
                for j in range(i)
            )
            if ok and target[i][i] == 2:
                chosen.append(nodes[k])
                used[k] = True
                if extend(i + 1):
                    return True
                chosen.pop()
                used[k] = False
        return False

    return tuple(chosen) if extend(0) else None


def subsystem(system: RootSystem, s: Iterable) -> list[SubsystemComponent]:
    """The sub-root-systems generated by a subset of Delta, one per component.

    Each component is classified, built standalone, and returned with the map
    from its simple roots back to ambient indices.  Empty s gives [].
    """
    s = frozenset(s)
    if not s <= set(range(system.rank)):
        raise DomainError(f"{sorted(s)} is not a subset of Delta")
    key = ("subsystem", s)
    if key in system.cache:
        return system.cache[key]
    out = []
    for comp in system.components(s):
        n = len(comp)
        sub_cartan = {
            (i, j): system.cartan[i][j] for i in comp for j in comp if i != j
        }
        found = None
        for letter in "ABCDEFG":
            if not ADMISSIBLE[letter](n):
                continue
            target = _cartan_matrix(letter, n)
            ordering = _match_ordering(sub_cartan, comp, target)
            if ordering is not None:
                found = (letter, ordering)
                break
        if found is None:
            raise ConfigurationError(f"component {comp} matches no finite type")
        letter, ordering = found
        local = build_root_system(letter, n)
        for i in range(n):
            for j in range(n):
                ci, cj = ordering[i], ordering[j]
                ambient = system.cartan[ci][cj] if ci != cj else 2
                if ambient != local.cartan[i][j]:
                    raise ConfigurationError("subsystem embedding mismatch")
        out.append(SubsystemComponent(local, ordering))
    system.cache[key] = out
    return out
