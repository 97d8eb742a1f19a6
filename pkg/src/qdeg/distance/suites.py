"""Named verification suites: exhaustive checks of the structural theorems.

Each suite runs a list of claims against one (type, rank, parabolic) triple
and reports pass/fail per claim with the first counterexample found.  Reports
are deterministic: iteration orders are fixed and results are sorted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..cascade import (
    d_gpbeta as _d_gpbeta,
    d_x as _d_x,
    is_locally_high as _is_locally_high,
    is_strongly_orthogonal as _is_strongly_orthogonal,
    vec_add as _vec_add,
)
from ..curveneighborhood import (
    equalwx_criterion,
    is_cosmall,
    is_very_cosmall,
    z,
    z_lift_check,
)
from ..degreelattice import (
    Degree,
    all_greedy_decompositions,
    d_of_root,
    degree_box,
    extended_support,
    greedy_decomposition,
    in_r_p,
    maximal_roots,
    naive_support,
    restrict,
    induce,
)
from ..errors import ConfigurationError, InvariantViolationError
from ..rootsystem import RootSystem, subsystem
from ..weylgroup import Parabolic, Weyl, WeylGroup, weyl_group
from .core import (
    adjacency_graph,
    chain_witness,
    chain_front_exact,
    coset_order,
    delta_w,
    delta_uv,
    _search,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    type_letter: str
    rank: int
    parabolic: tuple  # sorted 1-based indices of Delta_P
    passed: bool
    checks: tuple

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "system": {"type": self.type_letter, "rank": self.rank},
            "parabolic": list(self.parabolic),
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


class _Collector:
    def __init__(self):
        self.results: list[CheckResult] = []

    def check(self, name: str, pairs) -> None:
        n, bad = 0, None
        for ok, info in pairs:
            n += 1
            if not ok and bad is None:
                bad = str(info)
        self.results.append(CheckResult(name, bad is None, n, bad))

    def done(self) -> tuple:
        return tuple(self.results)


def _word_str(group: WeylGroup, w: Weyl) -> str:
    return "s" + ".".join(str(j + 1) for j in group.reduced_word(w)) if w != group.identity else "e"


def _parabolic_elements(group: WeylGroup, subset) -> tuple:
    key = ("wp-elements", frozenset(subset))
    if key not in group.memo:
        gens = [group.simple_reflection(j) for j in sorted(subset)]
        seen = {group.identity}
        frontier = [group.identity]
        while frontier:
            fresh = []
            for w in frontier:
                for s in gens:
                    x = group.multiply(w, s)
                    if x not in seen:
                        seen.add(x)
                        fresh.append(x)
            frontier = fresh
        group.memo[key] = tuple(sorted(seen, key=lambda w: (group.length(w), w)))
    return group.memo[key]


def _supersets(parabolic: Parabolic):
    free = parabolic.free
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            yield Parabolic(parabolic.rank, parabolic.delta_p | frozenset(extra))


def _group_at_most(group: WeylGroup, n: int) -> bool:
    """|W| <= n, probed without enumerating past n elements."""
    from ..errors import ResourceError

    try:
        return len(group.elements(cap=n)) <= n
    except ResourceError:
        return False


def _dominated(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _min_tuples(tuples) -> tuple:
    ordered = sorted(set(tuples), key=lambda t: (sum(t), t))
    kept: list[tuple] = []
    for t in ordered:
        if not any(_dominated(k, t) for k in kept):
            kept.append(t)
    return tuple(sorted(kept))


def _pairs_table(group: WeylGroup, parabolic: Parabolic, pad: int) -> dict:
    """delta_P(u, v) for every coset pair, as raw coefficient tuples."""
    key = ("pairs-table", parabolic.delta_p, pad)
    if key in group.memo:
        return group.memo[key]
    graph = adjacency_graph(group, parabolic)
    n = len(graph.cosets)
    up = coset_order(group, parabolic)
    dual_index = [
        graph.index[group.coset_min(group.dual(m), parabolic)] for m in graph.cosets
    ]
    below = [[y for y in range(n) if t in up[y]] for t in range(n)]
    table: dict = {}
    for i in range(n):
        fronts = _search(group, parabolic, i, "up", pad).fronts
        for j in range(n):
            cands = [c for y in below[dual_index[j]] for c in fronts[y]]
            table[(i, j)] = _min_tuples(cands)
    group.memo[key] = table
    return table


# -- individual suites --------------------------------------------------------


def _suite_hecke(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    els = group.elements()
    w_p = group.longest_element(parabolic)
    table = {(u, v): group.hecke_product(u, v) for u in els for v in els}
    rel = [(u, v) for u in els for v in els if group.bruhat_leq(u, v)]

    out.check(
        "monoid-identity",
        ((table[(u, group.identity)] == u and table[(group.identity, u)] == u, _word_str(group, u)) for u in els),
    )
    out.check(
        "monoid-associative",
        (
            (table[(table[(u, v)], w)] == table[(u, table[(v, w)])], "triple")
            for u in els
            for v in els
            for w in els
        ),
    )
    out.check(
        "inverse-antihomomorphism",
        (
            (
                group.inverse(table[(u, v)])
                == table[(group.inverse(v), group.inverse(u))],
                "pair",
            )
            for u in els
            for v in els
        ),
    )
    out.check(
        "bruhat-monotone",
        (
            (
                group.bruhat_leq(table[(table[(u, v)], w)], table[(table[(u, v2)], w)]),
                "triple",
            )
            for (v, v2) in rel
            for u in els
            for w in els
        ),
    )
    out.check(
        "product-below-hecke",
        ((group.bruhat_leq(group.multiply(u, v), table[(u, v)]), "pair") for u in els for v in els),
    )
    def _hecke_v():
        for u in els:
            for v in els:
                uv = table[(u, v)]
                u2 = group.multiply(uv, group.inverse(v))
                ok = (
                    group.bruhat_leq(u2, u)
                    and group.multiply(u2, v) == uv
                    and table[(u2, v)] == uv
                )
                yield ok, f"u={_word_str(group, u)} v={_word_str(group, v)}"
    out.check("hecke-v-reduction", _hecke_v())
    def _max_rep():
        for w in els:
            is_max = group.coset_max_rep(w, parabolic).element == w
            yield (is_max == (table[(w, w_p)] == w)), _word_str(group, w)
    out.check("max-rep-fixed-point", _max_rep())
    def _min_rep():
        for w in els:
            if group.coset_min(w, parabolic) != w:
                continue
            top = group.multiply(w, w_p)
            yield (
                top == table[(w, w_p)]
                and group.coset_max_rep(w, parabolic).element == top
            ), _word_str(group, w)
    out.check("min-rep-product", _min_rep())
    def _wpodot():
        for w in els:
            top = table[(w, w_p)]
            ok = (
                group.coset_max_rep(w, parabolic).element == top
                and group.coset_min(w, parabolic) == group.multiply(top, w_p)
            )
            yield ok, _word_str(group, w)
    out.check("wpodot", _wpodot())
    coset_rel = [
        (v, v2)
        for v in els
        for v2 in els
        if group.bruhat_leq_coset(v, v2, parabolic)
    ]
    out.check(
        "coset-monotone",
        (
            (
                group.bruhat_leq_coset(table[(u, v)], table[(u, v2)], parabolic),
                "pair",
            )
            for (v, v2) in coset_rel
            for u in els
        ),
    )
    return out.done()


def _zd_box(system: RootSystem, parabolic: Parabolic, cap: int = 4):
    ranges = [range(cap + 1) for _ in parabolic.free]
    for coeffs in itertools.product(*ranges):
        yield Degree(parabolic, coeffs)


def _suite_zd(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    system = group.system
    w_p = group.longest_element(parabolic)
    box = list(_zd_box(system, parabolic))

    def _unique():
        for d in box:
            decs = [tuple(sorted(g)) for g in all_greedy_decompositions(system, parabolic, d)]
            ok = len(set(decs)) == 1
            entries = greedy_decomposition(system, parabolic, d)
            ok = ok and all(is_cosmall(group, parabolic, a) for a in entries)
            ok = ok and all(
                maximal_roots(system, parabolic, d_of_root(system, parabolic, a)) == (a,)
                for a in entries
            )
            yield ok, f"d={d.coeffs}"
    out.check("greedy-unique-and-cosmall", _unique())

    def _removal():
        for d in box:
            entries = greedy_decomposition(system, parabolic, d)
            for i in range(len(entries)):
                rest = entries[:i] + entries[i + 1 :]
                smaller = d - d_of_root(system, parabolic, entries[i])
                ok = sorted(rest) == sorted(greedy_decomposition(system, parabolic, smaller))
                yield ok, f"d={d.coeffs} drop {entries[i]}"
    out.check("greedy-entry-removal", _removal())

    def _pairs_relation():
        for d in box:
            entries = greedy_decomposition(system, parabolic, d)
            for a, b in itertools.combinations(entries, 2):
                plus = _vec_add(a, b)
                yield (
                    system.inner(a, b) >= 0 and not system.is_root(plus),
                    f"d={d.coeffs} {a} {b}",
                )
    out.check("greedy-pair-relation", _pairs_relation())

    def _commute():
        for d in box:
            entries = greedy_decomposition(system, parabolic, d)
            for a, b in itertools.combinations(entries, 2):
                sa, sb = group.reflection(a), group.reflection(b)
                yield (
                    group.hecke_product(sa, sb) == group.hecke_product(sb, sa),
                    f"d={d.coeffs}",
                )
    out.check("hecke-commute", _commute())

    out.check(
        "z-lift",
        ((z_lift_check(group, parabolic, d), f"d={d.coeffs}") for d in box),
    )

    def _stab():
        for d in box:
            zd = z(group, parabolic, d)
            ok = (
                group.hecke_product(w_p, zd.z_max) == zd.z_max
                and group.hecke_product(zd.z_max, w_p) == zd.z_max
                and parabolic.delta_p <= group.stabilizer_delta(zd.z_min, parabolic)
            )
            yield ok, f"d={d.coeffs}"
    out.check("z-stabilizer", _stab())

    def _projection():
        for q in _supersets(parabolic):
            w_q = group.longest_element(q)
            for d in box:
                zq = z(group, q, restrict(d, q))
                yield (
                    group.bruhat_leq(z(group, parabolic, d).z_max, zq.z_max),
                    f"d={d.coeffs} Q={sorted(q.delta_p)}",
                )
    out.check("z-projection", _projection())

    def _inverse():
        for d in box:
            zd = z(group, parabolic, d)
            ok = zd.z_max == group.hecke_product(group.inverse(zd.z_max), w_p)
            if not parabolic.delta_p:
                ok = ok and zd.z_min == group.inverse(zd.z_min)
            yield ok, f"d={d.coeffs}"
    out.check("z-inverse", _inverse())

    def _monotone():
        for d in box:
            for d2 in box:
                if d.leq(d2):
                    yield (
                        group.bruhat_leq(
                            z(group, parabolic, d).z_min, z(group, parabolic, d2).z_min
                        ),
                        f"{d.coeffs} <= {d2.coeffs}",
                    )
    out.check("z-monotone", _monotone())

    very = [
        a
        for a in system.positive_roots
        if not in_r_p(system, parabolic, a) and is_very_cosmall(group, parabolic, a)
    ]

    def _verycosmall():
        for a in very:
            da = d_of_root(system, parabolic, a)
            s_a = group.reflection(a)
            for d in box:
                if group.bruhat_leq_coset(s_a, z(group, parabolic, d).z_min, parabolic):
                    yield da.leq(d), f"alpha={a} d={d.coeffs}"
    out.check("verycosmall-forces-degree", _verycosmall())

    w_x = group.w_x(parabolic)

    if parabolic.free:  # vacuous when X is a point
        def _wx_start():
            theta = system.highest_root
            for d in box:
                zd = z(group, parabolic, d)
                if zd.z_min != w_x:
                    continue
                entries = greedy_decomposition(system, parabolic, d)
                ok = theta in entries
                for a in entries:
                    rest = z(group, parabolic, d - d_of_root(system, parabolic, a))
                    dual_refl = group.multiply(group.w_o, group.reflection(a))
                    ok = ok and group.bruhat_leq(dual_refl, rest.z_max)
                yield ok, f"d={d.coeffs}"
        out.check("wx-theta-and-dualsmaller", _wx_start())

    def _support():
        for d in box:
            zd = z(group, parabolic, d)
            got = frozenset(group.reduced_word(zd.z_max))
            want = extended_support(system, parabolic, d) | parabolic.delta_p
            yield got == want, f"d={d.coeffs}"
    out.check("support-formula", _support())

    def _relation():
        for d in box:
            if d.is_zero():
                continue
            for m in maximal_roots(system, parabolic, d):
                rest = z(group, parabolic, d - d_of_root(system, parabolic, m))
                for b in frozenset(group.reduced_word(rest.z_max)):
                    simple = system.simple_roots[b]
                    ok = system.inner(m, simple) >= 0 and not system.is_root(
                        _vec_add(m, simple)
                    )
                    yield ok, f"d={d.coeffs} alpha={m} beta={b + 1}"
    out.check("first-entry-relation", _relation())

    if not parabolic.delta_p:
        def _local():
            for d in box:
                entries = greedy_decomposition(system, parabolic, d)
                if not entries:
                    continue
                for phi in system.positive_roots:
                    if not all(system.root_leq(a, phi) for a in entries):
                        continue
                    comp = subsystem(system, system.support(phi))[0]
                    local_group = weyl_group(comp.system.type_letter, comp.system.rank)
                    local_b = Parabolic(comp.system.rank, frozenset())
                    local_d = Degree(local_b, comp.to_local_root(d.coeffs))
                    local_z = z(local_group, local_b, local_d)
                    mapped = group.from_word(
                        comp.nodes[j] for j in local_group.reduced_word(local_z.z_min)
                    )
                    yield (
                        mapped == z(group, parabolic, d).z_min,
                        f"d={d.coeffs} phi={phi}",
                    )
        out.check("local-z", _local())

    def _equalwx():
        corner = _d_x(system, parabolic)
        for d in degree_box(parabolic, corner, 1):
            crit = equalwx_criterion(group, parabolic, d, pad=3)
            yield (
                crit == (z(group, parabolic, d).z_min == w_x),
                f"d={d.coeffs}",
            )
    out.check("equalwx-criterion", _equalwx())

    return out.done()


def _suite_uniqueness(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    system = group.system
    dx = _d_x(system, parabolic)
    front = delta_w(group, parabolic, group.w_o, pad)
    out.check(
        "front-singleton-dx",
        [(front.degrees == (dx,), f"front={[d.coeffs for d in front.degrees]}")],
    )
    out.check(
        "z-at-dx-is-wx",
        [(z(group, parabolic, dx).z_min == group.w_x(parabolic), f"d={dx.coeffs}")],
    )
    def _below():
        for d in degree_box(parabolic, dx, 0):
            if d == dx:
                continue
            yield z(group, parabolic, d).z_min != group.w_x(parabolic), f"d={d.coeffs}"
    out.check("z-below-dx-not-wx", _below())
    return out.done()


def _suite_main(group: WeylGroup, parabolic: Parabolic, pad: int, mode: str) -> tuple:
    out = _Collector()
    system = group.system
    dx = _d_x(system, parabolic)
    if mode == "auto":
        mode = "pairs" if _group_at_most(group, 48) else "box"
    if mode == "pairs":
        table = _pairs_table(group, parabolic, pad)
        n = len(group.cosets(parabolic))
        def _pairs():
            for i in range(n):
                for j in range(n):
                    for coeffs in table[(i, j)]:
                        yield (
                            _dominated(coeffs, dx.coeffs),
                            f"u#{i} v#{j} d={coeffs}",
                        )
        out.check("minimal-degrees-bounded-by-dx", _pairs())
    elif mode == "box":
        def _box():
            for d in degree_box(parabolic, dx, pad):
                if d in delta_w(group, parabolic, z(group, parabolic, d).z_min, pad):
                    yield d.leq(dx), f"d={d.coeffs}"
        out.check("self-front-degrees-bounded-by-dx", _box())
    else:
        raise ConfigurationError(f"unknown main-suite mode {mode!r}")
    return out.done()


def _suite_description(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    def _agree():
        for m in group.cosets(parabolic):
            scan = delta_w(group, parabolic, m, pad)
            chain = delta_uv(group, parabolic, m, group.w_o, pad)
            yield (
                scan.degrees == chain.degrees,
                f"u={_word_str(group, m)} scan={[d.coeffs for d in scan.degrees]}"
                f" chain={[d.coeffs for d in chain.degrees]}",
            )
    out.check("delta-w-equals-delta-uv-wo", _agree())
    return out.done()


def _suite_delta2(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    table = _pairs_table(group, parabolic, pad)
    n = len(group.cosets(parabolic))
    def _membership():
        for i in range(n):
            for j in range(n):
                for coeffs in table[(i, j)]:
                    d = Degree(parabolic, coeffs)
                    yield (
                        d in delta_w(group, parabolic, z(group, parabolic, d).z_min, pad),
                        f"u#{i} v#{j} d={coeffs}",
                    )
    out.check("pair-degrees-are-self-front", _membership())
    return out.done()


def _suite_delta_props(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    system = group.system
    cosets = group.cosets(parabolic)
    els = group.elements()
    wp_els = _parabolic_elements(group, parabolic.delta_p)
    front = lambda w: delta_w(group, parabolic, w, pad)

    out.check(
        "wp-invariance",
        (
            (front(group.multiply(u, m)).degrees == front(m).degrees, _word_str(group, m))
            for m in cosets
            for u in wp_els
        ),
    )
    out.check(
        "inverse-invariance",
        ((front(w).degrees == front(group.inverse(w)).degrees, _word_str(group, w)) for w in els),
    )
    def _monotone():
        for m in cosets:
            for m2 in cosets:
                if not group.bruhat_leq(m, m2):
                    continue
                for d in front(m2).degrees:
                    yield (
                        any(d2.leq(d) for d2 in front(m).degrees),
                        f"{_word_str(group, m)} <= {_word_str(group, m2)} d={d.coeffs}",
                    )
    out.check("bruhat-monotone", _monotone())
    def _triangle():
        for u in els:
            fu = front(u).degrees
            for v in els:
                fv = front(v).degrees
                fuv = front(group.hecke_product(u, v)).degrees
                for d in fu:
                    for d2 in fv:
                        total = d + d2
                        yield (
                            any(d3.leq(total) for d3 in fuv),
                            f"u={_word_str(group, u)} v={_word_str(group, v)}",
                        )
    out.check("triangle", _triangle())
    def _projection():
        for q in _supersets(parabolic):
            for m in cosets:
                fq = delta_w(group, q, m, pad).degrees
                for d in front(m).degrees:
                    yield (
                        any(e.leq(restrict(d, q)) for e in fq),
                        f"{_word_str(group, m)} Q={sorted(q.delta_p)}",
                    )
    out.check("projection", _projection())
    outside = [a for a in system.positive_roots if not in_r_p(system, parabolic, a)]
    def _cosmall_member():
        for a in outside:
            if not is_cosmall(group, parabolic, a):
                continue
            yield (
                d_of_root(system, parabolic, a) in front(group.reflection(a)),
                f"alpha={a}",
            )
    out.check("cosmall-membership", _cosmall_member())
    def _verycosmall_singleton():
        for a in outside:
            if not is_very_cosmall(group, parabolic, a):
                continue
            yield (
                front(group.reflection(a)).degrees == (d_of_root(system, parabolic, a),),
                f"alpha={a}",
            )
    out.check("verycosmall-singleton", _verycosmall_singleton())
    def _simple_degree():
        for b in range(system.rank):
            yield (
                front(group.simple_reflection(b)).degrees
                == (d_of_root(system, parabolic, system.simple_roots[b]),),
                f"beta={b + 1}",
            )
    out.check("simple-root-degree", _simple_degree())
    corner = _d_x(system, parabolic)
    selfish = [
        d
        for d in degree_box(parabolic, corner, pad)
        if d in front(z(group, parabolic, d).z_min)
    ]
    def _reduce():
        for d in selfish:
            for a in greedy_decomposition(system, parabolic, d):
                rest = d - d_of_root(system, parabolic, a)
                yield (
                    rest in front(z(group, parabolic, rest).z_min),
                    f"d={d.coeffs} alpha={a}",
                )
    out.check("greedy-reduction", _reduce())
    def _membership():
        for m in cosets:
            for d in front(m).degrees:
                yield (
                    d in front(z(group, parabolic, d).z_min),
                    f"{_word_str(group, m)} d={d.coeffs}",
                )
    out.check("front-degree-self-membership", _membership())
    return out.done()


def _suite_delta2_props(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    system = group.system
    graph = adjacency_graph(group, parabolic)
    cosets = graph.cosets
    n = len(cosets)
    up = coset_order(group, parabolic)
    table = _pairs_table(group, parabolic, pad)
    dual_index = [
        graph.index[group.coset_min(group.dual(m), parabolic)] for m in cosets
    ]
    wp_els = _parabolic_elements(group, parabolic.delta_p)

    def _rep_independence():
        outside = [a for a in system.positive_roots if not in_r_p(system, parabolic, a)]
        for m in cosets:
            base = None
            for u in wp_els:
                rep = group.multiply(m, u)
                labels = {}
                for alpha in outside:
                    t = group.coset_min(group.multiply(rep, group.reflection(alpha)), parabolic)
                    if t == m:
                        continue
                    labels.setdefault(graph.index[t], set()).add(
                        d_of_root(system, parabolic, alpha).coeffs
                    )
                flat = {(j, c) for j, cs in labels.items() for c in cs}
                if base is None:
                    base = flat
                ok = flat == base and all(len(cs) == 1 for cs in labels.values())
                yield ok, f"coset={_word_str(group, m)} rep-shift={_word_str(group, u)}"
    out.check("adjacency-rep-independence", _rep_independence())

    out.check(
        "symmetry",
        ((table[(i, j)] == table[(j, i)], f"u#{i} v#{j}") for i in range(n) for j in range(n)),
    )
    def _zero():
        for i in range(n):
            for j in range(n):
                zero_front = table[(i, j)] == ((0,) * len(parabolic.free),)
                yield (
                    zero_front == (dual_index[j] in up[i]),
                    f"u#{i} v#{j}",
                )
    out.check("zero-iff-dominated", _zero())
    def _pair_monotone():
        comparable = [(i, i2) for i in range(n) for i2 in up[i]]
        for i, i2 in comparable:
            for j, j2 in comparable:
                for c2 in table[(i2, j2)]:
                    yield (
                        any(_dominated(c, c2) for c in table[(i, j)]),
                        f"({i},{j}) <= ({i2},{j2}) d={c2}",
                    )
    out.check("pair-monotone", _pair_monotone())
    def _endpoints():
        for i in range(n):
            for j in range(n):
                for coeffs in table[(i, j)]:
                    d = Degree(parabolic, coeffs)
                    witness = chain_witness(group, parabolic, cosets[i], cosets[j], d)
                    first = graph.index[witness.cosets[0]]
                    last_dual = graph.index[
                        group.coset_min(group.dual(witness.cosets[-1]), parabolic)
                    ]
                    for i2 in up[i]:
                        if first not in up[i2]:
                            continue
                        for j2 in up[j]:
                            if last_dual not in up[j2]:
                                continue
                            yield (
                                coeffs in table[(i2, j2)],
                                f"({i},{j})->({i2},{j2}) d={coeffs}",
                            )
    out.check("chain-endpoint-transfer", _endpoints())
    identity_idx = graph.index[group.identity]
    def _equalu():
        for i in range(n):
            exact = chain_front_exact(group, parabolic, cosets[i], group.identity, pad)
            for d in delta_w(group, parabolic, cosets[i], pad).degrees:
                yield d in exact, f"u#{i} d={d.coeffs}"
    out.check("equalu-anchored-witness", _equalu())
    def _cor611():
        for i in range(n):
            for d in delta_w(group, parabolic, cosets[i], pad).degrees:
                witness = chain_witness(
                    group, parabolic, cosets[i], group.w_o, d, exact=True
                )
                suffix = Degree.zero(parabolic)
                ok = True
                # strict descent along the chain
                for a, b in zip(witness.cosets, witness.cosets[1:]):
                    ok = ok and group.bruhat_leq(b, a) and a != b
                # suffix degrees are themselves minimal
                for k in range(len(witness.cosets) - 1, -1, -1):
                    ok = ok and suffix in delta_w(group, parabolic, witness.cosets[k], pad)
                    if k:
                        suffix = suffix + d_of_root(
                            system, parabolic, witness.edge_roots[k - 1]
                        )
                yield ok, f"u#{i} d={d.coeffs}"
    out.check("cor611-suffixes-and-descent", _cor611())
    return out.done()


def _suite_inductive(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    system = group.system
    dx = _d_x(system, parabolic)
    entries = greedy_decomposition(system, parabolic, dx)
    front = lambda w: delta_w(group, parabolic, w, pad)
    if parabolic.free:  # vacuous when X is a point
        out.check(
            "theta-in-greedy-of-dx",
            [(system.highest_root in entries, f"entries={entries}")],
        )
    def _identities():
        for a in sorted(set(entries)):
            da = d_of_root(system, parabolic, a)
            rest = dx - da
            z_rest = z(group, parabolic, rest).z_min
            s_a = group.reflection(a)
            yield front(s_a).degrees == (da,), f"delta(s_alpha) alpha={a}"
            yield front(group.dual(s_a)).degrees == (rest,), f"delta(s_alpha^*) alpha={a}"
            yield front(z_rest).degrees == (rest,), f"delta(z) alpha={a}"
            yield front(group.dual(z_rest)).degrees == (da,), f"delta(z^*) alpha={a}"
    out.check("inductive-identities", _identities())
    def _geqdx():
        for m in group.cosets(parabolic):
            dual_front = front(group.dual(m))
            for d in front(m).degrees:
                for d2 in dual_front.degrees:
                    yield (
                        _dominated(dx.coeffs, (d + d2).coeffs),
                        f"{_word_str(group, m)} d={d.coeffs} d*={d2.coeffs}",
                    )
    out.check("dual-sum-dominates-dx", _geqdx())
    def _cor():
        for m in group.cosets(parabolic):
            f1, f2 = front(m), front(group.dual(m))
            if any((d + d2) == dx for d in f1.degrees for d2 in f2.degrees):
                yield (
                    len(f1.degrees) == 1 and len(f2.degrees) == 1,
                    _word_str(group, m),
                )
    out.check("tight-sum-forces-singletons", _cor())
    return out.done()


def _suite_resind(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    system = group.system
    corner = _d_x(system, parabolic)
    p_box = list(degree_box(parabolic, corner, pad))
    def _checks():
        for q in _supersets(parabolic):
            w_q = group.longest_element(q)
            corner_q = _d_x(system, q)
            for e in degree_box(q, corner_q, pad):
                ze = z(group, q, e)
                lifted = induce(system, e, parabolic)
                ok = ze.z_max == group.hecke_product(
                    z(group, parabolic, lifted).z_min, w_q
                )
                yield ok, f"Q={sorted(q.delta_p)} e={e.coeffs} (hecke formula)"
                witnesses = [
                    d
                    for d in p_box
                    if restrict(d, q).leq(e)
                    and z(group, parabolic, d).z_max == ze.z_max
                    and d in delta_w(group, parabolic, z(group, parabolic, d).z_min, pad)
                ]
                yield bool(witnesses), f"Q={sorted(q.delta_p)} e={e.coeffs} (witness)"
                if e in delta_w(group, q, ze.z_min, pad):
                    yield (
                        any(restrict(d, q) == e for d in witnesses),
                        f"Q={sorted(q.delta_p)} e={e.coeffs} (equality)",
                    )
    out.check("restriction-induction", _checks())
    return out.done()


def _suite_simply_laced(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    system = group.system
    lengths = {system.inner(a, a) for a in system.positive_roots}
    if len(lengths) != 1:
        raise ConfigurationError("suite simply-laced requires a simply-laced system")
    out = _Collector()
    def _reflections():
        for a in system.positive_roots:
            yield (
                delta_w(group, parabolic, group.reflection(a), pad).degrees
                == (d_of_root(system, parabolic, a),),
                f"alpha={a}",
            )
    out.check("delta-of-reflection-is-d-alpha", _reflections())
    def _lemma514():
        for b in range(system.rank):
            p_b = Parabolic(system.rank, frozenset(range(system.rank)) - {b})
            for a in system.positive_roots:
                expected = Degree(p_b, (system.coroot(a)[b],))
                yield (
                    delta_w(group, p_b, group.reflection(a), pad).degrees == (expected,),
                    f"alpha={a} beta={b + 1}",
                )
    out.check("lemma-5-14", _lemma514())
    return out.done()


def _suite_compatibility(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    system = group.system
    supports = sorted({system.support(phi) for phi in system.positive_roots}, key=sorted)
    locally_high = [a for a in system.positive_roots if _is_locally_high(system, a)]

    def _local_context(s):
        comp = subsystem(system, s)[0]
        local_group = weyl_group(comp.system.type_letter, comp.system.rank)
        local_p = Parabolic(
            comp.system.rank,
            frozenset(
                i for i, node in enumerate(comp.nodes) if node in parabolic.delta_p
            ),
        )
        return comp, local_group, local_p

    def _to_ambient(comp, local_group, w):
        return group.from_word(comp.nodes[j] for j in local_group.reduced_word(w))

    def _delta_agree():
        for s in supports:
            comp, local_group, local_p = _local_context(s)
            for m in local_group.cosets(local_p):
                local_front = delta_w(local_group, local_p, m, pad)
                mapped = []
                for d in local_front.degrees:
                    coeffs = [0] * system.rank
                    for i, c in zip(local_p.free, d.coeffs):
                        coeffs[comp.nodes[i]] = c
                    mapped.append(Degree(parabolic, tuple(coeffs[b] for b in parabolic.free)))
                ambient = delta_w(group, parabolic, _to_ambient(comp, local_group, m), pad)
                yield (
                    tuple(sorted(mapped, key=lambda d: d.coeffs)) == ambient.degrees,
                    f"S={sorted(x + 1 for x in s)} u={_word_str(local_group, m)}",
                )
    out.check("delta-local-equals-global", _delta_agree())

    def _coset_inclusion():
        for s in supports:
            comp, local_group, local_p = _local_context(s)
            els = local_group.elements()
            for u in els:
                for v in els:
                    local_same = local_group.coset_min(u, local_p) == local_group.coset_min(v, local_p)
                    ua, va = _to_ambient(comp, local_group, u), _to_ambient(comp, local_group, v)
                    ambient_same = group.coset_min(ua, parabolic) == group.coset_min(va, parabolic)
                    yield local_same == ambient_same, f"S={sorted(x + 1 for x in s)}"
    out.check("coset-inclusion", _coset_inclusion())

    def _hecke_compat():
        for s in supports:
            comp, local_group, local_p = _local_context(s)
            els = local_group.elements()
            for u in els:
                for v in els:
                    local = _to_ambient(comp, local_group, local_group.hecke_product(u, v))
                    ambient = group.hecke_product(
                        _to_ambient(comp, local_group, u), _to_ambient(comp, local_group, v)
                    )
                    yield local == ambient, f"S={sorted(x + 1 for x in s)}"
    out.check("hecke-compatibility", _hecke_compat())

    def _chain_closure():
        outside = [a for a in system.positive_roots if not in_r_p(system, parabolic, a)]
        for s in supports:
            comp, local_group, local_p = _local_context(s)
            image = {
                group.coset_min(_to_ambient(comp, local_group, m), parabolic)
                for m in local_group.cosets(local_p)
            }
            for m in image:
                for alpha in outside:
                    target = group.coset_min(
                        group.multiply(m, group.reflection(alpha)), parabolic
                    )
                    if target == m or target not in image:
                        continue
                    yield (
                        system.support(alpha) <= s,
                        f"S={sorted(x + 1 for x in s)} alpha={alpha}",
                    )
    out.check("chain-edge-closure", _chain_closure())

    def _locally_high():
        for a in locally_high:
            yield (
                delta_w(group, parabolic, group.reflection(a), pad).degrees
                == (d_of_root(system, parabolic, a),),
                f"alpha={a}",
            )
    out.check("locally-high-delta", _locally_high())
    return out.done()


def _suite_orthogonality(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    system = group.system
    corner = _d_x(system, parabolic)
    selfish = [
        d
        for d in degree_box(parabolic, corner, pad)
        if d in delta_w(group, parabolic, z(group, parabolic, d).z_min, pad)
    ]
    def _first_entry():
        for d in selfish:
            if d.is_zero():
                continue
            for m in maximal_roots(system, parabolic, d):
                rest = d - d_of_root(system, parabolic, m)
                for b in naive_support(parabolic, rest):
                    simple = system.simple_roots[b]
                    orth = system.inner(m, simple) == 0
                    strong = orth and not system.is_root(_vec_add(m, simple))
                    yield orth and strong, f"d={d.coeffs} alpha={m} beta={b + 1}"
    out.check("first-entry-orthogonality", _first_entry())
    if not parabolic.delta_p:
        def _pairwise():
            for d in selfish:
                entries = greedy_decomposition(system, parabolic, d)
                if len(set(entries)) != len(entries):
                    yield False, f"repeated entry in d={d.coeffs}"
                    continue
                for a, b in itertools.combinations(entries, 2):
                    yield (
                        _is_strongly_orthogonal(system, a, b),
                        f"d={d.coeffs} {a} {b}",
                    )
        out.check("pairwise-strong-orthogonality", _pairwise())
    return out.done()


def _suite_final_cor(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    out = _Collector()
    system = group.system
    corner = _d_x(system, parabolic)
    def _restriction():
        for d in degree_box(parabolic, corner, pad):
            if d not in delta_w(group, parabolic, z(group, parabolic, d).z_min, pad):
                continue
            for b in parabolic.free:
                p_b = parabolic.maximal_above(b)
                e = restrict(d, p_b)
                yield (
                    e in delta_w(group, p_b, z(group, p_b, e).z_min, pad),
                    f"d={d.coeffs} beta={b + 1}",
                )
    out.check("maximal-restriction-membership", _restriction())
    def _interval():
        for b in parabolic.free:
            p_b = parabolic.maximal_above(b)
            top = _d_gpbeta(system, b)
            got = {
                e.coeffs[0]
                for e in degree_box(p_b, Degree(p_b, (top,)), pad)
                if e in delta_w(group, p_b, z(group, p_b, e).z_min, pad)
            }
            yield got == set(range(top + 1)), f"beta={b + 1} got={sorted(got)}"
    out.check("interval-identity-box", _interval())
    if _group_at_most(group, 60):
        def _interval_pairs():
            for b in parabolic.free:
                p_b = parabolic.maximal_above(b)
                top = _d_gpbeta(system, b)
                table = _pairs_table(group, p_b, pad)
                n = len(group.cosets(p_b))
                got = {
                    c[0] for i in range(n) for j in range(n) for c in table[(i, j)]
                }
                yield got == set(range(top + 1)), f"beta={b + 1} got={sorted(got)}"
        out.check("interval-identity-pairs", _interval_pairs())
    return out.done()


def _suite_g2_examples(group: WeylGroup, parabolic: Parabolic, pad: int) -> tuple:
    system = group.system
    if (system.type_letter, system.rank) != ("G", 2):
        raise ConfigurationError("suite g2-examples requires type G rank 2")
    out = _Collector()
    b = Parabolic(2, frozenset())
    p2 = Parabolic(2, frozenset({0}))  # P_{alpha_2}
    theta_s = system.highest_short_root
    s_ts = group.reflection(theta_s)
    front = delta_w(group, p2, s_ts, pad)
    pairing = system.coroot(theta_s)[1]
    out.check(
        "example-5-9",
        [
            (
                front.degrees == (Degree(p2, (2,)),) and pairing == 3,
                f"delta={front.degrees[0].coeffs[0]} pairing={pairing}",
            )
        ],
    )
    out.check(
        "example-5-9-prime",
        [
            (
                Degree(b, system.coroot(theta_s)) not in delta_w(group, b, s_ts, pad),
                f"coroot={system.coroot(theta_s)}",
            )
        ],
    )
    dgb = _d_x(system, b)
    e = Degree(b, (2, 1))
    expected_greedy = ((3, 1), (1, 0))
    table = _pairs_table(group, b, pad)
    n = len(group.cosets(b))
    absent = all(e.coeffs not in table[(i, j)] for i in range(n) for j in range(n))
    out.check(
        "example-inclusionstrict",
        [
            (dgb.coeffs == (2, 2), f"d_GB={dgb.coeffs}"),
            (
                greedy_decomposition(system, b, e) == expected_greedy,
                f"greedy={greedy_decomposition(system, b, e)}",
            ),
            (absent, "degree (2,1) occurred in some delta_B(u,v)"),
            (
                e not in delta_w(group, b, z(group, b, e).z_min, pad),
                "degree (2,1) is a self-front degree",
            ),
        ],
    )
    return out.done()


@dataclass(frozen=True)
class FrontCoverage:
    """Exploration data: which degrees below d_X occur as minimal pair degrees.

    No theorem asserts the interval [0, d_X] is covered (the G2 instance shows
    a gap), and no claim is made that fronts are singletons; this only reports
    what an exhaustive search finds.
    """

    achieved: tuple  # degrees d <= d_X with d in delta_P(z_d^P)
    gaps: tuple  # degrees d <= d_X never minimal in any pair product
    nonsingleton_pairs: tuple  # coset-index pairs whose front has > 1 element


def front_coverage(group: WeylGroup, parabolic: Parabolic, pad: int = 2) -> FrontCoverage:
    """Scan [0, d_X] for unachieved minimal degrees and non-singleton fronts.

    The self-front characterization (d in delta_P(z_d^P)) drives the coverage
    scan; on groups small enough to enumerate, the all-pairs chain table is
    cross-checked against it.
    """
    system = group.system
    corner = _d_x(system, parabolic)
    achieved = tuple(
        d
        for d in degree_box(parabolic, corner, 0)
        if d in delta_w(group, parabolic, z(group, parabolic, d).z_min, pad)
    )
    gaps = tuple(d for d in degree_box(parabolic, corner, 0) if d not in achieved)
    nonsingleton = ()
    if _group_at_most(group, 48):
        table = _pairs_table(group, parabolic, pad)
        n = len(group.cosets(parabolic))
        from_pairs = {c for front in table.values() for c in front}
        if from_pairs != {d.coeffs for d in achieved}:
            raise InvariantViolationError(
                "pair-front union disagrees with the self-front characterization"
            )
        nonsingleton = tuple(
            (i, j) for i in range(n) for j in range(n) if len(table[(i, j)]) > 1
        )
    return FrontCoverage(achieved, gaps, nonsingleton)


_SUITES = {
    "hecke": _suite_hecke,
    "zd": _suite_zd,
    "uniqueness": _suite_uniqueness,
    "main": _suite_main,
    "description": _suite_description,
    "delta2": _suite_delta2,
    "delta-props": _suite_delta_props,
    "delta2-props": _suite_delta2_props,
    "inductive": _suite_inductive,
    "resind": _suite_resind,
    "simply-laced": _suite_simply_laced,
    "compatibility": _suite_compatibility,
    "orthogonality": _suite_orthogonality,
    "final-cor": _suite_final_cor,
    "g2-examples": _suite_g2_examples,
}


def suite_names() -> tuple:
    return tuple(sorted(_SUITES))


def verify_suite(
    name: str,
    type_letter: str,
    rank: int,
    parabolic=None,
    pad: int = 2,
    mode: str = "auto",
    group: WeylGroup | None = None,
) -> SuiteReport:
    """Run one named suite on (type, rank, parabolic) and report per-claim results."""
    if name not in _SUITES:
        raise ConfigurationError(
            f"unknown suite {name!r}; available: {', '.join(suite_names())}"
        )
    if group is None:
        group = weyl_group(type_letter, rank)
    system = group.system
    if parabolic is None:
        parabolic = Parabolic(system.rank, frozenset())
    if name == "main":
        checks = _SUITES[name](group, parabolic, pad, mode)
    else:
        checks = _SUITES[name](group, parabolic, pad)
    return SuiteReport(
        suite=name,
        type_letter=system.type_letter,
        rank=system.rank,
        parabolic=tuple(sorted(i + 1 for i in parabolic.delta_p)),
        passed=all(c.passed for c in checks),
        checks=checks,
    )
