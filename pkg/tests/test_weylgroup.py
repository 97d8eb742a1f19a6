"""Weyl group actions, Bruhat order (vs. the subword oracle), Hecke basics."""

import pytest

from qdeg.errors import ResourceError
from qdeg.weylgroup import Parabolic, weyl_group


def subword_leq(group, u, v):
    """Subword-criterion oracle: products of subwords of word(v) are exactly {x <= v}."""
    reachable = {group.identity}
    for j in group.reduced_word(v):
        s = group.simple_reflection(j)
        reachable |= {group.multiply(x, s) for x in reachable}
    return u in reachable


def test_simple_reflections():
    group = weyl_group("B", 2)
    for j in range(2):
        s = group.simple_reflection(j)
        assert group.apply(s, group.system.simple_roots[j]) == tuple(
            -c for c in group.system.simple_roots[j]
        )
        assert group.multiply(s, s) == group.identity
    for a in group.system.positive_roots:
        r = group.reflection(a)
        assert group.multiply(r, r) == group.identity


def test_length_of_theta_reflection_a2():
    group = weyl_group("A", 2)
    theta = group.system.highest_root
    w = group.reflection(theta)
    # inversion count, spelled out independently of length()
    inversions = [a for a in group.system.positive_roots if group.is_negative(group.apply(w, a))]
    assert len(inversions) == 3 == group.length(w)
    assert len(group.reduced_word(w)) == 3


def test_braid_relation_a2():
    group = weyl_group("A", 2)
    s1, s2 = group.simple_reflection(0), group.simple_reflection(1)
    lhs = group.multiply(group.multiply(s1, s2), s1)
    rhs = group.multiply(group.multiply(s2, s1), s2)
    assert lhs == rhs == group.reflection(group.system.highest_root)
    assert group.reduced_word(lhs) == (0, 1, 0)


def test_identity_and_longest():
    group = weyl_group("G", 2)
    assert group.reduced_word(group.identity) == ()
    assert group.length(group.w_o) == 6
    assert group.longest_element(frozenset()) == group.identity
    assert group.longest_element(frozenset({0})) == group.simple_reflection(0)
    a2 = weyl_group("A", 2)
    for a in a2.system.positive_roots:
        assert a2.is_negative(a2.apply(a2.w_o, a))
    for g in (group, a2):
        assert g.multiply(g.w_o, g.w_o) == g.identity


def test_coset_representatives():
    a2 = weyl_group("A", 2)
    p = Parabolic.from_indices(2, {1})
    # coset_min(w_o) for Delta_P = {alpha_2} is the length-2 element using both letters
    # (the word reads [2,1] in our right-to-left composition convention)
    m = a2.coset_min(a2.w_o, p)
    assert m == a2.from_word([1, 0])
    assert a2.length(m) == 2 and set(a2.reduced_word(m)) == {0, 1}
    assert a2.multiply(m, a2.longest_element(p)) == a2.w_o
    assert a2.coset_min(a2.longest_element(p), p) == a2.identity
    b = Parabolic.from_indices(2, set())
    for w in a2.elements():
        assert a2.coset_min(w, b) == w
    top = a2.coset_max_rep(a2.identity, p)
    assert top.element == a2.longest_element(p) and top.flavor == "maximal"
    assert a2.w_x(p) == a2.multiply(a2.w_o, a2.longest_element(p))


@pytest.mark.parametrize("letter,rank", [("A", 3), ("B", 3), ("G", 2)])
def test_bruhat_matches_subword_oracle(letter, rank):
    group = weyl_group(letter, rank)
    els = group.elements()
    for u in els:
        for v in els:
            assert group.bruhat_leq(u, v) == subword_leq(group, u, v)


def test_bruhat_basics():
    g2 = weyl_group("G", 2)
    els = g2.elements()
    for w in els:
        assert g2.bruhat_leq(g2.identity, w)
    for u in els:
        for v in els:
            if g2.bruhat_leq(u, v) and g2.bruhat_leq(v, u):
                assert u == v
    s_ts = g2.reflection(g2.system.highest_short_root)
    assert g2.bruhat_leq(s_ts, g2.w_o)
    assert not g2.bruhat_leq(s_ts, g2.simple_reflection(0))


def test_hecke_basics():
    b2 = weyl_group("B", 2)
    p = Parabolic.from_indices(2, {0})
    w_p = b2.longest_element(p)
    for j in range(2):
        s = b2.simple_reflection(j)
        assert b2.hecke_product(s, s) == s
    for w in b2.elements():
        assert b2.hecke_product(w, b2.identity) == w
    assert b2.hecke_product(w_p, w_p) == w_p


def test_hecke_coset_rep_laws_rank3():
    """Max rep <=> w.w_P = w; min rep gives ww_P = w.w_P maximal; all parabolics."""
    from conftest import all_parabolics

    for letter, rank in [("A", 3), ("B", 3), ("C", 3)]:
        group = weyl_group(letter, rank)
        for p in all_parabolics(rank):
            w_p = group.longest_element(p)
            for w in group.elements():
                top = group.coset_max_rep(w, p).element
                assert (top == w) == (group.hecke_product(w, w_p) == w)
                if group.coset_min(w, p) == w:
                    assert group.multiply(w, w_p) == group.hecke_product(w, w_p) == top
                assert group.hecke_product(w, w_p) == top
                assert group.multiply(top, w_p) == group.coset_min(w, p)


def test_stabilizer_descriptions_agree():
    for letter, rank in [("A", 2), ("B", 2)]:
        group = weyl_group(letter, rank)
        for p_set in [set(), {0}, {1}, {0, 1}]:
            p = Parabolic.from_indices(rank, p_set)
            for m in group.cosets(p):
                hecke_def = group.stabilizer_delta(m, p)
                bruhat_def = frozenset(
                    j
                    for j in range(rank)
                    if group.bruhat_leq_coset(
                        group.multiply(group.simple_reflection(j), m), m, p
                    )
                )
                assert hecke_def == bruhat_def


def test_stabilizer_extremes():
    b2 = weyl_group("B", 2)
    p = Parabolic.from_indices(2, {1})
    assert b2.stabilizer_delta(b2.w_o, p) == frozenset({0, 1})
    assert b2.stabilizer_delta(b2.identity, p) == p.delta_p


def test_dual():
    a2 = weyl_group("A", 2)
    assert a2.dual(a2.identity) == a2.w_o
    for w in a2.elements():
        assert a2.dual(a2.dual(w)) == w
        assert a2.length(w) + a2.length(a2.dual(w)) == len(a2.system.positive_roots)


def test_enumeration():
    assert len(weyl_group("A", 2).elements()) == 6
    assert len(weyl_group("G", 2).elements()) == 12
    a3 = weyl_group("A", 3)
    p = Parabolic.from_indices(3, {0, 2})
    assert len(a3.cosets(p)) == 6
    with pytest.raises(ResourceError):
        weyl_group("B", 3).elements(cap=7)


def test_inverse_via_word():
    b3 = weyl_group("B", 3)
    for w in b3.elements()[:40]:
        assert b3.multiply(w, b3.inverse(w)) == b3.identity


def test_element_support_definitions_agree():
    """Letters of the canonical word == {beta : s_beta <= w} (word independence)."""
    for letter, rank in [("A", 3), ("B", 2), ("G", 2)]:
        group = weyl_group(letter, rank)
        for w in group.elements():
            from_word = frozenset(group.reduced_word(w))
            from_bruhat = frozenset(
                j for j in range(rank) if group.bruhat_leq(group.simple_reflection(j), w)
            )
            assert from_word == from_bruhat
