"""z_d^P, curve neighborhoods, and the cosmall classifications."""

import pytest

from qdeg.cascade import d_x
from qdeg.curveneighborhood import (
    curve_neighborhood,
    equalwx_criterion,
    is_cosmall,
    is_very_cosmall,
    z,
    z_lift_check,
)
from qdeg.degreelattice import Degree, degree_box, in_r_p
from qdeg.errors import DomainError
from qdeg.weylgroup import Parabolic, weyl_group

from conftest import all_parabolics


def test_z_trivial_and_golden():
    g2 = weyl_group("G", 2)
    b = Parabolic.from_indices(2, set())
    assert z(g2, b, Degree.zero(b)).z_min == g2.identity
    result = z(g2, b, Degree(b, (2, 2)))
    assert result.z_min == g2.w_o
    for p in all_parabolics(2):
        for d in degree_box(p, d_x(g2.system, p), 1):
            r = z(g2, p, d)
            assert r.z_max == g2.hecke_product(r.z_min, g2.longest_element(p))
            assert g2.coset_min(r.z_max, p) == r.z_min


def test_z_monotone_b2():
    b2 = weyl_group("B", 2)
    b = Parabolic.from_indices(2, set())
    box = list(degree_box(b, Degree(b, (3, 3)), 0))
    for d in box:
        for d2 in box:
            if d.leq(d2):
                assert b2.bruhat_leq(z(b2, b, d).z_min, z(b2, b, d2).z_min)


def test_curve_neighborhood():
    g2 = weyl_group("G", 2)
    for p in all_parabolics(2):
        for m in g2.cosets(p):
            assert curve_neighborhood(g2, p, m, Degree.zero(p)).element == m
        dx = d_x(g2.system, p)
        assert curve_neighborhood(g2, p, g2.identity, dx).element == g2.w_x(p)


def test_nested_neighborhoods_b2():
    """Composite neighborhoods against the one-shot ones, via the Hecke chain bound."""
    b2 = weyl_group("B", 2)
    b = Parabolic.from_indices(2, set())
    box = list(degree_box(b, Degree(b, (2, 2)), 0))
    for d in box:
        for d2 in box:
            composite = b2.hecke_product(z(b2, b, d2).z_min, z(b2, b, d).z_min)
            assert b2.bruhat_leq(composite, z(b2, b, d + d2).z_max)
            nested = curve_neighborhood(
                b2, b, curve_neighborhood(b2, b, b2.identity, d2).element, d
            ).element
            once = curve_neighborhood(b2, b, b2.identity, d + d2).element
            assert b2.bruhat_leq(nested, once)


def test_cosmall_examples():
    g2 = weyl_group("G", 2)
    b3 = weyl_group("B", 3)
    for group in (g2, b3):
        system = group.system
        for p in all_parabolics(system.rank):
            if in_r_p(system, p, system.highest_root):
                continue
            assert is_cosmall(group, p, system.highest_root)
    for group in (g2, b3):
        system = group.system
        b = Parabolic.from_indices(system.rank, set())
        assert not is_cosmall(group, b, system.highest_short_root)
        long_len = max(system.inner(a, a) for a in system.positive_roots)
        for a in system.positive_roots:
            if sum(a) == 1 or system.inner(a, a) == long_len:
                assert is_cosmall(group, b, a)
    with pytest.raises(DomainError):
        p2 = Parabolic.from_indices(2, {0})
        is_cosmall(g2, p2, g2.system.simple_roots[0])


def test_very_cosmall():
    for group in (weyl_group("B", 3), weyl_group("G", 2)):
        system = group.system
        for p in all_parabolics(system.rank):
            if not p.free:
                continue
            outside = [a for a in system.positive_roots if not in_r_p(system, p, a)]
            very = [a for a in outside if is_very_cosmall(group, p, a)]
            if p.is_maximal():
                assert very == [a for a in outside if is_cosmall(group, p, a)]
            else:
                assert very == [system.highest_root]


def test_z_lift_b2():
    b2 = weyl_group("B", 2)
    for p in all_parabolics(2):
        corner = Degree(p, (3,) * len(p.free))
        for d in degree_box(p, corner, 0):
            assert z_lift_check(b2, p, d)
    b = Parabolic.from_indices(2, set())
    # P = B: e = d is always a witness, found with a zero-dimensional scan
    for d in degree_box(b, Degree(b, (3, 3)), 0):
        assert z_lift_check(b2, b, d)


def test_equalwx():
    g2 = weyl_group("G", 2)
    b = Parabolic.from_indices(2, set())
    dx = d_x(g2.system, b)
    assert equalwx_criterion(g2, b, dx)
    assert not equalwx_criterion(g2, b, Degree.zero(b))
    b2 = weyl_group("B", 2)
    for p in all_parabolics(2):
        if not p.free:
            continue
        corner = d_x(b2.system, p)
        for d in degree_box(p, corner, 1):
            crit = equalwx_criterion(b2, p, d)
            assert crit == (z(b2, p, d).z_min == b2.w_x(p))
