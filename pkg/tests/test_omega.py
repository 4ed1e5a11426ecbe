import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sylowbranch import omega as om
from sylowbranch.oracle import restriction_mult
from sylowbranch.partitions import Box, FullSet, PuncturedBox, PuncturedFull, conjugate, enumerate_partitions
from sylowbranch.trees import enumerate_descriptors, enumerate_irr, equivalent_0p, p_adic_descriptor, parse_descriptor

MIXED_125_A = "(X(0;1)|1_25|1_25|X(2;0)|(0|0|1|0|3;5);5)"
PUNCTURED_125 = "(1_25^4|X(1;0);5)"
MIXED_125_C = "(1_25|X(1;2)|X(3;0)|(2|0|0|0|0;5)|X(1;1);5)"


def th(text, n=None):
    return parse_descriptor(text, 5, n)


def test_outer_parameter_examples():
    assert om.capital_M(th("X(1;0;0)")) == 100
    assert om.capital_M(th("X(0;0;0)")) == 125
    assert om.capital_M(th(MIXED_125_A)) == 117
    assert om.capital_M(th("0", 7)) == 7


def test_inner_parameter_examples():
    assert om.little_m(th("X(0;0;0)")) == 123
    assert om.little_m(th("X(1;1;1)")) == 95
    assert om.little_m(th("X(0;1;0)")) == 119
    assert om.little_m(th("X(1;0)")) == 19
    assert om.little_m(th(MIXED_125_A)) == 117
    assert (om.little_m(th(MIXED_125_C)), om.capital_M(th(MIXED_125_C))) == (107, 109)


def test_trivial_character_off_prime_powers_has_no_correction():
    assert om.little_m(th("0", 7)) == 7
    assert om.little_m(th("X(0;0), 0", 30)) == 30
    assert om.omega_shape(th("X(0;0), 0", 30)) == om.ExactSet(FullSet(30))


def test_punctured_criterion():
    assert om.is_punctured(th("X(1;0)"))
    assert not om.is_punctured(th("X(0;1)"))
    assert om.is_punctured(th(PUNCTURED_125))
    assert om.is_punctured(th("X(1;0), 0", 30))
    assert not om.is_punctured(th("X(1;0), 1", 30))
    with pytest.raises(ValueError):
        om.is_punctured(th("X(1;1)"))
    with pytest.raises(ValueError):
        om.is_punctured(th("X(0;0)"))


def test_shape_examples():
    assert om.omega_shape(th("0")) == om.ExactSet(PuncturedFull(5))
    assert om.omega_shape(th("X(1;0)")) == om.ExactSet(PuncturedBox(25, 20))
    assert om.omega_shape(th("X(0;1)")) == om.ExactSet(Box(25, 24))
    assert om.omega_shape(th(PUNCTURED_125)) == om.ExactSet(PuncturedBox(125, 120))
    layered = om.omega_shape(th("X(2;3)"))
    assert layered == om.ExactLayered(25, 19, 20, Box(5, 4))
    assert om.omega_shape(th("X(1;1;0)")) == om.Bounded(125, 95, 100)


def test_layered_membership():
    d = om.omega_shape(th("X(1;1)"))
    assert om.describes(d, (20, 3, 2)) and om.describes(d, conjugate((20, 3, 2)))
    assert not om.describes(d, (20, 5)) and not om.describes(d, (20, 1, 1, 1, 1, 1))
    assert om.describes(d, (19, 6)) and not om.describes(d, (21, 4))


def test_membership_examples():
    assert om.omega_member(th("X(0;1)"), (24, 1)) is om.Membership.IN
    assert om.omega_member(th("X(1;1;0)"), (98, 27)) is om.Membership.OUT
    assert om.omega_member(th("X(1;1;0)"), (98, 20, 7)) is om.Membership.UNKNOWN
    assert om.omega_member(th("X(1;1;0)"), (95, 30)) is om.Membership.IN
    assert om.omega_member(th("X(1;1;0)"), (101, 24)) is om.Membership.OUT
    with pytest.raises(ValueError):
        om.omega_member(th("X(0;1)"), (24,))


def test_intersection_lower_box():
    assert om.omega_intersection_lower(5, 30) == Box(30, 18)
    assert om.omega_intersection_lower(5, 25) == Box(25, 15)
    assert om.omega_intersection_lower(7, 49) == Box(49, 35)
    with pytest.raises(om.UnsupportedPrimeError):
        om.omega_intersection_lower(3, 9)


def test_gap_examples():
    assert om.gap_report(th("X(0;0;0)")).to_json() == {"gap": 2, "gamma1": 0, "c": 2}
    assert om.gap_report(th("X(1;1;1)")).to_json() == {"gap": 5, "gamma1": 5, "c": 0}
    assert om.gap_report(th("X(0;1;0)")).to_json() == {"gap": 1, "gamma1": 0, "c": 1}


def test_small_primes_are_refused():
    t = parse_descriptor("X(1;0)", 3)
    for fn in (om.capital_M, om.little_m, om.omega_shape, om.gap_report):
        with pytest.raises(om.UnsupportedPrimeError):
            fn(t)


COMPOSITE = [6, 10, 11, 15, 20, 26, 27, 30]


def _all(n):
    return list(enumerate_descriptors(5, n))


@pytest.mark.parametrize("n", [5, 25] + COMPOSITE)
def test_bounds_and_two_paths(n):
    seen = {}
    for t in _all(n):
        d = om.omega_shape(t)
        m, M = om.little_m(t), om.capital_M(t)
        assert m <= M
        assert om.shape_bounds(d) == (m, M)
        om.gap_report(t)
        seen[d] = t
    # each distinct description is conjugation-closed and sits between its boxes
    for d in seen:
        m, M = om.shape_bounds(d)
        for lam in enumerate_partitions(n):
            w = max(lam[0], len(lam))
            if isinstance(d, om.Bounded):
                continue
            inside = om.describes(d, lam)
            assert inside == om.describes(d, conjugate(lam))
            if w <= m:
                assert inside
            if w > M:
                assert not inside


@pytest.mark.parametrize("n", [5, 25, 6, 26, 30])
def test_membership_is_decided_for_exact_shapes(n):
    lams = enumerate_partitions(n)
    for t in _all(n):
        if t.stats().value > 1 and not isinstance(om.omega_shape(t), om.ExactLayered):
            continue
        for lam in lams[:: max(1, len(lams) // 200)]:
            assert om.omega_member(t, lam) is not om.Membership.UNKNOWN


def test_equivalent_characters_share_shapes():
    ds = _all(25)
    for a in ds:
        for b in ds:
            if equivalent_0p(a, b):
                assert om.omega_shape(a) == om.omega_shape(b)


def test_value_one_trees_with_few_people_fill_the_box():
    for t in enumerate_irr(5, 2):
        d = p_adic_descriptor(5, 25, [t])
        g0 = d.stats().gamma_at(0)
        if 0 < g0 < 5:
            assert om.omega_shape(d) == om.ExactSet(Box(25, 25 - g0))


_SMALL = [t for n in (10, 26, 30) for t in _all(n)]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(_SMALL), st.integers(0, 10**6))
def test_membership_agrees_with_oracle(theta, seed):
    lams = enumerate_partitions(theta.n)
    lam = random.Random(seed).choice(lams)
    verdict = om.omega_member(theta, lam)
    if verdict is om.Membership.UNKNOWN:
        return
    assert (restriction_mult(lam, theta) > 0) == (verdict is om.Membership.IN)


@pytest.mark.parametrize("text,boundary,tail", [("X(0;1;1)", 120, Box(5, 4)), ("X(1;0;1)", 100, Box(25, 24))])
def test_depth_three_layers_are_never_contradicted(text, boundary, tail):
    # known exact sets: B(boundary - 1) plus closure{(boundary, mu) : mu in tail}
    from sylowbranch.partitions import sym_materialize

    t = th(text)
    rest = 125 - boundary
    inside = [(boundary,) + mu for mu in sym_materialize(tail).members if mu[0] <= boundary][:40]
    for lam in inside:
        assert om.omega_member(t, lam) is not om.Membership.OUT
        assert om.omega_member(t, conjugate(lam)) is not om.Membership.OUT
    for lam in [(boundary, rest), (boundary,) + (1,) * rest]:
        assert om.omega_member(t, lam) is om.Membership.OUT
    assert om.omega_member(t, (boundary - 1, rest + 1)) is om.Membership.IN
    assert om.omega_member(t, (boundary + 1,) + (1,) * (rest - 1)) is om.Membership.OUT
