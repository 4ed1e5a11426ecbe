import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sylowbranch.trees import (
    CharDescriptor,
    Tree,
    TreeError,
    canonicalize,
    check_shape,
    common_ancestors_zero,
    count_irr,
    degree,
    enumerate_descriptors,
    enumerate_irr,
    equivalent_0p,
    equivalent_trees,
    format_tree,
    is_admissible,
    leaf,
    linear_tree,
    p_adic_descriptor,
    p_adic_exponents,
    parse_descriptor,
    parse_tree,
    random_rotate,
    tree_from_json,
    tree_stats,
    tree_to_json,
)

ADMISSIBLE_P3_K4 = (
    "(((1|1|1;2)|(1|1|1;2)|(1|1|1;2);1)|((0|1|1;3)|(0|1|1;3)|(0|1|1;3);1)|((0|0|0;1)|(0|0|0;1)|(0|0|0;1);0);3)"
)
INADMISSIBLE_P3_K3 = "((0|0|0;3)|(2|2|3;0)|(1|1|1;0);2)"


@pytest.mark.parametrize("p,k,count", [(5, 1, 5), (5, 2, 649), (3, 1, 3), (3, 2, 17), (3, 3, 1683)])
def test_orbit_counts(p, k, count):
    trees = enumerate_irr(p, k)
    assert len(trees) == count == count_irr(p, k)
    assert len(set(trees)) == count
    assert all(canonicalize(t) == t and is_admissible(t, p) for t in trees)


def test_count_at_depth_three_without_enumeration():
    assert count_irr(5, 3) == 23027854658765
    with pytest.raises(TreeError):
        enumerate_irr(5, 3)


def test_rotations_at_root_give_one_orbit():
    a, b, c = parse_tree("(0|0|1;3)", 3), parse_tree("(1|1|1;0)", 3), parse_tree("(2|2|2;0)", 3)
    assert canonicalize(Tree(3, (a, b, c))) == canonicalize(Tree(3, (b, c, a)))
    assert canonicalize(Tree(3, (a, b, c))) != canonicalize(Tree(3, (b, a, c)))


def test_admissibility():
    assert is_admissible(parse_tree("(2|2|2;1)", 3), 3)
    assert not is_admissible(parse_tree("(1|2|2;1)", 3), 3)
    assert not is_admissible(parse_tree("(1|1|1;3)", 3), 3)
    assert not is_admissible(parse_tree(INADMISSIBLE_P3_K3, 3), 3)
    assert is_admissible(parse_tree(ADMISSIBLE_P3_K4, 3), 3)


def test_statistics_of_depth_four_example():
    st_ = tree_stats(parse_tree(ADMISSIBLE_P3_K4, 3), 3)
    assert (st_.eta, st_.gamma, st_.value) == (23, (18, 4, 1), 3)


def test_statistics_of_inadmissible_example():
    st_ = tree_stats(parse_tree(INADMISSIBLE_P3_K3, 3), 3)
    assert (st_.eta, st_.gamma_at(0), st_.gamma_at(1), st_.value) == (6, 5, 1, 2)


def test_statistics_of_linear_example_p3():
    st_ = tree_stats(linear_tree(3, [1, 0, 2]), 3)
    assert (st_.eta, st_.gamma_at(0), st_.gamma_at(1), st_.value) == (10, 9, 1, 2)


@pytest.mark.parametrize(
    "text,eta,gammas,deg",
    [
        ("(X(0;1)|1_25|1_25|X(2;0)|(0|0|1|0|3;5);5)", 8, (8,), 25),
        ("(1_25^4|X(1;0);5)", 5, (5,), 5),
        ("(1_25|X(1;2)|X(3;0)|(2|0|0|0|0;5)|X(1;1);5)", 18, (16, 2), 25),
    ],
)
def test_statistics_of_depth_three_examples(text, eta, gammas, deg):
    theta = parse_descriptor(text, 5)
    assert theta.n == 125
    s = theta.stats()
    assert (s.eta, s.gamma, degree(theta)) == (eta, gammas, deg)


def test_linear_statistics_at_125():
    want = {
        (0, 0, 0): (0, 0, 0),
        (0, 0, 1): (1, 1, 0),
        (0, 1, 0): (5, 5, 0),
        (1, 0, 0): (25, 25, 0),
        (0, 1, 1): (6, 5, 1),
        (1, 0, 1): (26, 25, 1),
        (1, 1, 0): (30, 25, 5),
        (1, 1, 1): (31, 25, 5),
    }
    for labels, (eta, g0, g1) in want.items():
        s = tree_stats(linear_tree(5, labels), 5)
        assert (s.eta, s.gamma_at(0), s.gamma_at(1)) == (eta, g0, g1), labels


def _gamma_bounds_hold(t, p, k):
    s = tree_stats(t, p)
    assert all(s.gamma_at(i) <= p ** (k - 1 - i) for i in range(k))
    if s.gamma_at(0) < p:
        assert s.value <= 1
    assert s.eta == sum(s.gamma)


@pytest.mark.parametrize("p,k", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2)])
def test_gamma_bounds_exhaustive(p, k):
    for t in enumerate_irr(p, k):
        _gamma_bounds_hold(t, p, k)


def test_degree_counts_p_labels():
    total = sum(degree(th) ** 2 for th in enumerate_descriptors(5, 25))
    assert total == 5 ** 6
    assert sum(degree(th) ** 2 for th in enumerate_descriptors(3, 9)) == 3 ** 4


def test_people_common_ancestor_condition():
    assert common_ancestors_zero(linear_tree(5, [1, 0]), 5)
    assert common_ancestors_zero(linear_tree(5, [0, 1]), 5)  # one person, vacuous
    assert not common_ancestors_zero(linear_tree(5, [1, 1]), 5)
    assert common_ancestors_zero(parse_tree("(1_25^4|X(1;0);5)", 5), 5)
    assert not common_ancestors_zero(parse_tree("(0|0|0|1|2;5)", 5), 5)


def test_relabelling_equivalence():
    assert equivalent_trees(linear_tree(5, [1, 2]), linear_tree(5, [3, 4]), 5)
    assert not equivalent_trees(linear_tree(5, [1, 0]), linear_tree(5, [1, 2]), 5)
    assert equivalent_trees(parse_tree("(0|1|2|0|3;5)", 5), parse_tree("(0|4|4|0|4;5)", 5), 5)
    assert not equivalent_trees(parse_tree("(0|1|2|0|3;5)", 5), parse_tree("(0|4|4|4|0;5)", 5), 5)
    a = parse_descriptor("(0|1|2|0|3;5)", 5)
    b = parse_descriptor("(3|0|4|4|0;5)", 5)
    assert equivalent_0p(a, b)


def test_equivalence_classes_at_25():
    classes = {}
    for t in enumerate_irr(5, 2):
        key = canonicalize(_mask(t))
        classes.setdefault(key, 0)
        classes[key] += 1
    assert len(classes) == 11
    assert sorted(classes.values()) == sorted([1, 4, 4, 16, 4, 16, 64, 64, 256, 204, 16])


def _mask(t):
    from sylowbranch.trees import mask_people

    return mask_people(t, 5)


def test_p_adic_exponents_and_descriptors():
    assert p_adic_exponents(5, 30) == (1, 2)
    assert p_adic_exponents(5, 27) == (0, 0, 2)
    th = p_adic_descriptor(5, 30, [linear_tree(5, [1, 0]), leaf(2)])
    assert [k for k, _ in th.components] == [1, 2]
    assert sum(1 for _ in enumerate_descriptors(5, 30)) == 5 * 649
    with pytest.raises(TreeError):
        CharDescriptor(5, 30, ((2, linear_tree(5, [0, 0])),))


def test_parser_forms_and_errors():
    assert parse_tree("X(1;2)", 5) == linear_tree(5, [1, 2])
    assert parse_tree("1_25", 5) == linear_tree(5, [0, 0])
    assert parse_tree("(0^4|1;5)", 5) == Tree(5, (leaf(0),) * 4 + (leaf(1),))
    for bad in ["X(1;", "(0|0;", "(0|0|0;1)x", "1_24"]:
        with pytest.raises(TreeError):
            parse_tree(bad, 5)
    with pytest.raises(TreeError):
        parse_tree("(0|0|0;1)", 5)


def test_json_roundtrip():
    t = parse_tree(ADMISSIBLE_P3_K4, 3)
    assert tree_from_json(tree_to_json(t)) == t
    assert parse_tree(format_tree(t), 3) == t


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(enumerate_irr(3, 3)), st.integers(0, 2**32))
def test_canonical_form_is_orbit_invariant(t, seed):
    rotated = random_rotate(t, random.Random(seed))
    check_shape(rotated, 3)
    assert canonicalize(rotated) == t
    assert canonicalize(canonicalize(rotated)) == canonicalize(rotated)
    assert tree_stats(rotated, 3) == tree_stats(t, 3)
