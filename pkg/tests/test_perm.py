import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from treeparity.oracles import closure_order
from treeparity.perm import PermGroup, Permutation, compose, contains, cycle_type, group_order, in_alternating, sign


def cyc(m, *cycles):
    return Permutation.from_cycles(m, cycles)


def test_compose_left_to_right():
    p, q = cyc(3, (2, 3)), cyc(3, (1, 2))
    assert str(compose(p, q)) == "(1 2 3)"
    assert (p * q)(0) == q(p(0))
    with pytest.raises(ValueError):
        compose(p, Permutation.identity(4))


def test_printing_and_parsing():
    p = Permutation.parse("(1 2 3)(4 5)", 6)
    assert str(p) == "(1 2 3)(4 5)"
    assert str(Permutation.identity(3)) == "()"
    assert Permutation.parse("()", 2).is_identity()


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


@pytest.mark.parametrize("m", [1, 3, 5, 7, 9])
def test_odd_cycle_is_even(m):
    assert sign(cyc(m, tuple(range(1, m + 1)))) == 1


def test_sign_examples():
    assert sign(cyc(4, (1, 3))) == -1
    assert sign(Permutation.identity(5)) == 1


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(5)) == [1, 1, 1, 1, 1]
    assert cycle_type(cyc(7, tuple(range(1, 8)))) == [7]
    assert sorted(cycle_type(cyc(3, (2, 3)))) == [1, 2]


def test_group_order_examples():
    assert group_order(PermGroup([cyc(3, (1, 2)), cyc(3, (1, 2, 3))])) == 6
    assert group_order(PermGroup([cyc(3, (1, 2, 3))])) == 3
    assert group_order(PermGroup([cyc(2, (1, 2))])) == 2
    assert group_order(PermGroup([], degree=4)) == 1


@pytest.mark.parametrize("m", [3, 5, 8, 12, 20, 30])
def test_symmetric_and_alternating_orders(m):
    full = PermGroup([cyc(m, (1, 2)), cyc(m, tuple(range(1, m + 1)))])
    assert full.order() == math.factorial(m)
    alt = PermGroup([cyc(m, (i, i + 1, i + 2)) for i in range(1, m - 1)])
    assert alt.order() == math.factorial(m) // 2
    assert in_alternating(alt) and not in_alternating(full)


def test_membership_examples():
    gens = [cyc(5, (1, 2, 3)), cyc(5, (3, 4, 5))]
    g = PermGroup(gens)
    assert all(contains(g, x) for x in gens)
    assert not contains(g, cyc(5, (1, 2)))
    assert in_alternating(g)
    assert not in_alternating(PermGroup(gens + [cyc(5, (1, 2))]))


def test_degree_ceiling():
    with pytest.raises(ValueError):
        PermGroup([Permutation.identity(41)]).order()


def _random_perm(rnd, m):
    images = list(range(m))
    rnd.shuffle(images)
    return Permutation(tuple(images))


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=12), st.randoms(use_true_random=False))
def test_sign_homomorphism(m, rnd):
    p, q = _random_perm(rnd, m), _random_perm(rnd, m)
    assert sign(p * q) == sign(p) * sign(q)
    assert (p * p.inverse()).is_identity()
    assert p ** 3 == p * p * p


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=2, max_value=7), st.integers(min_value=1, max_value=3), st.randoms(use_true_random=False))
def test_order_matches_closure(m, k, rnd):
    gens = [_random_perm(rnd, m) for _ in range(k)]
    assert PermGroup(gens, m).order() == closure_order([g.images for g in gens], m)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=2, max_value=7), st.randoms(use_true_random=False))
def test_random_products_are_members(m, rnd):
    gens = [_random_perm(rnd, m) for _ in range(2)]
    g = PermGroup(gens, m)
    word = Permutation.identity(m)
    for _ in range(rnd.randrange(1, 10)):
        word = word * rnd.choice(gens)
    assert word in g


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=2, max_value=10), st.randoms(use_true_random=False))
def test_conjugation_invariance(m, rnd):
    gens = [_random_perm(rnd, m) for _ in range(2)]
    r = _random_perm(rnd, m)
    g, h = PermGroup(gens, m), PermGroup(gens, m).conjugate(r)
    assert h.order() == g.order()
    assert in_alternating(h) == in_alternating(g)
    assert gens[0].conjugate(r) == r.inverse() * gens[0] * r


def test_exhaustive_small_degree():
    # all pairs of permutations on 4 points
    perms = [Permutation(p) for p in itertools.permutations(range(4))]
    for a, b in itertools.combinations(perms, 2):
        assert PermGroup([a, b]).order() == closure_order([a.images, b.images], 4)


def test_restrict():
    p = cyc(6, (1, 3), (2, 4))
    assert p.restrict([0, 2]) == cyc(2, (1, 2))
    with pytest.raises(ValueError):
        p.restrict([0, 1])
