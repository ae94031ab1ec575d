import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from treeparity.catalog import COSPECTRAL_12, COSPECTRAL_12_PARITIES
from treeparity.oracles import pairwise_inversions
from treeparity.parity import (
    OddVertexCountError,
    Parity,
    TranspositionMove,
    apply_moves,
    chain_reduction,
    count_inversions,
    free_parity_via_moves,
    join_sum,
    marked_edge_forests,
    parity_free,
    parity_rooted,
    permute_level_one,
    reroot_along_marked,
    split_sum,
    transpose,
    transposition_moves,
)
from treeparity.trees import (
    BracketParseError,
    all_codes,
    canonical_key,
    chain,
    decode_bracket,
    encode_bracket,
    enumerate_free_trees,
    free_to_plane,
    plane_to_free,
    star,
)

from conftest import random_tree

SAMPLE = "(()(()(())))"


@pytest.mark.parametrize("code,count", [(SAMPLE, 6), ("(((())))", 0), ("()", 0), ("(()()())", 3), ("((((((()))))))", 0)])
def test_count_inversions(code, count):
    assert count_inversions(code) == count


def test_count_inversions_rejects_malformed():
    with pytest.raises(BracketParseError):
        count_inversions("(()")


@pytest.mark.parametrize("n", range(1, 7))
def test_count_matches_pairwise(n):
    for code in all_codes(n):
        assert count_inversions(code) == pairwise_inversions(code)


def test_parity_rooted_examples():
    assert parity_rooted(decode_bracket(SAMPLE)) is Parity.EVEN
    assert parity_rooted(decode_bracket("()")) is Parity.EVEN
    assert parity_rooted(decode_bracket("(()()())")) is Parity.ODD
    assert str(Parity.ODD) == "odd" and Parity.EVEN.flipped() is Parity.ODD


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 20])
def test_chains_are_even(n):
    assert parity_free(chain(n)) is Parity.EVEN


def test_parity_free_examples():
    assert parity_free(star(4)) is Parity.ODD
    assert [str(parity_free(t)) for t in COSPECTRAL_12] == list(COSPECTRAL_12_PARITIES)


def test_parity_free_rejects_odd_n():
    with pytest.raises(OddVertexCountError, match="parity undefined for odd vertex count"):
        parity_free(chain(5))


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_parity_free_independent_of_root(n):
    for tree in enumerate_free_trees(n):
        assert len({parity_rooted(free_to_plane(tree, r)) for r in range(n)}) == 1


def _root_formula(tree):
    """Sum of subtree inversions plus sum over pairs k_i k_j, from the code alone."""
    code = encode_bracket(tree)
    pieces, depth, start = [], 0, 1
    for i, ch in enumerate(code[1:-1], start=1):
        depth += 1 if ch == "(" else -1
        if depth == 0:
            pieces.append(code[start : i + 1])
            start = i + 1
    sizes = [len(p) // 2 for p in pieces]
    x = sum(count_inversions(p) for p in pieces)
    return x + sum(a * b for a, b in itertools.combinations(sizes, 2))


@pytest.mark.parametrize("n", range(1, 9))
def test_level_one_formula(n):
    for code in all_codes(n):
        assert count_inversions(code) == _root_formula(decode_bracket(code))


@pytest.mark.parametrize("n", range(1, 9))
def test_level_one_permutations_preserve_parity(n):
    for code in all_codes(n):
        tree = decode_bracket(code)
        p = parity_rooted(tree)
        k = len(tree.children[tree.root])
        if k > 4:
            perms = [tuple(range(1, k)) + (0,), (1, 0) + tuple(range(2, k))]
        else:
            perms = itertools.permutations(range(k))
        for perm in perms:
            assert parity_rooted(permute_level_one(tree, perm)) is p


def test_permute_identity_and_equal_swap():
    tree = decode_bracket("((())(())())")
    assert permute_level_one(tree, (0, 1, 2)) == tree
    swapped = permute_level_one(tree, (1, 0, 2))
    assert parity_rooted(swapped) is parity_rooted(tree)
    with pytest.raises(ValueError):
        permute_level_one(tree, (0, 0, 1))


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=20), st.randoms(use_true_random=False))
def test_level_one_random(n, rnd):
    tree = free_to_plane(random_tree(rnd, n), rnd.randrange(n))
    perm = list(range(len(tree.children[tree.root])))
    rnd.shuffle(perm)
    assert parity_rooted(permute_level_one(tree, perm)) is parity_rooted(tree)


def test_reroot_examples():
    c = free_to_plane(chain(6), 0)
    r = reroot_along_marked(c)
    assert r.root == 1
    assert parity_rooted(r) is Parity.EVEN
    two = reroot_along_marked(decode_bracket("(())"))
    assert two.root == 1 and count_inversions(encode_bracket(two)) == 0
    with pytest.raises(ValueError):
        reroot_along_marked(decode_bracket("()"))


@pytest.mark.parametrize("n", range(2, 9))
def test_reroot_formula(n):
    for code in all_codes(n):
        tree = decode_bracket(code)
        a, b = marked_edge_forests(tree)
        k, s = len(a) // 2, count_inversions(a) if a else 0
        l, t = len(b) // 2, count_inversions(b) if b else 0
        assert count_inversions(code) == s + k * l + l + t
        after = reroot_along_marked(tree)
        assert count_inversions(encode_bracket(after)) == s + k + k * l + t
        assert plane_to_free(after) == plane_to_free(tree)
        if n % 2 == 0:
            assert parity_rooted(after) is parity_rooted(tree)


def test_transpose_examples():
    s4 = star(4)
    c = transpose(s4, TranspositionMove(1, 0, 2))
    assert canonical_key(c) == canonical_key(chain(4))
    c6 = chain(6)
    mv = TranspositionMove(0, 1, 2)
    branch = transpose(c6, mv)
    assert branch.degree(2) == 3
    assert transpose(branch, mv.inverse()) == c6


@pytest.mark.parametrize(
    "move", [TranspositionMove(1, 0, 1), TranspositionMove(0, 1, 3), TranspositionMove(2, 1, 3)]
)
def test_transpose_rejects_bad_moves(move):
    with pytest.raises(ValueError):
        transpose(chain(4), move)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_every_transposition_flips_parity(n):
    for tree in enumerate_free_trees(n):
        p = parity_free(tree)
        for mv in transposition_moves(tree):
            assert parity_free(transpose(tree, mv)) is p.flipped()


def test_split_examples():
    a, b = split_sum(chain(4), (1, 2))
    assert a == chain(2) and b == chain(2)
    fig = plane_to_free(decode_bracket(SAMPLE))
    a, b = split_sum(fig, (0, 1))
    assert (a.n, b.n) == (5, 1)
    with pytest.raises(ValueError):
        split_sum(chain(4), (0, 2))


def test_join_examples():
    c2 = decode_bracket("(())")
    j = join_sum(c2, c2)
    assert j.n == 4 and parity_rooted(j) is Parity.EVEN
    s4 = decode_bracket("(()()())")
    assert parity_rooted(join_sum(s4, c2)) is Parity.ODD
    assert encode_bracket(join_sum(decode_bracket("()"), decode_bracket("()"))) == "(())"


@pytest.mark.parametrize("k,l", list(itertools.product([2, 4, 6], repeat=2)))
def test_join_rule_and_exact_count(k, l):
    for c1 in all_codes(k):
        for c2 in all_codes(l):
            t1, t2 = decode_bracket(c1), decode_bracket(c2)
            j = join_sum(t1, t2)
            s, t = count_inversions(c1), count_inversions(c2)
            assert count_inversions(encode_bracket(j)) == s + t + (k - 1) * l
            p1, p2 = parity_rooted(t1), parity_rooted(t2)
            assert (parity_rooted(j) is Parity.ODD) == (p1 is not p2)


def test_split_then_join_recovers_tree():
    fig = plane_to_free(decode_bracket(SAMPLE))
    for u, v in fig.edges:
        a, b = split_sum(fig, (u, v))
        # components are relabelled in id order, so u and v keep their rank
        side_u = _component(fig, u, v)
        ru = sorted(side_u).index(u)
        rv = sorted(set(range(fig.n)) - side_u).index(v)
        joined = join_sum(free_to_plane(a, ru), free_to_plane(b, rv))
        assert canonical_key(plane_to_free(joined)) == canonical_key(fig)


def _component(tree, u, v):
    seen, stack = {u}, [u]
    while stack:
        x = stack.pop()
        for y in tree.adjacency[x]:
            if y not in seen and {x, y} != {u, v}:
                seen.add(y)
                stack.append(y)
    return seen


def test_chain_reduction_examples():
    assert chain_reduction(chain(6)) == []
    moves = chain_reduction(star(4))
    assert len(moves) == 1
    assert canonical_key(apply_moves(star(4), moves)) == canonical_key(chain(4))


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_chain_reduction_length_matches_parity(n):
    target = canonical_key(chain(n))
    for tree in enumerate_free_trees(n):
        moves = chain_reduction(tree)
        assert canonical_key(apply_moves(tree, moves)) == target
        assert free_parity_via_moves(tree) is parity_free(tree)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=14).map(lambda x: 2 * (x // 2)), st.randoms(use_true_random=False))
def test_chain_reduction_random(n, rnd):
    tree = random_tree(rnd, n)
    end = apply_moves(tree, chain_reduction(tree))
    assert canonical_key(end) == canonical_key(chain(n))
    assert Parity.of(len(chain_reduction(tree))) is parity_free(tree)
