import json
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from treeparity.oracles import grown_free_trees, prufer_trees
from treeparity.trees import (
    BracketParseError,
    Color,
    FreeTree,
    PlaneRootedTree,
    all_codes,
    bipartite_passport,
    canonical_key,
    chain,
    decode_bracket,
    degree_passport,
    encode_bracket,
    enumerate_free_tree_keys,
    enumerate_free_trees,
    free_to_plane,
    plane_to_free,
    star,
    validate_code,
)
from treeparity.catalog import COSPECTRAL_8

from conftest import random_tree

SAMPLE = "(()(()(())))"


def test_decode_six_vertex_sample():
    t = decode_bracket(SAMPLE)
    assert t.n == 6
    assert len(t.children[t.root]) == 2
    second = t.children[t.root][1]
    assert t.subtree_sizes()[second] == 4
    # preorder ids: the second child's subtree is the block second..second+3
    kids = {v: tuple(c - second for c in t.children[v]) for v in range(second, second + 4)}
    sub = PlaneRootedTree(4, 0, tuple(kids[v + second] for v in range(4)))
    assert encode_bracket(sub) == "(()(()))"


def test_decode_small():
    assert decode_bracket("()").n == 1
    t = decode_bracket("(()()())")
    assert t.n == 4 and len(t.children[0]) == 3


@pytest.mark.parametrize(
    "tree,code",
    [(decode_bracket(SAMPLE), SAMPLE), (decode_bracket("()"), "()"), (free_to_plane(chain(4), 0), "(((())))")],
)
def test_encode(tree, code):
    assert encode_bracket(tree) == code


@pytest.mark.parametrize(
    "code,offset",
    [("(()", 3), ("", 0), ("())", 2), ("()()", 2), (")(", 0), ("(a)", 1), ("( )", 1)],
)
def test_parse_errors_report_offset(code, offset):
    with pytest.raises(BracketParseError) as exc:
        decode_bracket(code)
    assert exc.value.offset == offset


def test_forest_codes_accepted_only_when_asked():
    validate_code("()()", allow_forest=True)
    with pytest.raises(BracketParseError):
        validate_code("()()")


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_exhaustive(n):
    for code in all_codes(n):
        tree = decode_bracket(code)
        assert encode_bracket(tree) == code
        assert decode_bracket(encode_bracket(tree)) == tree


@pytest.mark.parametrize("n", range(1, 9))
def test_catalan_counts(n):
    assert sum(1 for _ in all_codes(n)) == math.comb(2 * (n - 1), n - 1) // n


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=30), st.randoms(use_true_random=False))
def test_round_trip_random(n, rnd):
    tree = random_tree(rnd, n)
    rooted = free_to_plane(tree, rnd.randrange(n))
    assert decode_bracket(encode_bracket(rooted)).code == rooted.code
    assert plane_to_free(decode_bracket(rooted.code)).n == n


def test_canonical_key_examples():
    c4 = chain(4)
    assert canonical_key(c4) == canonical_key(c4.relabel([2, 0, 3, 1]))
    assert canonical_key(c4) != canonical_key(star(4))
    assert canonical_key(COSPECTRAL_8[0]) != canonical_key(COSPECTRAL_8[1])


def test_canonical_key_is_a_code():
    for t in enumerate_free_trees(9):
        key = canonical_key(t)
        assert canonical_key(plane_to_free(decode_bracket(key))) == key


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=25), st.randoms(use_true_random=False))
def test_canonical_key_relabel_invariance(n, rnd):
    tree = random_tree(rnd, n)
    perm = list(range(n))
    rnd.shuffle(perm)
    assert canonical_key(tree.relabel(perm)) == canonical_key(tree)


FREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


@pytest.mark.parametrize("n,count", list(enumerate(FREE_COUNTS, start=1)))
def test_enumeration_counts(n, count):
    keys = enumerate_free_tree_keys(n)
    assert len(keys) == count
    assert keys == sorted(keys)


@pytest.mark.parametrize("n", range(1, 10))
def test_enumeration_matches_grown_oracle(n):
    assert len(grown_free_trees(n)) == len(enumerate_free_tree_keys(n))


@pytest.mark.parametrize("n", range(2, 8))
def test_enumeration_matches_labeled_trees(n):
    labeled = list(prufer_trees(n))
    assert len(labeled) == n ** (n - 2)
    keys = {canonical_key(FreeTree(n, tuple(e))) for e in labeled}
    assert sorted(keys) == enumerate_free_tree_keys(n)


def test_enumeration_ceiling():
    with pytest.raises(ValueError):
        enumerate_free_tree_keys(21)
    with pytest.raises(ValueError):
        enumerate_free_tree_keys(0)


def test_degree_passport():
    assert degree_passport(chain(6)) == [2, 4, 0, 0, 0]
    assert degree_passport(star(4)) == [3, 0, 1]
    fig = plane_to_free(decode_bracket(SAMPLE))
    p = degree_passport(fig)
    assert sum(p) == 6 and sum((i + 1) * a for i, a in enumerate(p)) == 10
    assert p[0] == 3


def test_bipartite_passport():
    bp = bipartite_passport(chain(2), Color.WHITE)
    assert bp.white == [1] and bp.black == [1]
    bp = bipartite_passport(chain(4), Color.WHITE)
    assert bp.white == [1, 1, 0] and bp.black == [1, 1, 0]


@pytest.mark.parametrize("n", [5, 8])
def test_bipartite_passport_partitions_degree_passport(n):
    for t in enumerate_free_trees(n):
        for base in Color:
            bp = bipartite_passport(t, base)
            assert [a + b for a, b in zip(bp.white, bp.black)] == degree_passport(t)


def test_free_tree_validation_and_json():
    with pytest.raises(ValueError):
        FreeTree(3, ((0, 1),))
    with pytest.raises(ValueError):
        FreeTree(3, ((0, 1), (1, 0)))
    t = plane_to_free(decode_bracket(SAMPLE))
    assert FreeTree.from_json(json.dumps(t.to_json())) == t


def test_relabel_rejects_non_permutation():
    with pytest.raises(ValueError):
        chain(3).relabel([0, 0, 1])
