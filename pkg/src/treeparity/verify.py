"""Table of the quantitative claims about parity, rotation groups, spectra and G_n.

Each criterion recomputes its values from scratch, compares them with the
expected constants exactly, and checks its wall-clock budget.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

import networkx as nx

from . import oracles
from .catalog import COSPECTRAL_8, COSPECTRAL_12, COSPECTRAL_12_PARITIES
from .parity import (
    Parity,
    count_inversions,
    join_sum,
    marked_edge_forests,
    parity_free,
    parity_rooted,
    permute_level_one,
    reroot_along_marked,
    transpose,
    transposition_moves,
)
from .perm import PermGroup, cycle_type, sign
from .rotation import alternating_signature, clean_tree, free_rotation_pair, sigma_parities
from .spectra import char_poly, find_cospectral
from .treegraph import build_tree_graph, check_bipartite_by_parity, has_odd_cycle, planarity
from .trees import (
    FreeTree,
    PlaneRootedTree,
    _rooted_codes,
    all_codes,
    canonical_key,
    decode_bracket,
    enumerate_free_trees,
    free_to_plane,
)

__all__ = ["Outcome", "Criterion", "CRITERIA", "run_all", "random_checks"]


@dataclass(frozen=True)
class Outcome:
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float | None

    @property
    def within_budget(self) -> bool:
        return self.budget is None or self.seconds < self.budget

    @property
    def ok(self) -> bool:
        return self.passed and self.within_budget

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        budget = "" if self.budget is None else f" (budget {self.budget:g}s)"
        return f"{status}  {self.name}: {self.detail} [{self.seconds:.3f}s{budget}]"


@dataclass(frozen=True)
class Criterion:
    name: str
    check: Callable[[], tuple[bool, str]]
    budget: float | None = None

    def run(self) -> Outcome:
        start = time.perf_counter()
        passed, detail = self.check()
        return Outcome(self.name, passed, detail, time.perf_counter() - start, self.budget)


def _inversion_oracle() -> tuple[bool, str]:
    code = "(()(()(())))"
    inv = count_inversions(code)
    par = Parity.of(inv)
    return inv == 6 and par is Parity.EVEN, f"inversions={inv} parity={par}"


def _enumeration_counts() -> tuple[bool, str]:
    _rooted_codes.cache_clear()
    c8, c10 = len(enumerate_free_trees(8)), len(enumerate_free_trees(10))
    return (c8, c10) == (23, 106), f"|trees(8)|={c8} |trees(10)|={c10} expected 23, 106"


def _graph_counts() -> tuple[bool, str]:
    e8, e10 = len(build_tree_graph(8).edges), len(build_tree_graph(10).edges)
    return (e8, e10) == (37, 238), f"|E(G_8)|={e8} |E(G_10)|={e10} expected 37, 238"


def _planarity() -> tuple[bool, str]:
    p8 = planarity(build_tree_graph(8))
    p10 = planarity(build_tree_graph(10))
    k33 = planarity(nx.complete_bipartite_graph(3, 3))
    return (p8, p10, k33) == (True, False, False), f"G_8={p8} G_10={p10} K3,3={k33}"


def _bipartite() -> tuple[bool, str]:
    parts = []
    ok = True
    for n in (6, 8, 10):
        g = build_tree_graph(n)
        by_parity = check_bipartite_by_parity(g)
        odd = has_odd_cycle(len(g.nodes), g.edges)
        ok &= by_parity and not odd
        parts.append(f"G_{n}:{by_parity}/{'odd-cycle' if odd else 'no-odd-cycle'}")
    return ok, " ".join(parts)


def _level_one() -> tuple[bool, str]:
    checked = 0
    for n in range(1, 9):
        for code in all_codes(n):
            t = decode_bracket(code)
            par = parity_rooted(t)
            d = len(t.children[t.root])
            for perm in itertools.permutations(range(d)):
                checked += 1
                if parity_rooted(permute_level_one(t, perm)) is not par:
                    return False, f"{code} with perm {perm} changed parity"
    return True, f"{checked} (tree, permutation) pairs, n<=8"


def _reroot() -> tuple[bool, str]:
    checked = 0
    for n in range(2, 9):
        for code in all_codes(n):
            t = decode_bracket(code)
            a, b = marked_edge_forests(t)
            k, l = len(a) // 2, len(b) // 2
            s, u = count_inversions(a), count_inversions(b)
            r = reroot_along_marked(t)
            before, after = count_inversions(code), count_inversions(r.code)
            if before != s + k * l + l + u or after != s + k + k * l + u:
                return False, f"{code}: counts {before}/{after} off the formula"
            if n % 2 == 0 and parity_rooted(r) is not parity_rooted(t):
                return False, f"{code}: parity changed"
            checked += 1
    return True, f"{checked} pr-trees, n<=8, formula exact, even n parity kept"


def _transposition_flips() -> tuple[bool, str]:
    checked = 0
    for n in (6, 8, 10):
        for t in enumerate_free_trees(n):
            p = parity_free(t)
            for mv in transposition_moves(t):
                checked += 1
                if parity_free(transpose(t, mv)) is p:
                    return False, f"move {mv} on {t.edges} kept parity"
    return True, f"{checked} moves over n in (6, 8, 10)"


def _sum_rule() -> tuple[bool, str]:
    checked = 0
    for k, l in itertools.product((2, 4, 6), repeat=2):
        for c1 in all_codes(k):
            s = count_inversions(c1)
            for c2 in all_codes(l):
                t_ = count_inversions(c2)
                joined = join_sum(decode_bracket(c1), decode_bracket(c2))
                inv = count_inversions(joined.code)
                if inv != s + t_ + (k - 1) * l:
                    return False, f"join({c1},{c2}) has {inv} inversions"
                expect_odd = (s % 2) != (t_ % 2)
                if (inv % 2 == 1) != expect_odd:
                    return False, f"join({c1},{c2}) breaks the parity rule"
                checked += 1
    return True, f"{checked} summand pairs, k,l in (2,4,6), count s+t+(k-1)l exact"


def _rotation_groups() -> tuple[bool, str]:
    parts = []
    for n in (6, 8, 10):
        seen: dict[Parity, set[bool]] = {Parity.EVEN: set(), Parity.ODD: set()}
        for t in enumerate_free_trees(n):
            seen[parity_free(t)].add(alternating_signature(t))
        if any(len(v) != 1 for v in seen.values()):
            return False, f"n={n}: signature not constant on a parity class"
        in_am = Parity.EVEN if n % 4 == 2 else Parity.ODD
        if seen[in_am] != {True} or seen[in_am.flipped()] != {False}:
            return False, f"n={n}: wrong class in A_m"
        parts.append(f"n={n}:{in_am}-in-A_m")
    return True, " ".join(parts)


def _clean_trees() -> tuple[bool, str]:
    parts = []
    for n in (6, 8):
        per_class: dict[Parity, set[int]] = {Parity.EVEN: set(), Parity.ODD: set()}
        for t in enumerate_free_trees(n):
            split = clean_tree(t)
            if sign(split.pair.s_w) != 1:
                return False, f"n={n}: clean s_w odd for {t.edges}"
            if cycle_type(split.pair.s_b) != [2] * (n - 1):
                return False, f"n={n}: clean s_b is not n-1 transpositions"
            sw, sb = sigma_parities(split)
            if sw != sb:
                return False, f"n={n}: sigma signs differ"
            per_class[parity_free(t)].add(sw)
        if any(len(v) != 1 for v in per_class.values()) or per_class[Parity.EVEN] == per_class[Parity.ODD]:
            return False, f"n={n}: sigma sign does not separate parities"
        parts.append(f"n={n}:even->{per_class[Parity.EVEN].pop():+d},odd->{per_class[Parity.ODD].pop():+d}")
    return True, " ".join(parts)


def _spectra() -> tuple[bool, str]:
    p8 = {str(char_poly(t)) for t in COSPECTRAL_8}
    par8 = [str(parity_free(t)) for t in COSPECTRAL_8]
    p12 = {str(char_poly(t)) for t in COSPECTRAL_12}
    par12 = tuple(str(parity_free(t)) for t in COSPECTRAL_12)
    ok = p8 == {"x^8-7x^6+9x^4"} and par8 == ["even", "even"]
    ok &= p12 == {"x^12-11x^10+42x^8-66x^6+39x^4-6x^2"} and par12 == COSPECTRAL_12_PARITIES
    groups = find_cospectral(12)
    target = [g for g in groups if str(g.polynomial) == "x^12-11x^10+42x^8-66x^6+39x^4-6x^2"]
    ok &= len(target) == 1 and set(target[0].parities or ()) == {Parity.EVEN, Parity.ODD}
    return ok, f"n=8 {sorted(p8)} {par8}; n=12 {sorted(p12)} {list(par12)}; {len(groups)} groups at n=12"


def _oracles() -> tuple[bool, str]:
    for n in range(1, 7):
        for code in all_codes(n):
            if count_inversions(code) != oracles.pairwise_inversions(code):
                return False, f"inversions disagree on {code}"
    groups = 0
    for n in range(2, 9):
        for t in enumerate_free_trees(n):
            pair = free_rotation_pair(t)
            gens = [pair.s_w.images, pair.s_b.images]
            if PermGroup([pair.s_w, pair.s_b], n - 1).order() != oracles.closure_order(gens, n - 1):
                return False, f"group order disagrees for {t.edges}"
            groups += 1
            if tuple(char_poly(t).coeffs) != oracles.cofactor_char_poly(t.n, t.edges):
                return False, f"char poly disagrees for {t.edges}"
    graphs = nx.graph_atlas_g()
    for g in graphs:
        if planarity(g) != oracles.kuratowski_planar(g.number_of_nodes(), g.edges()):
            return False, f"planarity disagrees on {sorted(g.edges())}"
    return True, f"codes n<=6, {groups} groups/char polys (m<=7, n<=8), {len(graphs)} graphs <=7 vertices"


CRITERIA: tuple[Criterion, ...] = (
    Criterion("1 inversion oracle", _inversion_oracle, 0.001),
    Criterion("2 enumeration counts", _enumeration_counts, 1.0),
    Criterion("3 graph edge counts", _graph_counts, 5.0),
    Criterion("4 planarity", _planarity, 5.0),
    Criterion("5 bipartiteness", _bipartite, 5.0),
    Criterion("6a level-one permutations", _level_one),
    Criterion("6b re-rooting", _reroot),
    Criterion("6c transpositions flip parity", _transposition_flips),
    Criterion("6d sum parity rule", _sum_rule),
    Criterion("7 rotation groups", _rotation_groups, 10.0),
    Criterion("8 clean trees", _clean_trees, 10.0),
    Criterion("9 spectra", _spectra, 30.0),
    Criterion("10 oracle equivalences", _oracles),
)


def run_all() -> list[Outcome]:
    return [c.run() for c in CRITERIA]



def random_checks(rng: random.Random, rounds: int = 200) -> Outcome:
    """Randomized invariance checks on trees of 12 to 16 vertices."""
    start = time.perf_counter()
    detail = f"{rounds} random trees: relabelling, re-rooting, plane order"
    passed = True
    for _ in range(rounds):
        n = rng.randrange(12, 17)
        tree = _random_tree(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        other = tree.relabel(perm)
        if canonical_key(other) != canonical_key(tree) or char_poly(other) != char_poly(tree):
            passed, detail = False, f"relabelling changed an invariant of {tree.edges}"
            break
        if n % 2 == 0:
            p = parity_free(tree)
            root = rng.randrange(n)
            shuffled = _shuffle_children(free_to_plane(tree, root), rng)
            if parity_rooted(shuffled) is not p:
                passed, detail = False, f"rooting {tree.edges} at {root} changed parity"
                break
    return Outcome("random invariants", passed, detail, time.perf_counter() - start, None)


def _random_tree(rng: random.Random, n: int) -> FreeTree:
    return FreeTree(n, tuple((v, rng.randrange(v)) for v in range(1, n)))


def _shuffle_children(tree: PlaneRootedTree, rng: random.Random) -> PlaneRootedTree:
    children = []
    for kids in tree.children:
        kids = list(kids)
        rng.shuffle(kids)
        children.append(tuple(kids))
    return PlaneRootedTree(tree.n, tree.root, tuple(children))
