"""Exact characteristic polynomials of trees and cospectral classes.

Everything here is integer arithmetic; no eigenvalues are computed.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .parity import Parity, parity_free
from .trees import DEFAULT_ENUMERATION_CEILING, FreeTree, canonical_key, enumerate_free_trees

__all__ = ["IntPolynomial", "CospectralGroup", "char_poly", "forest_char_poly", "find_cospectral"]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(a) for a in c))

    @classmethod
    def x_power(cls, k: int) -> "IntPolynomial":
        return cls((0,) * k + (1,))

    @classmethod
    def constant(cls, a: int) -> "IntPolynomial":
        return cls((a,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coeff(i) + other.coeff(i) for i in range(size)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if not a:
                continue
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for s, b in terms[1:]:
            out += s + b
        return out


_X = IntPolynomial.x_power(1)
_ONE = IntPolynomial.constant(1)


def forest_char_poly(n: int, edges: Iterable[Sequence[int]]) -> IntPolynomial:
    """det(xI - A) of a forest on vertices 0..n-1.

    Deleting a leaf v with neighbour u gives
    phi(F) = x * phi(F - v) - phi(F - v - u); an isolated vertex contributes x.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    memo: dict[frozenset[int], IntPolynomial] = {}

    def phi(alive: frozenset[int]) -> IntPolynomial:
        if not alive:
            return _ONE
        hit = memo.get(alive)
        if hit is not None:
            return hit
        v = None
        for w in alive:
            d = sum(1 for y in adj[w] if y in alive)
            if d == 0:
                res = phi(alive - {w}).shift()
                memo[alive] = res
                return res
            if d == 1 and v is None:
                v = w
        assert v is not None, "a forest always has a leaf or an isolated vertex"
        (u,) = [y for y in adj[v] if y in alive]
        rest = alive - {v}
        res = phi(rest).shift() - phi(rest - {u})
        memo[alive] = res
        return res

    return phi(frozenset(range(n)))


def char_poly(tree: FreeTree) -> IntPolynomial:
    return forest_char_poly(tree.n, tree.edges)


@dataclass(frozen=True)
class CospectralGroup:
    polynomial: IntPolynomial
    trees: tuple[FreeTree, ...]
    # None when n is odd
    parities: tuple[Parity, ...] | None

    def to_json(self) -> dict:
        return {
            "polynomial": str(self.polynomial),
            "coefficients": self.polynomial.to_json(),
            "trees": [
                {"key": canonical_key(t), "edges": [list(e) for e in t.edges],
                 "parity": None if self.parities is None else str(p)}
                for t, p in zip(self.trees, self.parities or [None] * len(self.trees))
            ],
        }


def find_cospectral(n: int, *, ceiling: int = DEFAULT_ENUMERATION_CEILING) -> list[CospectralGroup]:
    """Buckets of at least two non-isomorphic n-vertex trees with one char poly.

    Buckets are ordered by their coefficient tuples, members by canonical key.
    """
    buckets: dict[IntPolynomial, list[FreeTree]] = defaultdict(list)
    for t in enumerate_free_trees(n, ceiling=ceiling):
        buckets[char_poly(t)].append(t)
    groups = []
    for poly in sorted(buckets, key=lambda p: p.coeffs):
        members = buckets[poly]
        if len(members) < 2:
            continue
        parities = tuple(parity_free(t) for t in members) if n % 2 == 0 else None
        groups.append(CospectralGroup(poly, tuple(members), parities))
    return groups
