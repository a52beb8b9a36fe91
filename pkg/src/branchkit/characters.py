"""Formal characters of compact connected groups of classical type.

A :class:`Shape` is an ordered product of factors (tori, unitary groups,
SU(2), even special orthogonal groups).  Weights are flat integer tuples in
the concatenated coordinates of the factors.  Everything is exact integer
arithmetic; dominant weight multiplicities come from Freudenthal's recursion
and are memoized per (factor, highest weight).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import prod
from typing import Iterable, Mapping

from .errors import NotACharacterError, ValidationError

Weight = tuple


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


class Factor:
    rank: int

    @property
    def positive_roots(self) -> tuple[Weight, ...]:
        return ()

    @property
    def rho2(self) -> Weight:
        """Twice the half-sum of positive roots (integral)."""
        return (0,) * self.rank

    def is_dominant(self, w: Weight) -> bool:
        return True

    def dominant_rep(self, w: Weight) -> Weight:
        return tuple(w)

    def orbit(self, w: Weight) -> set[Weight]:
        return {tuple(w)}


@dataclass(frozen=True)
class Torus(Factor):
    rank: int


@dataclass(frozen=True)
class TypeA(Factor):
    """U(k) with labels in Z^k nonincreasing (central character tracked)."""
    rank: int

    @property
    def positive_roots(self):
        k = self.rank
        roots = []
        for i in range(k):
            for j in range(i + 1, k):
                r = [0] * k
                r[i], r[j] = 1, -1
                roots.append(tuple(r))
        return tuple(roots)

    @property
    def rho2(self):
        k = self.rank
        return tuple(k - 1 - 2 * i for i in range(k))

    def is_dominant(self, w):
        return all(a >= b for a, b in zip(w, w[1:]))

    def dominant_rep(self, w):
        return tuple(sorted(w, reverse=True))

    def orbit(self, w):
        return set(permutations(w))


@dataclass(frozen=True)
class A1(Factor):
    """SU(2) with label p >= 0 (dimension p + 1); the root is 2."""
    rank: int = 1

    @property
    def positive_roots(self):
        return ((2,),)

    @property
    def rho2(self):
        return (2,)

    def is_dominant(self, w):
        return w[0] >= 0

    def dominant_rep(self, w):
        return (abs(w[0]),)

    def orbit(self, w):
        return {(w[0],), (-w[0],)}


@dataclass(frozen=True)
class TypeD(Factor):
    """SO(2k) with labels w_1 >= ... >= w_{k-1} >= |w_k|.

    For k = 1 this is SO(2), a rank-one torus.
    """
    rank: int

    @property
    def positive_roots(self):
        k = self.rank
        roots = []
        for i in range(k):
            for j in range(i + 1, k):
                for s in (-1, 1):
                    r = [0] * k
                    r[i], r[j] = 1, s
                    roots.append(tuple(r))
        return tuple(roots)

    @property
    def rho2(self):
        k = self.rank
        return tuple(2 * (k - 1 - i) for i in range(k))

    def is_dominant(self, w):
        if self.rank < 2:
            return True
        return all(a >= b for a, b in zip(w, w[1:-1])) and w[-2] >= abs(w[-1])

    def dominant_rep(self, w):
        if self.rank < 2:
            return tuple(w)
        rep = sorted((abs(x) for x in w), reverse=True)
        negatives = sum(1 for x in w if x < 0)
        if negatives % 2 and rep[-1] != 0:
            rep[-1] = -rep[-1]
        return tuple(rep)

    def orbit(self, w):
        if self.rank < 2:
            return {tuple(w)}
        out = set()
        k = self.rank
        for signs in product((1, -1), repeat=k):
            if prod(signs) != 1:
                continue
            flipped = tuple(s * x for s, x in zip(signs, w))
            out.update(permutations(flipped))
        return out


@dataclass(frozen=True)
class Shape:
    factors: tuple[Factor, ...]

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def split(self, w: Weight) -> list[Weight]:
        if len(w) != self.rank:
            raise ValidationError(f"weight {tuple(w)} has wrong length for rank {self.rank}")
        out, i = [], 0
        for f in self.factors:
            out.append(tuple(w[i:i + f.rank]))
            i += f.rank
        return out

    def is_dominant(self, w: Weight) -> bool:
        return all(f.is_dominant(x) for f, x in zip(self.factors, self.split(w)))

    def dominant_rep(self, w: Weight) -> Weight:
        return sum((f.dominant_rep(x) for f, x in zip(self.factors, self.split(w))), ())

    def dimension(self, highest: Weight) -> int:
        return prod(weyl_dimension(f, x) for f, x in zip(self.factors, self.split(highest)))


def shape(*factors: Factor) -> Shape:
    return Shape(tuple(f for f in factors if f.rank > 0))


def weyl_dimension(factor: Factor, highest: Weight) -> int:
    lam2 = tuple(2 * a + r for a, r in zip(highest, factor.rho2))
    num = prod(_dot(lam2, a) for a in factor.positive_roots)
    den = prod(_dot(factor.rho2, a) for a in factor.positive_roots)
    q, r = divmod(num, den)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def _freudenthal(factor: Factor, highest: Weight) -> tuple[tuple[Weight, int], ...]:
    roots = factor.positive_roots
    rho2 = factor.rho2
    seen = {highest}
    stack = [highest]
    while stack:
        mu = stack.pop()
        for a in roots:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu not in seen and factor.is_dominant(nu):
                seen.add(nu)
                stack.append(nu)
    # a weight strictly above mu always has strictly larger height
    order = sorted(seen, key=lambda mu: (-_dot(mu, rho2), tuple(-x for x in mu)))
    mult = {highest: 1}
    for mu in order[1:]:
        total = 0
        for a in roots:
            j = 1
            while True:
                nu = tuple(x + j * y for x, y in zip(mu, a))
                d = factor.dominant_rep(nu)
                if d not in seen:
                    break
                total += mult.get(d, 0) * _dot(nu, a)
                j += 1
        diff = tuple(x - y for x, y in zip(highest, mu))
        denom = _dot(diff, tuple(x + y for x, y in zip(highest, mu))) + _dot(diff, rho2)
        m, r = divmod(2 * total, denom)
        assert r == 0, (factor, highest, mu)
        if m:
            mult[mu] = m
    return tuple(mult.items())


@lru_cache(maxsize=None)
def _factor_full(factor: Factor, highest: Weight) -> tuple[tuple[Weight, int], ...]:
    out = {}
    for mu, m in _freudenthal(factor, highest):
        for w in factor.orbit(mu):
            out[w] = m
    return tuple(sorted(out.items()))


def _check_highest(sh: Shape, highest: Weight) -> Weight:
    highest = tuple(highest)
    if not sh.is_dominant(highest):
        raise ValidationError(f"{highest} is not dominant")
    return highest


def _product_maps(parts: list[Iterable[tuple[Weight, int]]]) -> dict[Weight, int]:
    out: dict[Weight, int] = {(): 1}
    for items in parts:
        items = list(items)
        new = {}
        for w, m in out.items():
            for x, n in items:
                new[w + x] = m * n
        out = new
    return out


def weight_multiplicities(sh: Shape, highest: Weight) -> dict[Weight, int]:
    """Dominant weights of the irreducible of highest weight ``highest``."""
    highest = _check_highest(sh, highest)
    return _product_maps([_freudenthal(f, x) for f, x in zip(sh.factors, sh.split(highest))])


def full_weights(sh: Shape, highest: Weight) -> dict[Weight, int]:
    """All weights (with multiplicity) of the irreducible of highest weight ``highest``."""
    highest = _check_highest(sh, highest)
    return _product_maps([_factor_full(f, x) for f, x in zip(sh.factors, sh.split(highest))])


class FormalCharacter:
    """Finite weight -> multiplicity map on a shape.

    With ``dominant_only`` the map holds only the dominant chamber of a
    Weyl-invariant character.
    """

    def __init__(self, sh: Shape, mults: Mapping[Weight, int], dominant_only: bool = False):
        self.shape = sh
        self.mults = {tuple(w): m for w, m in mults.items() if m}
        self.dominant_only = dominant_only

    @classmethod
    def irreducible(cls, sh: Shape, highest: Weight) -> "FormalCharacter":
        return cls(sh, full_weights(sh, highest))

    def dominant_part(self) -> dict[Weight, int]:
        if self.dominant_only:
            return dict(self.mults)
        return {w: m for w, m in self.mults.items() if self.shape.is_dominant(w)}

    def dimension(self) -> int:
        if self.dominant_only:
            raise ValueError("dimension needs the full weight support")
        return sum(self.mults.values())

    def __add__(self, other):
        out = defaultdict(int, self.mults)
        for w, m in other.mults.items():
            out[w] += m
        return FormalCharacter(self.shape, out, self.dominant_only and other.dominant_only)

    def __mul__(self, other):
        out = defaultdict(int)
        for w, m in self.mults.items():
            for v, n in other.mults.items():
                out[tuple(a + b for a, b in zip(w, v))] += m * n
        return FormalCharacter(self.shape, out)

    def scaled(self, k: int):
        return FormalCharacter(self.shape, {w: k * m for w, m in self.mults.items()},
                               self.dominant_only)


def peel(sh: Shape, dominant: Mapping[Weight, int], virtual: bool = False) -> dict[Weight, int]:
    """Split a dominant-chamber character into irreducibles.

    The lexicographically greatest remaining weight is always a highest weight.
    """
    rem = {w: m for w, m in dominant.items() if m}
    out = {}
    while rem:
        top = max(rem)
        c = rem[top]
        if c < 0 and not virtual:
            raise NotACharacterError(f"negative multiplicity {c} at {top}")
        out[top] = c
        for w, m in weight_multiplicities(sh, top).items():
            v = rem.get(w, 0) - c * m
            if v:
                rem[w] = v
            else:
                rem.pop(w, None)
    return out


def decompose_character(c: FormalCharacter, virtual: bool = False) -> dict[Weight, int]:
    return peel(c.shape, c.dominant_part(), virtual=virtual)


def tensor_decompose(sh: Shape, a: Weight, b: Weight) -> dict[Weight, int]:
    a = _check_highest(sh, a)
    b = _check_highest(sh, b)
    fa = full_weights(sh, a)
    fb = full_weights(sh, b)
    dom = defaultdict(int)
    for w, m in fa.items():
        for v, n in fb.items():
            s = tuple(x + y for x, y in zip(w, v))
            if sh.is_dominant(s):
                dom[s] += m * n
    return peel(sh, dom)


def exterior_characters(sh: Shape, a: Weight) -> list[dict[Weight, int]]:
    """Full characters of Lambda^j of the irreducible ``a`` for j = 0..dim.

    Built from the elementary symmetric recursion over the weight multiset.
    """
    a = _check_highest(sh, a)
    weights = []
    for w, m in sorted(full_weights(sh, a).items()):
        weights.extend([w] * m)
    zero = (0,) * sh.rank
    powers = [{zero: 1}]
    for w in weights:
        powers.append({})
        for j in range(len(powers) - 1, 0, -1):
            target = powers[j]
            for v, m in powers[j - 1].items():
                s = tuple(x + y for x, y in zip(v, w))
                target[s] = target.get(s, 0) + m
    return powers


def exterior_decompose(sh: Shape, a: Weight, j: int) -> dict[Weight, int]:
    if j < 0:
        raise ValidationError("exterior degree must be nonnegative")
    powers = exterior_characters(sh, a)
    if j >= len(powers):
        return {}
    return decompose_character(FormalCharacter(sh, powers[j]))
