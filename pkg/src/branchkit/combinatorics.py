"""Partition and interlacing helpers shared by the branching rules."""
from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .errors import ValidationError


def is_nonincreasing(v: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(v, v[1:]))


def interlaces(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff lam_1 >= mu_1 >= lam_2 >= ... >= mu_{k-1} >= lam_k."""
    if len(mu) != len(lam) - 1:
        raise ValidationError(
            f"interlacing needs lengths k and k-1, got {len(lam)} and {len(mu)}")
    return all(lam[i] >= mu[i] >= lam[i + 1] for i in range(len(mu)))


def interlacing(lam: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All mu with mu interlacing lam, in lexicographically descending order."""
    ranges = [range(lam[i], lam[i + 1] - 1, -1) for i in range(len(lam) - 1)]
    for mu in product(*ranges):
        yield mu


def conjugate(part: Sequence[int]) -> tuple[int, ...]:
    """Transpose of the Young diagram of a partition (trailing zeros dropped)."""
    if any(x < 0 for x in part) or not is_nonincreasing(part):
        raise ValidationError(f"not a partition: {tuple(part)}")
    if not part or part[0] == 0:
        return ()
    return tuple(sum(1 for x in part if x > i) for i in range(part[0]))


def pad(part: Sequence[int], length: int) -> tuple[int, ...]:
    if len(part) > length:
        raise ValidationError(f"{tuple(part)} has more than {length} parts")
    return tuple(part) + (0,) * (length - len(part))


def partitions_in_box(size: int, rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``size`` with at most ``rows`` parts, each at most ``cols``.

    Yielded without trailing zeros, largest first part first.
    """
    def rec(left, nrows, cap):
        if left == 0:
            yield ()
            return
        if nrows == 0:
            return
        for first in range(min(left, cap), 0, -1):
            for rest in rec(left - first, nrows - 1, first):
                yield (first,) + rest

    yield from rec(size, rows, cols)


def nonincreasing_tuples(length: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Nonincreasing integer vectors of the given length with entries in [lo, hi]."""
    if length == 0:
        yield ()
        return
    for first in range(hi, lo - 1, -1):
        for rest in nonincreasing_tuples(length - 1, lo, first):
            yield (first,) + rest


def compositions_bounded(bounds: Sequence[int]) -> list[int]:
    """Coefficient list of prod_i (1 + x + ... + x^bounds[i]).

    Entry k counts integer vectors 0 <= k_i <= bounds[i] with sum k.
    """
    coeffs = [1]
    for b in bounds:
        new = [0] * (len(coeffs) + b)
        for k, c in enumerate(coeffs):
            for t in range(b + 1):
                new[k + t] += c
        coeffs = new
    return coeffs
