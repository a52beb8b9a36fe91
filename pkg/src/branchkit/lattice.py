"""Exact integer row echelon forms over sparse vectors.

Vectors are dicts ``key -> int`` whose keys are totally ordered (labels
compare as tuples).  :class:`Echelon` keeps a Hermite-style basis of the
Z-span of everything inserted: one row per pivot, the pivot being the
row's greatest key, with a positive pivot entry.  Every row also carries
the integer combination of inserted generators that produced it, so a
successful reduction yields an explicit witness.
"""
from __future__ import annotations

from typing import Hashable, Mapping


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _axpy(y: dict, a: int, x: Mapping) -> dict:
    """y + a*x as a new dict without zero entries."""
    out = dict(y)
    for k, v in x.items():
        s = out.get(k, 0) + a * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _lin(a: int, x: Mapping, b: int, y: Mapping) -> dict:
    return _axpy({k: a * v for k, v in x.items() if a * v}, b, y)


class Echelon:
    def __init__(self):
        self.rows: dict = {}      # pivot -> (vector, combination)

    def __len__(self):
        return len(self.rows)

    def insert(self, vec: Mapping, tag: Hashable) -> None:
        self._insert(dict(vec), {tag: 1})

    def _insert(self, v: dict, combo: dict) -> None:
        while v:
            piv = max(v)
            if piv not in self.rows:
                if v[piv] < 0:
                    v = {k: -x for k, x in v.items()}
                    combo = {k: -x for k, x in combo.items()}
                self.rows[piv] = (v, combo)
                return
            b, bc = self.rows[piv]
            a, c = b[piv], v[piv]
            q, r = divmod(c, a)
            if r == 0:
                v, combo = _axpy(v, -q, b), _axpy(combo, -q, bc)
                continue
            g, s, t = xgcd(a, c)
            new, newc = _lin(s, b, t, v), _lin(s, bc, t, combo)
            v, combo = _lin(c // g, b, -(a // g), v), _lin(c // g, bc, -(a // g), combo)
            self.rows[piv] = (new, newc)
            # the displaced old row b is a Z-combination of new and the remainder

    def reduce(self, target: Mapping) -> tuple[dict, dict]:
        """(residual, combination) after greedy reduction by the basis.

        The residual is empty exactly when ``target`` lies in the lattice;
        then ``target = sum combination[tag] * generator[tag]``.
        """
        v, combo = dict(target), {}
        while v:
            piv = max(v)
            if piv not in self.rows:
                break
            b, bc = self.rows[piv]
            q, r = divmod(v[piv], b[piv])
            if r:
                break
            v, combo = _axpy(v, -q, b), _axpy(combo, q, bc)
        return v, combo


def hermite_rows(matrix: list[list[int]]) -> list[list[int]]:
    """Dense row-style Hermite normal form (nonzero rows only).

    Pivots move right going down, pivot entries are positive and entries
    above a pivot are reduced into [0, pivot).
    """
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    out: list[list[int]] = []
    col = 0
    while rows and col < ncols:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        rest = [r for r in rows if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            head = nz[0]
            nxt = [head]
            for r in nz[1:]:
                q = r[col] // head[col]
                r = [x - q * y for x, y in zip(r, head)]
                (nxt if r[col] else rest).append(r)
            nz = nxt
        head = nz[0]
        if head[col] < 0:
            head = [-x for x in head]
        for k, r in enumerate(out):
            q = r[col] // head[col]
            out[k] = [x - q * y for x, y in zip(r, head)]
        out.append(head)
        rows = [r for r in rest if any(r)]
        col += 1
    return out


__all__ = ["Echelon", "xgcd", "hermite_rows"]
