"""Grouping of Weyl terms by |c_hat| and the good-weight classifier.

A weight is good when, for every value c, the signed sum of the restricted
labels W_{lambda_w} with |c_hat| = c lies in the image of restriction.
Multiplying the groups by the exterior alternating sum first (see
:func:`star_product`) is useless as a test: for SO_0(2,2n) and SU(3,2) that
product is always a restriction.  So the decision is made on the group sums
themselves, per family:

* SU(m,1), SU(1,n): restriction is onto, so every weight is good.
* SO_0(2,2n): per index i the two terms (delta_+, i), (delta_-, i) must either
  both be restrictions on their own or share |c_hat|; cross-checked by the
  exact membership test on the group sums themselves.
* SU(3,2): the groups, twisted by the character tau_{0,1,-1}, must have
  vanishing invariant I; a nonzero value is a certificate of failure.
* everything else: bounded lattice search on each group sum.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .branching import branch
from .families import SU, SOE, SOStar, Family, SOStarWeight, SULabel, weight_to_json
from .image import invariant_I, lattice_member, member_soe, preimage_su1n
from .oracle import tensor_virtual
from .virtual import VirtualChar, twist_char
from .weyl import WeylElem, lambda_alt_sum, signed_sum, weyl_terms

DEFAULT_RADIUS = 2


@dataclass
class CGroup:
    key: int
    sum: VirtualChar
    members: list[WeylElem]

    def to_json(self) -> dict:
        return {"key": self.key,
                "members": [e.to_json(self.sum.family) for e in self.members],
                "sum": self.sum.to_json()["terms"]}


@dataclass
class Verdict:
    status: str                     # good | notgood | unknown
    key: int | None = None
    certificate: dict = field(default_factory=dict)
    reason: str = ""
    groups: list = field(default_factory=list)   # per-group dicts for the report

    @property
    def is_good(self) -> bool:
        return self.status == "good"

    def to_json(self) -> dict:
        out = {"verdict": self.status}
        if self.key is not None:
            out["key"] = self.key
        if self.certificate:
            out["certificate"] = self.certificate
        if self.reason:
            out["reason"] = self.reason
        if self.groups:
            out["groups"] = self.groups
        return out


def star_groups(family: Family, w) -> list[CGroup]:
    """Weyl terms of w grouped by |c_hat|, keys descending."""
    by_key: dict[int, list] = {}
    for t in weyl_terms(family, w):
        by_key.setdefault(abs(t.c_hat), []).append(t)
    return [CGroup(k, signed_sum(family, ts), [t.elem for t in ts])
            for k, ts in sorted(by_key.items(), reverse=True)]


def star_product(family: Family, group: CGroup) -> VirtualChar:
    """Exterior alternating sum (x) group sum, the unreduced Ansatz term."""
    return tensor_virtual(lambda_alt_sum(family), group.sum)


# -- SO_0(2,2n)

def soe_pair_criterion(family: SOE, w) -> tuple[bool, dict]:
    terms = {t.elem: t for t in weyl_terms(family, w)}
    for i in range(1, family.n + 1):
        plus, minus = terms[WeylElem(1, i)], terms[WeylElem(-1, i)]
        separately = plus.label.mu[-1] == 0 and minus.label.mu[-1] == 0
        if not (separately or abs(plus.c_hat) == abs(minus.c_hat)):
            return False, {"i": i, "c_hat_plus": plus.c_hat, "c_hat_minus": minus.c_hat}
    return True, {}


def _soe_verdict(family, w, route):
    groups = star_groups(family, w)
    if route == "pair":
        ok, cert = soe_pair_criterion(family, w)
        reason = "every (delta_+, delta_-) pair restricts or shares |c_hat|" if ok else ""
        return Verdict("good" if ok else "notgood", certificate=cert, reason=reason,
                       groups=[g.to_json() for g in groups])
    rows, failure = [], None
    for g in groups:
        res = member_soe(g.sum)
        rows.append({**g.to_json(), "status": res.status})
        if failure is None and not res.is_member:
            failure = (g.key, res.certificate)
    if failure:
        return Verdict("notgood", key=failure[0], certificate=failure[1], groups=rows)
    return Verdict("good", reason="every group sum restricts", groups=rows)


# -- SU(3,2)

TWIST_32 = SULabel((0, 0), (1,), -1)


def su32_group_invariants(w) -> list[tuple[int, int]]:
    family = SU(3, 2)
    return [(g.key, invariant_I(twist_char(g.sum, TWIST_32))) for g in star_groups(family, w)]


def _su32_verdict(family, w):
    groups = star_groups(family, w)
    rows, values = [], {}
    for g in groups:
        value = invariant_I(twist_char(g.sum, TWIST_32))
        values[g.key] = value
        rows.append({**g.to_json(), "status": "nonmember" if value else "undecided", "I": value})
    bad = sorted(k for k, v in values.items() if v)
    if not bad:
        return Verdict("unknown", reason="I vanishes on every twisted group", groups=rows)
    key = bad[0]
    return Verdict("notgood", key=key, certificate={"key": key, "I": values[key]}, groups=rows)


# -- generic

def _lattice_verdict(family, w, radius):
    rows, all_member = [], True
    for g in star_groups(family, w):
        res = lattice_member(g.sum, radius)
        rows.append({**g.to_json(), "status": res.status})
        all_member &= res.is_member
    if all_member:
        return Verdict("good", reason=f"every group has a lattice witness (radius {radius})",
                       groups=rows)
    return Verdict("unknown", reason=f"no lattice witness within radius {radius}", groups=rows)


def is_good(family: Family, w, radius: int = DEFAULT_RADIUS, route: str = "pair") -> Verdict:
    """Classify w.  ``route`` picks the SO_0(2,2n) path: "pair" or "member"."""
    w = family.validate_weight(w)
    if family.kind == "su" and (family.m == 1 or family.n == 1):
        return Verdict("good", reason="restriction is surjective",
                       groups=[g.to_json() for g in star_groups(family, w)])
    if family.kind == "soe":
        if route not in ("pair", "member"):
            raise ValueError(f"unknown route {route!r}")
        return _soe_verdict(family, w, route)
    if family.kind == "su" and (family.m, family.n) == (3, 2):
        return _su32_verdict(family, w)
    return _lattice_verdict(family, w, radius)


def good_witnesses(family: SU, w) -> list[tuple[int, VirtualChar]]:
    """Explicit preimages of every group sum for SU(m,1) / SU(1,n)."""
    return [(g.key, preimage_su1n(g.sum)) for g in star_groups(family, w)]


# -- telescoping identity for SU(m,2)

def telescoping_sides(m: int) -> tuple[VirtualChar, VirtualChar]:
    family = SU(m, 2)
    lhs = VirtualChar(family)
    for j in range(m + 1):
        w = ((1,) * j + (0,) * (m - j), (0, -j))
        lhs = lhs + (1 if j % 2 else -1) * branch(family, w)
    rhs = twist_char(lambda_alt_sum(family), SULabel((0,) * (m - 1), (-1,), 1))
    return lhs, rhs


def verify_telescoping(m: int) -> bool:
    lhs, rhs = telescoping_sides(m)
    return lhs == rhs


# -- SO*(2n) exploration

def _explore_row(args) -> dict:
    n, lam, radius = args
    family = SOStar(n)
    v = is_good(family, (lam,), radius)
    return {"lambda": weight_to_json(family, SOStarWeight(lam)),
            "groups": [{"key": g["key"], "status": g["status"], "sum": g["sum"]}
                       for g in v.groups],
            "verdict": v.status,
            "certificate": v.certificate}


def explore_sostar(n: int, bound: int, radius: int, jobs: int = 1) -> Iterator[dict]:
    """One report row per dominant lambda with entries in [-bound, bound], in lambda order."""
    family = SOStar(n)
    tasks = [(n, w.lam, radius) for w in family.k_weights(-bound, bound)]
    if jobs <= 1:
        for t in tasks:
            yield _explore_row(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_explore_row, tasks)


def report_line(row: dict) -> str:
    return json.dumps(row, sort_keys=True, separators=(",", ":"))


__all__ = ["CGroup", "Verdict", "star_groups", "star_product", "is_good", "soe_pair_criterion",
           "su32_group_invariants", "TWIST_32", "good_witnesses", "telescoping_sides",
           "verify_telescoping", "explore_sostar", "report_line", "DEFAULT_RADIUS"]
