"""Acceptance routines shared by the test-suite and ``branchkit verify-paper``.

Each ``_c<k>`` returns ``(ok, detail, counterexample)``; :func:`run_criterion`
wraps that in a timed :class:`CheckResult`.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .ansatz import TWIST_32, explore_sostar, is_good, su32_group_invariants, verify_telescoping
from .branching import branch, branch_sostar_single, branch_terms_soe, branch_virtual
from .families import SOE, SU, SOStar, grid_weights, weight_to_json
from .image import (invariant_I, invariant_I_label, lattice_member, member_soe, preimage_su1n,
                    support_bound)
from .oracle import exterior_decompose, oracle_restrict
from .virtual import VirtualChar, twist_char
from .weyl import WeylElem, enum_wkappa, ptilde_ev, weyl_terms

SU_SMALL = [(2, 1), (1, 2), (3, 1), (1, 3), (2, 2), (4, 1), (1, 4), (3, 2), (2, 3)]


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    detail: str = ""
    counterexample: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"[{mark}] {self.number:>2} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _timed(number, name, fn):
    start = time.perf_counter()
    ok, detail, cex = fn()
    return CheckResult(number, name, ok, detail, cex or {}, time.perf_counter() - start)


# 1

def oracle_grid():
    for m, n in SU_SMALL:
        f = SU(m, n)
        for w in grid_weights(f, 3):
            yield f, w
    for n in (2, 3):
        f = SOE(n)
        for w in grid_weights(f, 3, range(-3, 4)):
            yield f, w
    for n in (3, 4, 5):
        f = SOStar(n)
        for w in grid_weights(f, 3):
            yield f, w


def _c1():
    count = 0
    for f, w in oracle_grid():
        a, b = branch(f, w), oracle_restrict(f, w)
        if a != b:
            return False, f"mismatch at {f}", {
                "family": f.spec, "weight": weight_to_json(f, w),
                "branch": a.to_json(), "oracle": b.to_json()}
        count += 1
    return True, f"{count} weights, branch == oracle_restrict", None


# 2

def _c2():
    count = 0
    for m in (2, 3):
        f = SU(m, 1)
        for x in f.km_labels(-4, 4):
            target = VirtualChar.single(f, x)
            if branch_virtual(preimage_su1n(target)) != target:
                return False, f"round trip fails in {f}", {"family": f.spec, "label": list(x)}
            count += 1
    return True, f"{count} labels round-trip", None


# 3

def soe_grid(n):
    return grid_weights(SOE(n), 3, range(-2, 2 * n + 3))


def _c3():
    count = 0
    for n in (2, 3):
        f = SOE(n)
        for w in soe_grid(n):
            expected = w.p == n or w.lam[-1] == 0
            pair = is_good(f, w, route="pair").is_good
            member = is_good(f, w, route="member").is_good
            if not (pair == member == expected):
                return False, f"verdict mismatch in {f}", {
                    "weight": weight_to_json(f, w), "pair": pair, "member": member,
                    "expected": expected}
            count += 1
    return True, f"{count} weights, both routes match p = n or lambda_n = 0", None


# 4

def _c4():
    f = SU(3, 2)
    count = 0
    for w in grid_weights(f, 4):
        v = is_good(f, w)
        if v.status != "notgood" or not v.certificate.get("I"):
            return False, "weight not refuted", {"weight": weight_to_json(f, w),
                                                 "verdict": v.to_json()}
        count += 1
    return True, f"{count} weights NotGood with nonzero I", None


# 5

def su32_closed_rows(w):
    """Row data (elem, sign, twisted label, c_hat, I-form lhs, rhs) written out by hand."""
    (l1, l2, l3), (m1, m2) = w
    return [
        (WeylElem(1, 1), 1, ((l2, l3), (m2,), l1 + m1), l1 - m1 + 3,
         2 * l1 - l2 - l3 + 2 * m1 - 2 * m2, 0, -1),
        (WeylElem(2, 1), -1, ((l1 + 1, l3), (m2,), l2 + m1 - 1), l2 - m1 + 2,
         l1 - 2 * l2 + l3 - 2 * m1 + 2 * m2, -3, 1),
        (WeylElem(3, 1), 1, ((l1 + 1, l2 + 1), (m2,), l3 + m1 - 2), l3 - m1 + 1,
         l1 + l2 - 2 * l3 - 2 * m1 + 2 * m2, -6, 1),
        (WeylElem(1, 2), -1, ((l2, l3), (m1 + 1,), l1 + m2 - 1), l1 - m2 + 4,
         2 * l1 - l2 - l3 - 2 * m1 + 2 * m2, 4, -1),
        (WeylElem(2, 2), 1, ((l1 + 1, l3), (m1 + 1,), l2 + m2 - 2), l2 - m2 + 3,
         l1 - 2 * l2 + l3 + 2 * m1 - 2 * m2, -7, 1),
        (WeylElem(3, 2), -1, ((l1 + 1, l2 + 1), (m1 + 1,), l3 + m2 - 3), l3 - m2 + 2,
         l1 + l2 - 2 * l3 + 2 * m1 - 2 * m2, -10, 1),
    ]


def random_strict_su32(rng):
    l = sorted(rng.sample(range(-6, 7), 3), reverse=True)
    m = sorted(rng.sample(range(-6, 7), 2), reverse=True)
    return (tuple(l), tuple(m))


def check_su32_rows(w) -> dict | None:
    """None when all six rows and the inequality diagram agree, else the first discrepancy."""
    f = SU(3, 2)
    terms = {t.elem: t for t in weyl_terms(f, w)}
    chat = {}
    for elem, sign, label, c, lhs, rhs, eps in su32_closed_rows(w):
        t = terms[elem]
        twisted = twist_char(VirtualChar.single(f, t.label, t.sign), TWIST_32)
        expect = VirtualChar.single(f, label, sign)
        mu1 = label[0]
        i_value = invariant_I_label(f.canonical_label(label))
        if twisted != expect or t.c_hat != c or \
                i_value != eps * (lhs - rhs) * (1 + mu1[0] - mu1[1]):
            return {"weight": [list(w[0]), list(w[1])], "elem": list(elem)}
        chat[elem] = c
    A, B, C = (chat[WeylElem(i, 1)] for i in (1, 2, 3))
    D, E, F = (chat[WeylElem(i, 2)] for i in (1, 2, 3))
    if not (D > E > F and A > B > C and D > A and E > B and F > C):
        return {"weight": [list(w[0]), list(w[1])], "diagram": [A, B, C, D, E, F]}
    return None


def _c5(seed=5):
    rng = random.Random(seed)
    for _ in range(5):
        w = random_strict_su32(rng)
        bad = check_su32_rows(w)
        if bad:
            return False, "closed-form row disagrees", bad
    return True, "5 strictly dominant weights: labels, c_hat, I-forms, D>E>F, A>B>C", None


# 6

def _c6():
    for m in (3, 4, 5):
        if not verify_telescoping(m):
            return False, f"telescoping fails for m={m}", {"m": m}
    return True, "m = 3, 4, 5", None


# 7

def random_su32_weight(rng, lo=-4, hi=4):
    l = sorted((rng.randint(lo, hi) for _ in range(3)), reverse=True)
    m = sorted((rng.randint(lo, hi) for _ in range(2)), reverse=True)
    return (tuple(l), tuple(m))


def _c7(seed=7):
    rng = random.Random(seed)
    f = SU(3, 2)
    for _ in range(100):
        w = random_su32_weight(rng)
        if invariant_I(branch(f, w)):
            return False, "I does not vanish", {"weight": [list(w[0]), list(w[1])]}
    return True, "100 random weights, I(branch) = 0", None


# 8

def random_soe_target(rng, n, member: bool) -> VirtualChar:
    f = SOE(n)
    labels = list(f.km_labels(-3, 3))
    terms = []
    if member:
        # random sums of the spanning set of the image
        while len(terms) < 5:
            q, mu = rng.choice(labels)
            c = rng.choice([-2, -1, 1, 2])
            if mu[-1] == 0:
                terms.append(((q, mu), c))
            else:
                s = rng.randint(0, 1)
                if abs(q + s) <= 3 and abs(q - s) <= 3:
                    star = mu[:-1] + (-mu[-1],)
                    terms += [((q + s, mu), c), ((q - s, star), c)]
    else:
        for _ in range(rng.randint(1, 6)):
            terms.append((rng.choice(labels), rng.choice([-3, -2, -1, 1, 2, 3])))
    return VirtualChar(f, terms)


def soe_agrees_with_lattice(target: VirtualChar) -> bool:
    exact = member_soe(target)
    if exact.is_member:
        reach = max(abs(e) for w in exact.witness for e in (w.p,) + w.lam)
        radius = max(0, reach - support_bound(target))
        return lattice_member(target, radius).is_member
    return not lattice_member(target, 2).is_member


def _c8(seed=8):
    rng = random.Random(seed)
    members = 0
    for k in range(100):
        n = 2 + k % 2
        target = random_soe_target(rng, n, member=k % 4 < 2)
        if not soe_agrees_with_lattice(target):
            return False, "member_soe disagrees with the lattice oracle", target.to_json()
        members += member_soe(target).is_member
    count = 0
    for n in (2, 3):
        f = SOE(n)
        for w in soe_grid(n):
            if not member_soe(branch(f, w)).is_member:
                return False, "branch not recognised as member", {"weight": weight_to_json(f, w)}
            count += 1
    return True, f"100 targets ({members} members) agree; {count} grid branchings are members", None


# 9

def _c9(seed=9):
    rng = random.Random(seed)
    sizes = {SU(m, n): m * n for m, n in SU_SMALL + [(3, 3), (4, 2)]}
    sizes.update({SOE(n): 2 * n for n in (2, 3, 4, 5)})
    sizes.update({SOStar(n): n * (n - 1) // 2 for n in (3, 4, 5, 6)})
    for f, size in sizes.items():
        if len(enum_wkappa(f)) != size:
            return False, f"|W_kappa| wrong for {f}", {"family": f.spec}
    for _ in range(200):
        n = rng.choice((2, 3, 4))
        f = SOE(n)
        w = rng.choice(list(grid_weights(f, 3, [0])))
        for x in branch(f, w):
            bt = branch_terms_soe(f, w, x.mu)
            m = bt.mults
            if m[0] != 1 or m[-1] != 1 or m != m[::-1] or len(m) != bt.ell + 1:
                return False, "m(k) not symmetric", {"weight": weight_to_json(f, w),
                                                     "mu": list(x.mu)}
    count = 0
    for n in (3, 4, 5):
        f = SOStar(n)
        for w in grid_weights(f, 3):
            branch_sostar_single(f, w)   # raises on a negative SU(2) label
            count += 1
    for f in [SU(3, 2), SU(4, 2), SU(3, 3), SOE(3), SOStar(4), SOStar(5), SU(2, 1), SOStar(3)]:
        top = ptilde_ev(f)
        d = f.label_dim(top) if top is not None else 0
        total = sum(exterior_decompose(f, top, j).dimension() for j in range(d + 1)) \
            if top is not None else 1
        if total != 2 ** d:
            return False, f"exterior dimensions wrong for {f}", {"family": f.spec}
    return True, f"|W_kappa|, m(k) symmetry, p(lam,nu) >= 0 on {count} weights, 2^dim", None


# 10

def _c10(jobs=2):
    rows = list(explore_sostar(5, 1, 2))
    again = list(explore_sostar(5, 1, 2, jobs=jobs))
    if rows != again:
        return False, "report differs between runs", {}
    good = [r["lambda"] for r in rows if r["verdict"] == "good"]
    if good:
        return False, f"{len(good)} weights certified good", {"lambda": good[0]}
    unknown = sum(r["verdict"] == "unknown" for r in rows)
    return True, f"{len(rows)} rows, none good ({unknown} unknown), deterministic", None


CRITERIA = [
    (1, "oracle equivalence", _c1),
    (2, "SU(m,1) preimages", _c2),
    (3, "SO_0(2,2n) good weights", _c3),
    (4, "SU(3,2) no good weight", _c4),
    (5, "SU(3,2) closed-form rows", _c5),
    (6, "telescoping identity", _c6),
    (7, "invariant I vanishes on restrictions", _c7),
    (8, "SO_0(2,2n) image criterion vs lattice", _c8),
    (9, "structural counts", _c9),
    (10, "SO*(10) exploration", _c10),
]


def run_criterion(number: int) -> CheckResult:
    for k, name, fn in CRITERIA:
        if k == number:
            return _timed(k, name, fn)
    raise KeyError(number)


def run_all(fail_fast: bool = False):
    for k, name, fn in CRITERIA:
        res = _timed(k, name, fn)
        yield res
        if fail_fast and not res.ok:
            return


__all__ = ["CheckResult", "CRITERIA", "run_criterion", "run_all", "check_su32_rows",
           "su32_closed_rows", "oracle_grid", "soe_agrees_with_lattice", "random_soe_target",
           "su32_group_invariants"]
