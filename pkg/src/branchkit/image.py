"""Membership in the image Res(K^0(K)) inside K^0(K_M).

* :func:`invariant_I` is the quadratic functional on K^0(K_M) for SU(3,2)
  that kills the image.
* :func:`member_soe` decides membership for SO_0(2,2n) through per-(mu,
  parity) coefficient sums, and builds an explicit preimage when the sums
  balance.
* :func:`preimage_su1n` inverts restriction for SU(m,1) and SU(1,n) by
  induction on the spread of mu.
* :func:`lattice_member` is a bounded semidecision for everything else.

Every witness handed back has been pushed through :func:`branch_virtual`
and compared with the target.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

from .branching import branch, branch_virtual
from .errors import ResourceError, ValidationError
from .families import SU, Family, SOEWeight, SOStarLabel, SOStarWeight, SUWeight, label_entries, weight_to_json
from .lattice import Echelon
from .virtual import VirtualChar

MAX_GENERATORS_ENV = "BRANCHKIT_MAX_GENERATORS"
DEFAULT_MAX_GENERATORS = 60000


@dataclass
class MembershipResult:
    status: str                                 # member | nonmember | unknown
    witness: VirtualChar | None = None
    certificate: dict = field(default_factory=dict)
    radius: int | None = None

    @property
    def is_member(self) -> bool:
        return self.status == "member"

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.witness is not None:
            f = self.witness.family
            out["witness"] = [{"weight": weight_to_json(f, w), "coef": c}
                              for w, c in self.witness.items()]
        if self.certificate:
            out["certificate"] = self.certificate
        if self.radius is not None:
            out["radius"] = self.radius
        return out


def _require(vc: VirtualChar, kind: str, what: str):
    if vc.side != "km":
        raise ValidationError(f"{what} expects a K_M virtual character")
    if vc.family.kind != kind:
        raise ValidationError(f"{what} is defined for {kind} families, got {vc.family}")


def _verified(target: VirtualChar, witness: VirtualChar) -> MembershipResult:
    if branch_virtual(witness) != target:
        raise AssertionError(f"witness does not restrict to the target: {witness!r}")
    return MembershipResult("member", witness)


# -- SU(3,2)

def _xy(label):
    (a, b), (c,), p = label
    return a + c - p, b + c - p


def invariant_I_label(label) -> int:
    x, y = _xy(label)
    return x + y + x * x - y * y


def invariant_I(vc: VirtualChar) -> int:
    _require(vc, "su", "invariant_I")
    if (vc.family.m, vc.family.n) != (3, 2):
        raise ValidationError(f"invariant_I is defined for su:3,2, got {vc.family}")
    return sum(c * invariant_I_label(x) for x, c in vc.items())


# -- SO_0(2, 2n)

def _star(mu):
    return mu[:-1] + (-mu[-1],)


def soe_functionals(vc: VirtualChar) -> dict:
    """(mu, parity) -> sum over q of x[q, mu] - x[q, mu*], for mu_{n-1} > 0."""
    vals = {}
    for (q, mu), c in vc.items():
        if mu[-1] == 0:
            continue
        key = (mu if mu[-1] > 0 else _star(mu), q % 2)
        vals[key] = vals.get(key, 0) + (c if mu[-1] > 0 else -c)
    return vals


def _level(mu) -> int:
    return sum(mu[:-1]) + abs(mu[-1])


def _soe_preimage(vc: VirtualChar) -> VirtualChar:
    family = vc.family
    witness = VirtualChar(family, side="k")
    rest = vc

    def take(p, lam, c):
        nonlocal rest, witness
        w = SOEWeight(p, tuple(lam))
        witness = witness + VirtualChar.single(family, w, c, "k")
        rest = rest - c * branch(family, w)

    while rest:
        top = max(_level(mu) for _, mu in rest)
        # first clear every term with mu_{n-1} >= 0 at this level
        for (q, mu), c in rest.items():
            if _level(mu) == top and mu[-1] >= 0:
                take(q, mu + (0,), c)
        # what is left at this level sits on mu* and balances per parity
        while True:
            stars = [(mu, q, c) for (q, mu), c in rest.items() if _level(mu) == top]
            if not stars:
                break
            mu, a, c = max(stars)
            plus = _star(mu)
            take(a - 1, plus + (-1,), c)
            take(a - 2, plus + (0,), -c)
    return witness


def member_soe(vc: VirtualChar) -> MembershipResult:
    """Exact membership test for SO_0(2,2n)."""
    _require(vc, "soe", "member_soe")
    for (mu, parity), value in sorted(soe_functionals(vc).items()):
        if value:
            return MembershipResult("nonmember", certificate={
                "mu": list(mu), "parity": parity, "value": value})
    return _verified(vc, _soe_preimage(vc))


# -- SU(m,1) and SU(1,n)

def _swap_family(family: SU) -> SU:
    return SU(family.n, family.m)


@lru_cache(maxsize=None)
def _preimage_m1(family: SU, label) -> tuple:
    """Preimage of one canonical label of SU(m,1), as ((weight, coef), ...)."""
    mu, p = label.mu1, label.p
    if len(set(mu)) <= 1:
        q = mu[0] if mu else 0
        w = SUWeight((q,) * family.m, (p - q,))
        return ((family.canonical_weight(w), 1),)
    k = mu[-1] - p
    lam = tuple(x + k for x in mu) + (mu[-1] + k,)
    w = SUWeight(lam, (0,))
    out = VirtualChar.single(family, w, 1, "k")
    image = branch(family, w) - VirtualChar.single(family, label)
    for x, c in sorted(image.items(), reverse=True):
        out = out - c * VirtualChar(family, _preimage_m1(family, x), "k")
    return tuple(out.items())


def preimage_su1n(vc: VirtualChar) -> VirtualChar:
    """K-side combination whose restriction is ``vc``, for SU(m,1) or SU(1,n)."""
    _require(vc, "su", "preimage_su1n")
    family = vc.family
    if family.n == 1:
        out = VirtualChar(family, side="k")
        for x, c in vc.items():
            out = out + c * VirtualChar(family, _preimage_m1(family, x), "k")
        return out
    if family.m == 1:
        dual = _swap_family(family)
        out = []
        for x, c in vc.items():
            y = dual.canonical_label((x.mu2, x.mu1, x.p))
            for w, d in _preimage_m1(dual, y):
                out.append(((w.lam2, w.lam1), c * d))
        return VirtualChar(family, out, "k")
    raise ValidationError(f"preimage_su1n needs m = 1 or n = 1, got {family}")


# -- bounded lattice search

def max_generators() -> int:
    raw = os.environ.get(MAX_GENERATORS_ENV)
    if raw is None:
        return DEFAULT_MAX_GENERATORS
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"{MAX_GENERATORS_ENV}={raw!r} is not an integer") from None


def support_bound(vc: VirtualChar) -> int:
    return max((abs(e) for x in vc for e in label_entries(x)), default=0)


def _center_sostar(vc: VirtualChar) -> tuple[VirtualChar, int, int]:
    """Shift nu by -k so its entries straddle 0; returns (shifted, k, bound).

    Restriction commutes with the determinant twist pi_lam -> pi_{lam+k},
    which moves nu by k and leaves p alone, so membership is unchanged.
    """
    entries = [e for x in vc for e in x.nu]
    lo, hi = min(entries), max(entries)
    k = (lo + hi) // 2
    shifted = VirtualChar(vc.family, [(SOStarLabel(tuple(e - k for e in x.nu), x.p), c)
                                      for x, c in vc.items()])
    return shifted, k, max(hi - k, k - lo)


def generator_box(family: Family, bound: int) -> list:
    """Canonical K-weights with every entry in [-bound, bound]."""
    return list(family.k_weights(-bound, bound))


_BASES: dict = {}


def _basis(family: Family, bound: int) -> Echelon:
    key = (family, bound)
    if key not in _BASES:
        gens = generator_box(family, bound)
        cap = max_generators()
        if len(gens) > cap:
            raise ResourceError(f"{len(gens)} generators for {family} at bound {bound} "
                                f"exceed the cap {cap} (set {MAX_GENERATORS_ENV})")
        ech = Echelon()
        for w in gens:
            ech.insert(branch(family, w).terms, w)
        _BASES[key] = ech
    return _BASES[key]


def lattice_member(target: VirtualChar, radius: int) -> MembershipResult:
    """Member with a witness, or Unknown; never NonMember.

    Generators are the K-weights with entries within (largest target entry)
    + radius.  For SO*(2n) the target is first centred by a determinant
    twist and only the nu entries set the box (p <= lam_1 - lam_n anyway).
    """
    if radius < 0:
        raise ValidationError("radius must be nonnegative")
    family = target.family
    if not target:
        return MembershipResult("member", VirtualChar(family, side="k"))
    shift = 0
    work = target
    if family.kind == "sostar" and family.n > 2:
        work, shift, bound = _center_sostar(target)
    else:
        bound = support_bound(target)
    ech = _basis(family, bound + radius)
    residual, combo = ech.reduce(work.terms)
    if residual:
        return MembershipResult("unknown", radius=radius)
    if shift:
        combo = {SOStarWeight(tuple(e + shift for e in w.lam)): c for w, c in combo.items()}
    return _verified(target, VirtualChar(family, combo, "k"))


__all__ = ["MembershipResult", "invariant_I", "invariant_I_label", "soe_functionals",
           "member_soe", "preimage_su1n", "lattice_member", "support_bound", "generator_box",
           "max_generators", "MAX_GENERATORS_ENV"]
