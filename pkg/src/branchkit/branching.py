"""Closed-form restriction Res: K^0(K) -> K^0(K_M) for the three families."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .combinatorics import compositions_bounded, interlacing, is_nonincreasing
from .errors import NotInSupportError
from .families import Family, is_double_dominant
from .virtual import VirtualChar


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class BranchTermSOE:
    mu: tuple
    ells: tuple          # l_1 .. l_{n-1}
    ell_n: int
    mults: tuple         # m(0) .. m(l)

    @property
    def ell(self) -> int:
        return sum(self.ells)

    def charges(self, p: int):
        """(q, multiplicity) pairs contributed at SO(2) character p."""
        return [(p + self.ell_n + 2 * k - self.ell, m) for k, m in enumerate(self.mults)]


def _soe_window(lam):
    """Ranges for mu_1..mu_{n-1} allowed by the SO(2n) -> SO(2n-2) rule."""
    n = len(lam)
    ranges = []
    for i in range(n - 2):
        lower = lam[i + 2] if i + 2 < n - 1 else abs(lam[n - 1])
        ranges.append(range(lam[i], lower - 1, -1))
    ranges.append(range(lam[n - 2], -lam[n - 2] - 1, -1))
    return ranges


def _in_soe_window(lam, mu) -> bool:
    return len(mu) == len(lam) - 1 and is_double_dominant(mu) and \
        all(x in r for x, r in zip(mu, _soe_window(lam)))


def branch_terms_soe(family: Family, w, mu) -> BranchTermSOE:
    w = family.validate_weight(w)
    lam, n = w.lam, family.n
    mu = tuple(mu)
    if not _in_soe_window(lam, mu):
        raise NotInSupportError(f"mu={mu} does not occur in the restriction of lambda={lam}")
    if n == 2:
        ells = (lam[0] - max(abs(lam[1]), abs(mu[0])),)
    else:
        ells = [lam[0] - max(lam[1], mu[0])]
        for i in range(1, n - 2):
            ells.append(min(lam[i], mu[i - 1]) - max(lam[i + 1], mu[i]))
        ells.append(min(lam[n - 2], mu[n - 3]) - max(abs(lam[n - 1]), abs(mu[n - 2])))
        ells = tuple(ells)
    ell_n = sgn(lam[-1]) * sgn(mu[-1]) * min(abs(lam[-1]), abs(mu[-1]))
    return BranchTermSOE(mu, ells, ell_n, tuple(compositions_bounded(ells)))


def _branch_su(family, w):
    total = sum(w.lam1) + sum(w.lam2)
    terms = []
    for mu1 in interlacing(w.lam1):
        for mu2 in interlacing(w.lam2):
            terms.append(((mu1, mu2, total - sum(mu1) - sum(mu2)), 1))
    return terms


def _branch_soe(family, w):
    terms = []
    for mu in product(*_soe_window(w.lam)):
        if not is_double_dominant(mu):
            continue
        bt = branch_terms_soe(family, w, mu)
        for q, m in bt.charges(w.p):
            terms.append(((q, mu), m))
    return terms


def sostar_p(lam, nu) -> int:
    """SU(2) label attached to nu by the single-pattern rule (see branch_sostar_single)."""
    n = len(lam)
    return lam[0] - sum(abs(lam[i] - nu[i - 1]) for i in range(1, n - 1)) - lam[-1]


def _sostar_nus(lam):
    n = len(lam)
    ranges = [range(lam[j], lam[j + 2] - 1, -1) for j in range(n - 2)]
    for nu in product(*ranges):
        if is_nonincreasing(nu):
            yield nu


def branch_sostar_single(family: Family, w) -> VirtualChar:
    """One term tau_{nu, p(lam, nu)} per admissible nu.

    This keeps only the pattern with mu_1 = lam_1, mu_i = min(lam_i, nu_{i-1});
    it agrees with :func:`branch` exactly when no U(2)-isotypic component of
    a fixed nu has more than one highest weight vector, and otherwise
    undercounts (already for U(3) and lam = (3, 2, 1)).
    """
    w = family.validate_weight(w)
    terms = []
    for nu in _sostar_nus(w.lam):
        p = sostar_p(w.lam, nu)
        if p < 0:
            raise ArithmeticError(f"negative SU(2) label for lambda={w.lam}, nu={nu}")
        terms.append(((nu, p), 1))
    return VirtualChar(family, terms)


def _gt_row_counts(lam, nu):
    """counts[s] = #{mu : nu interlaces mu interlaces lam, |mu| = s_min + s}."""
    n = len(lam)
    lows, highs = [], []
    for i in range(n - 1):
        hi = lam[i] if i == 0 else min(lam[i], nu[i - 1])
        lo = max(lam[i + 1], nu[i]) if i < n - 2 else lam[i + 1]
        if hi < lo:
            return 0, []
        lows.append(lo)
        highs.append(hi)
    return sum(lows), compositions_bounded([h - l for h, l in zip(highs, lows)])


def _branch_sostar(family, w):
    # Gelfand-Tsetlin count: for each U(n-2)-type nu the middle GT row mu
    # carries U(2)-weight (|mu| - |nu|, |lam| - |mu|); highest weight
    # multiplicities are differences of adjacent weight multiplicities.
    lam = w.lam
    total = sum(lam)
    terms = []
    for nu in _sostar_nus(lam):
        base, counts = _gt_row_counts(lam, nu)
        rest = total - sum(nu)

        def weight_mult(p):
            # U(2) weights (a, b) with a - b = p and a + b = rest
            if (rest + p) % 2:
                return 0
            s = sum(nu) + (rest + p) // 2 - base
            return counts[s] if 0 <= s < len(counts) else 0

        for p in range(max(len(counts), 1) * 2 + abs(rest) + 2):
            m = weight_mult(p) - weight_mult(p + 2)
            if m:
                terms.append(((nu, p), m))
    return terms


def branch_raw(family: Family, w) -> list:
    """(label, multiplicity) pairs as the branching rule produces them, before canonicalization."""
    w = family.validate_weight(w)
    if family.kind == "su":
        terms = _branch_su(family, w)
    elif family.kind == "soe":
        terms = _branch_soe(family, w)
    else:
        terms = _branch_sostar(family, w)
    return [(family.label_type(*x), m) for x, m in terms]


def branch(family: Family, w) -> VirtualChar:
    """Res(pi_w) as a canonical virtual character of K_M."""
    return VirtualChar(family, branch_raw(family, w))


def branch_virtual(kvc: VirtualChar) -> VirtualChar:
    """Z-linear extension of :func:`branch` to K^0(K)."""
    out = VirtualChar(kvc.family)
    for w, c in kvc.items():
        out = out + c * branch(kvc.family, w)
    return out


__all__ = ["branch", "branch_virtual", "branch_terms_soe", "BranchTermSOE", "sostar_p", "sgn",
           "branch_sostar_single", "branch_raw"]
