"""Coset representatives W_kappa, the restricted labels W_{lambda_w} and c-hat.

Every term is produced twice.  :func:`weyl_terms` evaluates the closed
formulas per family; :func:`weyl_terms_direct` builds lambda_w = w(lambda +
rho_c) - rho_c by moving coordinates, restricts it to the K_M torus and
reads off c-hat as rho_Q + <lambda_w, h> for the family's integer vector h.
The two must agree label for label.

c-hat is stored without the positive normalization factor, so only |c_hat|
comparisons inside one family are meaningful.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .combinatorics import conjugate, pad, partitions_in_box
from .families import Family, SOELabel, SOStarLabel, SULabel
from .oracle import exterior_decompose
from .virtual import VirtualChar


class WeylElem(NamedTuple):
    """SU: (i, j); SOE: (sign, i) with sign in {+1, -1}; SOStar: (i, j), i < j.  1-based."""
    a: int
    b: int

    def to_json(self, family: Family):
        if family.kind == "soe":
            return {"delta": "+" if self.a > 0 else "-", "i": self.b}
        return {"i": self.a, "j": self.b}


@dataclass(frozen=True)
class WeylTerm:
    elem: WeylElem
    sign: int
    label: tuple
    c_hat: int


def enum_wkappa(family: Family) -> list[WeylElem]:
    if family.kind == "su":
        return [WeylElem(i, j) for i in range(1, family.m + 1) for j in range(1, family.n + 1)]
    if family.kind == "soe":
        return [WeylElem(d, i) for i in range(1, family.n + 1) for d in (1, -1)]
    n = family.n
    return [WeylElem(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def rho_q(family: Family) -> int:
    """rho_Q(X_kappa) per family (the SOStar constant is read off its final formula)."""
    if family.kind == "su":
        return family.m + family.n - 1
    if family.kind == "soe":
        return 2 * family.n - 1
    return 2 * family.n - 3


# -- closed formulas

def _su_term(family, w, e):
    m, n = family.m, family.n
    i, j = e
    l1, l2 = w.lam1, w.lam2
    mu1 = tuple(x + 1 for x in l1[:i - 1]) + l1[i:]
    mu2 = l2[:j - 1] + tuple(x - 1 for x in l2[j:])
    p = l1[i - 1] + l2[j - 1] + n + 1 - i - j
    c = l1[i - 1] - l2[j - 1] + (m - i) + j
    return (-1) ** (i + j), SULabel(mu1, mu2, p), c


def _soe_term(family, w, e):
    n = family.n
    d, i = e
    lam, p = w.lam, w.p
    li = lam[i - 1]
    if i < n:
        head = tuple(x + 1 for x in lam[:i - 1]) + lam[i:n - 1]
        if d > 0:
            mu, q, c = head + (lam[-1],), p + li - i + 1, -p + li - i + 2 * n
        else:
            mu, q, c = head + (-lam[-1],), p - li - 2 * n + i + 1, -p - li + i
    else:
        head = tuple(x + 1 for x in lam[:n - 2])
        if d > 0:
            mu, q, c = head + (lam[n - 2] + 1,), p + li - n + 1, -p + li + n
        else:
            mu, q, c = head + (-lam[n - 2] - 1,), p - li - n + 1, -p - li + n
    return (-1) ** (i - 1), SOELabel(q, mu), c


def _sostar_term(family, w, e):
    n = family.n
    i, j = e
    lam = w.lam
    nu = tuple(x + 2 for x in lam[:i - 1]) + tuple(x + 1 for x in lam[i:j - 1]) + lam[j:]
    p = lam[i - 1] - lam[j - 1] - i + j - 1
    c = lam[i - 1] + lam[j - 1] + 2 * n - i - j
    return (-1) ** (i + j + 1), SOStarLabel(nu, p), c


_TERM = {"su": _su_term, "soe": _soe_term, "sostar": _sostar_term}


def weyl_terms(family: Family, w) -> list[WeylTerm]:
    """Signed restricted labels and c-hat values from the closed formulas."""
    w = family.validate_weight(w)
    out = []
    for e in enum_wkappa(family):
        sign, label, c = _TERM[family.kind](family, w, e)
        out.append(WeylTerm(e, sign, family.canonical_label(label), c))
    return out


# -- independent route: act on coordinates

def _move_to_front(v, positions):
    """Signed permutation moving ``positions`` (0-based, in order) to the front."""
    rest = [k for k in range(len(v)) if k not in positions]
    order = list(positions) + rest
    inversions = sum(1 for a in range(len(order)) for b in range(a + 1, len(order))
                     if order[a] > order[b])
    return tuple(v[k] for k in order), (-1) ** inversions


def lambda_w(family: Family, w, e) -> tuple[tuple, int]:
    """(K torus coordinates of lambda_w, determinant of w)."""
    w = family.validate_weight(w)
    if family.kind == "su":
        m, n = family.m, family.n
        r1 = tuple(m - 1 - k for k in range(m))
        r2 = tuple(n - 1 - k for k in range(n))
        a = tuple(x + r for x, r in zip(w.lam1, r1))
        b = tuple(x + r for x, r in zip(w.lam2, r2))
        a, s1 = _move_to_front(a, [e.a - 1])
        # w_2^(j) sends coordinate j to the end
        b_rev, s2 = _move_to_front(b[::-1], [n - e.b])
        b = b_rev[::-1]
        a = tuple(x - r for x, r in zip(a, r1))
        b = tuple(x - r for x, r in zip(b, r2))
        return a + b, s1 * s2
    if family.kind == "soe":
        n = family.n
        rho = tuple(n - 1 - k for k in range(n))
        v = tuple(x + r for x, r in zip(w.lam, rho))
        v, s = _move_to_front(v, [e.b - 1])
        if e.a < 0:
            v = (-v[0],) + v[1:-1] + (-v[-1],)
        v = tuple(x - r for x, r in zip(v, rho))
        return (w.p,) + v, s
    n = family.n
    rho = tuple(n - 1 - k for k in range(n))
    v = tuple(x + r for x, r in zip(w.lam, rho))
    v, s = _move_to_front(v, [e.a - 1, e.b - 1])
    return tuple(x - r for x, r in zip(v, rho)), s


def _h_pairing(family: Family, t) -> int:
    if family.kind == "su":
        return t[0] - t[-1]
    if family.kind == "soe":
        return t[1] - t[0]
    return t[0] + t[1]


def weyl_terms_direct(family: Family, w) -> list[WeylTerm]:
    """Same data as :func:`weyl_terms`, recomputed from lambda_w itself.

    The sign is det(w).  For SU it differs from (-1)^(i+j) by the global
    factor (-1)^(n+1), which no grouping can detect.
    """
    out = []
    for e in enum_wkappa(family):
        t, det = lambda_w(family, w, e)
        label = family.label_from_coords(family.restrict_coords(t))
        c = rho_q(family) + _h_pairing(family, t)
        if family.kind == "su":
            det *= (-1) ** (family.n + 1)
        out.append(WeylTerm(e, det, family.canonical_label(label), c))
    return out


def signed_sum(family: Family, terms) -> VirtualChar:
    return VirtualChar(family, [(t.label, t.sign) for t in terms])


# -- the exterior algebra factor

def ptilde_ev(family: Family):
    """Highest weight of p~_+^[ev]; None when that space is zero."""
    if family.kind == "su":
        m, n = family.m, family.n
        if m < 2 or n < 2:
            return None
        return family.canonical_label(SULabel((1,) + (0,) * (m - 2), (0,) * (n - 2) + (-1,), 0))
    if family.kind == "soe":
        return SOELabel(-2, (0,) * (family.n - 1))
    if family.n < 4:
        return None
    return SOStarLabel((1, 1) + (0,) * (family.n - 4), 0)


def lambda_alt_sum(family: Family) -> VirtualChar:
    """sum_j (-1)^j Lambda^j p~_+^[ev], from the exterior-power engine."""
    top = ptilde_ev(family)
    if top is None:
        return VirtualChar.single(family, family.trivial_label())
    out = VirtualChar(family)
    for j in range(family.label_dim(top) + 1):
        out = out + (-1) ** j * exterior_decompose(family, top, j)
    return out


def lambda_alt_sum_su(family: Family) -> VirtualChar:
    """SU closed form: Lambda^j(V (x) W*) = sum over |alpha| = j of S_alpha V (x) S_alpha' W*."""
    m1, n1 = family.m - 1, family.n - 1
    terms = []
    for size in range(m1 * n1 + 1):
        for alpha in partitions_in_box(size, m1, n1):
            mu1 = pad(alpha, m1)
            mu2 = tuple(-x for x in reversed(pad(conjugate(alpha), n1)))
            terms.append(((mu1, mu2, 0), (-1) ** size))
    return VirtualChar(family, terms)


__all__ = ["WeylElem", "WeylTerm", "enum_wkappa", "rho_q", "weyl_terms", "weyl_terms_direct",
           "lambda_w", "signed_sum", "ptilde_ev", "lambda_alt_sum", "lambda_alt_sum_su"]
