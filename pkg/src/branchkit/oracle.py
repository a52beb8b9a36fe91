"""Family-level front end of the character engine.

``oracle_restrict`` never looks at a branching formula: it restricts the
complete weight multiset of a K-irrep along the torus embedding and peels
the result into K_M-irreducibles.  It is the reference every closed-form
branching law is tested against.
"""
from __future__ import annotations

from collections import defaultdict

from . import characters as ch
from .families import Family
from .virtual import VirtualChar


def _labels(family: Family, decomposition: dict) -> VirtualChar:
    return VirtualChar(family, [(family.label_from_coords(c), m)
                                for c, m in decomposition.items()])


def km_weight_multiplicities(family: Family, label) -> dict:
    label = family.validate_label(label)
    return ch.weight_multiplicities(family.km_shape(), family.label_coords(label))


def tensor_decompose(family: Family, a, b) -> VirtualChar:
    """Decompose tau_a (x) tau_b into K_M-irreducibles."""
    a, b = family.validate_label(a), family.validate_label(b)
    sh = family.km_shape()
    return _labels(family, ch.tensor_decompose(sh, family.label_coords(a), family.label_coords(b)))


def exterior_decompose(family: Family, a, j: int) -> VirtualChar:
    """Decompose the j-th exterior power of tau_a; empty when j > dim."""
    a = family.validate_label(a)
    return _labels(family, ch.exterior_decompose(family.km_shape(), family.label_coords(a), j))


def tensor_virtual(x: VirtualChar, y: VirtualChar) -> VirtualChar:
    """Bilinear extension of :func:`tensor_decompose`."""
    out = VirtualChar(x.family)
    for a, ca in x.items():
        for b, cb in y.items():
            out = out + (ca * cb) * tensor_decompose(x.family, a, b)
    return out


def oracle_restrict(family: Family, w) -> VirtualChar:
    """Restriction of pi_w to K_M computed from weights alone."""
    w = family.validate_weight(w)
    ksh, msh = family.k_shape(), family.km_shape()
    dominant = defaultdict(int)
    for t, m in ch.full_weights(ksh, family.weight_coords(w)).items():
        u = family.restrict_coords(t)
        if msh.is_dominant(u):
            dominant[u] += m
    return _labels(family, ch.peel(msh, dominant))
