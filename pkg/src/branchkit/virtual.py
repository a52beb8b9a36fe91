"""Virtual characters: finite integer combinations of irreducible classes."""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping

from .errors import UnsupportedOperandError, ValidationError
from .families import (Family, label_from_json, label_to_json, parse_family,
                       weight_from_json, weight_to_json)


class VirtualChar:
    """Element of K^0(K_M) (``side="km"``) or K^0(K) (``side="k"``).

    Keys are always canonical and coefficients never zero.  Instances are
    treated as immutable.
    """

    __slots__ = ("family", "side", "_terms")

    def __init__(self, family: Family, terms: Mapping | Iterable = (), side: str = "km"):
        if side not in ("km", "k"):
            raise ValueError(f"side must be 'km' or 'k', got {side!r}")
        self.family = family
        self.side = side
        canon = family.canonical_label if side == "km" else family.canonical_weight
        acc = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coef in items:
            if isinstance(coef, bool) or not isinstance(coef, int):
                raise ValidationError(f"coefficient {coef!r} is not an integer")
            acc[canon(key)] += coef
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def single(cls, family, key, coef=1, side="km"):
        return cls(family, [(key, coef)], side)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __iter__(self):
        return iter(sorted(self._terms))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, key):
        canon = self.family.canonical_label if self.side == "km" else self.family.canonical_weight
        return self._terms.get(canon(key), 0)

    def _check(self, other):
        if not isinstance(other, VirtualChar):
            return NotImplemented
        if other.family != self.family or other.side != self.side:
            raise ValidationError(f"cannot combine {self.family}/{self.side} "
                                  f"with {other.family}/{other.side}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return self._raw(acc)

    def __neg__(self):
        return self._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return self._raw({key: k * v for key, v in self._terms.items()})

    __rmul__ = __mul__

    def _raw(self, acc):
        out = object.__new__(VirtualChar)
        out.family, out.side = self.family, self.side
        out._terms = {k: v for k, v in acc.items() if v}
        return out

    def __eq__(self, other):
        if not isinstance(other, VirtualChar):
            return NotImplemented
        return (self.family, self.side, self._terms) == (other.family, other.side, other._terms)

    def __hash__(self):
        return hash((self.family, self.side, frozenset(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"{v}*{tuple(k)}" for k, v in self.items()) or "0"
        return f"VirtualChar[{self.family}/{self.side}]({body})"

    def dimension(self) -> int:
        dim = self.family.label_dim if self.side == "km" else self.family.weight_dim
        return sum(v * dim(k) for k, v in self._terms.items())

    def is_genuine(self) -> bool:
        return all(v > 0 for v in self._terms.values())

    def to_json(self) -> dict:
        enc = label_to_json if self.side == "km" else weight_to_json
        return {"family": self.family.spec,
                "terms": [{"label": enc(self.family, k), "coef": v} for k, v in self.items()]}

    @classmethod
    def from_json(cls, d: dict, side: str = "km") -> "VirtualChar":
        try:
            family = parse_family(d["family"])
            dec = label_from_json if side == "km" else weight_from_json
            return cls(family, [(dec(family, t["label"]), t["coef"]) for t in d["terms"]], side)
        except (KeyError, TypeError):
            raise ValidationError(f"malformed virtual character JSON: {d!r}") from None


def zero(family: Family, side: str = "km") -> VirtualChar:
    return VirtualChar(family, (), side)


def twist_char(vc: VirtualChar, t) -> VirtualChar:
    """Tensor every term of ``vc`` with the one-dimensional K_M-irrep ``t``."""
    family = vc.family
    if vc.side != "km":
        raise ValidationError("twist_char acts on K_M virtual characters")
    t = family.validate_label(t)
    if family.label_dim(t) != 1:
        raise UnsupportedOperandError(
            f"{tuple(t)} is not one-dimensional; use tensor_decompose instead")
    tc = family.label_coords(t)
    out = []
    for key, coef in vc.items():
        c = tuple(a + b for a, b in zip(family.label_coords(key), tc))
        out.append((family.label_from_coords(c), coef))
    return VirtualChar(family, out)
