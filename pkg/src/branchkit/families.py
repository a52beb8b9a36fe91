"""The three group families, their K-weights and K_M-labels.

``SU(m, n)``    K = S(U(m) x U(n)),   K_M ~ U(1) x U(m-1) x U(n-1) / ~
``SOE(n)``      K = SO(2) x SO(2n),  K_M = SO(2) x SO(2n-2)     (G = SO_0(2,2n))
``SOStar(n)``   K = U(n),            K_M = SU(2) x U(n-2)       (G = SO*(2n))

Weights and labels are named tuples of ints and int tuples, so they hash,
compare lexicographically and serialize without ceremony.  Each family
knows how to validate them, put them in canonical form, map them to flat
torus coordinates of its K and K_M shapes, and restrict a K torus weight to
the K_M torus.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .characters import A1, Shape, Torus, TypeA, TypeD, shape
from .combinatorics import is_nonincreasing, nonincreasing_tuples
from .errors import ValidationError


class SUWeight(NamedTuple):
    lam1: tuple
    lam2: tuple


class SULabel(NamedTuple):
    mu1: tuple
    mu2: tuple
    p: int


class SOEWeight(NamedTuple):
    p: int
    lam: tuple


class SOELabel(NamedTuple):
    q: int
    mu: tuple


class SOStarWeight(NamedTuple):
    lam: tuple


class SOStarLabel(NamedTuple):
    nu: tuple
    p: int


def _ints(v, what):
    try:
        out = tuple(int(x) for x in v)
    except (TypeError, ValueError):
        raise ValidationError(f"{what}: expected a list of integers, got {v!r}") from None
    if any(isinstance(x, bool) for x in v):
        raise ValidationError(f"{what}: booleans are not integers")
    return out


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValidationError(f"{what}: expected an integer, got {x!r}")
    return x


def is_double_dominant(v) -> bool:
    """Membership in Z^k_{++}: v_1 >= ... >= v_{k-1} >= |v_k|."""
    if len(v) < 2:
        return True
    return is_nonincreasing(v[:-1]) and v[-2] >= abs(v[-1])


def double_dominant_tuples(length: int, bound: int) -> Iterator[tuple]:
    """Elements of Z^length_{++} with entries bounded by ``bound`` in absolute value."""
    if length == 0:
        yield ()
        return
    if length == 1:
        for x in range(bound, -bound - 1, -1):
            yield (x,)
        return
    for head in nonincreasing_tuples(length - 1, 0, bound):
        for last in range(head[-1], -head[-1] - 1, -1):
            yield head + (last,)


class Family:
    """Common interface; see the concrete families below."""

    kind: str

    # -- overridden per family
    def k_shape(self) -> Shape: ...
    def km_shape(self) -> Shape: ...
    def weight_coords(self, w) -> tuple: ...
    def weight_from_coords(self, c) -> tuple: ...
    def label_coords(self, x) -> tuple: ...
    def label_from_coords(self, c) -> tuple: ...
    def restrict_coords(self, t) -> tuple: ...

    def canonical_weight(self, w):
        return self.validate_weight(w)

    def canonical_label(self, x):
        return self.validate_label(x)

    # -- shared
    def validate_weight(self, w):
        w = self.weight_type(*w)
        c = self.weight_coords(w)
        if not self.k_shape().is_dominant(c):
            raise ValidationError(f"{self}: weight {w} is not dominant")
        return w

    def validate_label(self, x):
        x = self.label_type(*x)
        c = self.label_coords(x)
        if not self.km_shape().is_dominant(c):
            raise ValidationError(f"{self}: label {x} is not dominant")
        return x

    def weight_dim(self, w) -> int:
        return self.k_shape().dimension(self.weight_coords(self.validate_weight(w)))

    def label_dim(self, x) -> int:
        return self.km_shape().dimension(self.label_coords(self.validate_label(x)))

    def trivial_weight(self):
        return self.weight_from_coords((0,) * self.k_shape().rank)

    def trivial_label(self):
        return self.label_from_coords((0,) * self.km_shape().rank)

    def __str__(self):
        return self.spec


@dataclass(frozen=True)
class SU(Family):
    m: int
    n: int
    kind = "su"
    weight_type = SUWeight
    label_type = SULabel

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)) or \
                self.m < 1 or self.n < 1 or self.m + self.n < 3:
            raise ValidationError(f"SU(m,n) needs m, n >= 1 and m + n >= 3, got ({self.m},{self.n})")

    @property
    def spec(self):
        return f"su:{self.m},{self.n}"

    def k_shape(self):
        return shape(TypeA(self.m), TypeA(self.n))

    def km_shape(self):
        return shape(TypeA(self.m - 1), TypeA(self.n - 1), Torus(1))

    def validate_weight(self, w):
        w = SUWeight(_ints(w[0], "lambda1"), _ints(w[1], "lambda2"))
        if len(w.lam1) != self.m or len(w.lam2) != self.n:
            raise ValidationError(f"{self}: weight {w} needs lengths {self.m} and {self.n}")
        if not (is_nonincreasing(w.lam1) and is_nonincreasing(w.lam2)):
            raise ValidationError(f"{self}: weight {w} is not dominant")
        return w

    def validate_label(self, x):
        x = SULabel(_ints(x[0], "mu1"), _ints(x[1], "mu2"), _int(x[2], "p"))
        if len(x.mu1) != self.m - 1 or len(x.mu2) != self.n - 1:
            raise ValidationError(f"{self}: label {x} needs lengths {self.m - 1} and {self.n - 1}")
        if not (is_nonincreasing(x.mu1) and is_nonincreasing(x.mu2)):
            raise ValidationError(f"{self}: label {x} is not dominant")
        return x

    @staticmethod
    def shift_weight(w, k):
        return SUWeight(tuple(a + k for a in w.lam1), tuple(a + k for a in w.lam2))

    @staticmethod
    def shift_label(x, k):
        return SULabel(tuple(a + k for a in x.mu1), tuple(a + k for a in x.mu2), x.p + 2 * k)

    def canonical_weight(self, w):
        w = self.validate_weight(w)
        return self.shift_weight(w, -w.lam2[-1])

    def canonical_label(self, x):
        x = self.validate_label(x)
        k = -x.mu2[-1] if self.n >= 2 else -x.mu1[-1]
        return self.shift_label(x, k)

    def weight_coords(self, w):
        return tuple(w[0]) + tuple(w[1])

    def weight_from_coords(self, c):
        return SUWeight(tuple(c[:self.m]), tuple(c[self.m:]))

    def label_coords(self, x):
        return tuple(x[0]) + tuple(x[1]) + (x[2],)

    def label_from_coords(self, c):
        m1 = self.m - 1
        return SULabel(tuple(c[:m1]), tuple(c[m1:-1]), c[-1])

    def restrict_coords(self, t):
        a, b = t[:self.m], t[self.m:]
        return tuple(a[1:]) + tuple(b[:-1]) + (a[0] + b[-1],)

    def k_weights(self, lo, hi):
        """Canonical K-weights (last entry of lambda2 is 0) with entries in [lo, hi]."""
        if not lo <= 0 <= hi:
            return
        for l1 in nonincreasing_tuples(self.m, lo, hi):
            for l2 in nonincreasing_tuples(self.n - 1, 0, hi):
                yield SUWeight(l1, l2 + (0,))

    def km_labels(self, lo, hi):
        """Canonical labels with all entries (p included) in [lo, hi]."""
        if not lo <= 0 <= hi:
            return
        if self.n >= 2:
            firsts = nonincreasing_tuples(self.m - 1, lo, hi)
            for mu1 in firsts:
                for mu2 in nonincreasing_tuples(self.n - 2, 0, hi):
                    for p in range(lo, hi + 1):
                        yield SULabel(mu1, mu2 + (0,), p)
        else:
            for mu1 in nonincreasing_tuples(self.m - 2, 0, hi):
                for p in range(lo, hi + 1):
                    yield SULabel(mu1 + (0,), (), p)


@dataclass(frozen=True)
class SOE(Family):
    n: int
    kind = "soe"
    weight_type = SOEWeight
    label_type = SOELabel

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValidationError(f"SO_0(2,2n) needs n >= 2, got {self.n}")

    @property
    def spec(self):
        return f"soe:{self.n}"

    def k_shape(self):
        return shape(Torus(1), TypeD(self.n))

    def km_shape(self):
        return shape(Torus(1), TypeD(self.n - 1))

    def validate_weight(self, w):
        w = SOEWeight(_int(w[0], "p"), _ints(w[1], "lambda"))
        if len(w.lam) != self.n or not is_double_dominant(w.lam):
            raise ValidationError(f"{self}: lambda {w.lam} must lie in Z^{self.n}_++")
        return w

    def validate_label(self, x):
        x = SOELabel(_int(x[0], "q"), _ints(x[1], "mu"))
        if len(x.mu) != self.n - 1 or not is_double_dominant(x.mu):
            raise ValidationError(f"{self}: mu {x.mu} must lie in Z^{self.n - 1}_++")
        return x

    def weight_coords(self, w):
        return (w[0],) + tuple(w[1])

    def weight_from_coords(self, c):
        return SOEWeight(c[0], tuple(c[1:]))

    def label_coords(self, x):
        return (x[0],) + tuple(x[1])

    def label_from_coords(self, c):
        return SOELabel(c[0], tuple(c[1:]))

    def restrict_coords(self, t):
        # the SO(2) of K_M sits diagonally in SO(2) x SO(2)_{first block}
        return (t[0] + t[1],) + tuple(t[2:])

    def k_weights(self, lo, hi):
        bound = min(-lo, hi)
        for lam in double_dominant_tuples(self.n, bound):
            for p in range(hi, lo - 1, -1):
                yield SOEWeight(p, lam)

    def km_labels(self, lo, hi):
        bound = min(-lo, hi)
        for mu in double_dominant_tuples(self.n - 1, bound):
            for q in range(hi, lo - 1, -1):
                yield SOELabel(q, mu)


@dataclass(frozen=True)
class SOStar(Family):
    n: int
    kind = "sostar"
    weight_type = SOStarWeight
    label_type = SOStarLabel

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ValidationError(f"SO*(2n) needs n >= 3, got {self.n}")

    @property
    def spec(self):
        return f"sostar:{self.n}"

    def k_shape(self):
        return shape(TypeA(self.n))

    def km_shape(self):
        return shape(TypeA(self.n - 2), A1())

    def validate_weight(self, w):
        w = SOStarWeight(_ints(w[0], "lambda"))
        if len(w.lam) != self.n or not is_nonincreasing(w.lam):
            raise ValidationError(f"{self}: lambda {w.lam} must be nonincreasing of length {self.n}")
        return w

    def validate_label(self, x):
        x = SOStarLabel(_ints(x[0], "nu"), _int(x[1], "p"))
        if len(x.nu) != self.n - 2 or not is_nonincreasing(x.nu):
            raise ValidationError(f"{self}: nu {x.nu} must be nonincreasing of length {self.n - 2}")
        if x.p < 0:
            raise ValidationError(f"{self}: SU(2) label p={x.p} must be >= 0")
        return x

    def weight_coords(self, w):
        return tuple(w[0])

    def weight_from_coords(self, c):
        return SOStarWeight(tuple(c))

    def label_coords(self, x):
        return tuple(x[0]) + (x[1],)

    def label_from_coords(self, c):
        return SOStarLabel(tuple(c[:-1]), c[-1])

    def restrict_coords(self, t):
        return tuple(t[2:]) + (t[0] - t[1],)

    def k_weights(self, lo, hi):
        for lam in nonincreasing_tuples(self.n, lo, hi):
            yield SOStarWeight(lam)

    def km_labels(self, lo, hi):
        for nu in nonincreasing_tuples(self.n - 2, lo, hi):
            for p in range(max(lo, 0), hi + 1):
                yield SOStarLabel(nu, p)


GroupFamily = Family


def parse_family(spec: str) -> Family:
    """Parse ``su:m,n``, ``soe:n`` or ``sostar:n``."""
    try:
        kind, _, args = spec.strip().lower().partition(":")
        nums = [int(a) for a in args.split(",")] if args else []
    except ValueError:
        raise ValidationError(f"bad family spec {spec!r}") from None
    if kind == "su" and len(nums) == 2:
        return SU(*nums)
    if kind == "soe" and len(nums) == 1:
        return SOE(nums[0])
    if kind == "sostar" and len(nums) == 1:
        return SOStar(nums[0])
    raise ValidationError(f"bad family spec {spec!r} (expected su:m,n | soe:n | sostar:n)")


def canonical_km(family: Family, label):
    """Unique representative of a K_M-label's equivalence class."""
    return family.canonical_label(label)


def label_entries(label) -> list[int]:
    out = []
    for part in label:
        if isinstance(part, tuple):
            out.extend(part)
        else:
            out.append(part)
    return out


# -- JSON encodings

def weight_to_json(family: Family, w) -> dict:
    if family.kind == "su":
        return {"lambda1": list(w.lam1), "lambda2": list(w.lam2)}
    if family.kind == "soe":
        return {"p": w.p, "lambda": list(w.lam)}
    return {"lambda": list(w.lam)}


def weight_from_json(family: Family, d: dict):
    try:
        if family.kind == "su":
            return family.validate_weight((d["lambda1"], d["lambda2"]))
        if family.kind == "soe":
            return family.validate_weight((d["p"], d["lambda"]))
        return family.validate_weight((d["lambda"],))
    except (KeyError, TypeError):
        raise ValidationError(f"{family}: malformed weight JSON {d!r}") from None


def label_to_json(family: Family, x) -> dict:
    if family.kind == "su":
        return {"mu1": list(x.mu1), "mu2": list(x.mu2), "p": x.p}
    if family.kind == "soe":
        return {"q": x.q, "mu": list(x.mu)}
    return {"nu": list(x.nu), "p": x.p}


def label_from_json(family: Family, d: dict):
    try:
        if family.kind == "su":
            return family.validate_label((d["mu1"], d["mu2"], d["p"]))
        if family.kind == "soe":
            return family.validate_label((d["q"], d["mu"]))
        return family.validate_label((d["nu"], d["p"]))
    except (KeyError, TypeError):
        raise ValidationError(f"{family}: malformed label JSON {d!r}") from None


def grid_weights(family: Family, bound: int, p_range=None) -> Iterator:
    """Dominant K-weights with |entries| <= bound, deduplicated up to equivalence.

    For SOE the SO(2) character runs over ``p_range`` (default [-bound, bound]).
    """
    if family.kind == "su":
        seen = set()
        for l1 in nonincreasing_tuples(family.m, -bound, bound):
            for l2 in nonincreasing_tuples(family.n, -bound, bound):
                w = family.canonical_weight((l1, l2))
                if w not in seen:
                    seen.add(w)
                    yield w
    elif family.kind == "soe":
        ps = p_range if p_range is not None else range(-bound, bound + 1)
        for lam in double_dominant_tuples(family.n, bound):
            for p in ps:
                yield SOEWeight(p, lam)
    else:
        for lam in nonincreasing_tuples(family.n, -bound, bound):
            yield SOStarWeight(lam)


__all__ = [
    "Family", "GroupFamily", "SU", "SOE", "SOStar", "parse_family", "canonical_km",
    "SUWeight", "SULabel", "SOEWeight", "SOELabel", "SOStarWeight", "SOStarLabel",
    "weight_to_json", "weight_from_json", "label_to_json", "label_from_json",
    "grid_weights", "label_entries", "is_double_dominant", "double_dominant_tuples",
]

