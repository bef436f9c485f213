"""Formal generators and sparse rational combinations of them.

Two families of symbols are supported, never mixed inside one element:

* Eisenstein-space generators ``G(k;d)``, ``G(k1,k2;d1,d2)`` and
  ``P(k1,k2;d1,d2)`` of weight k+d resp. k1+k2+d1+d2;
* zeta-space generators ``Z(k)``, ``Z(k1,k2)`` and ``ZP(k1,k2)`` of weight
  k resp. k1+k2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

EISENSTEIN = "E"
ZETA = "Z"

_KIND_ORDER = {"G1": 0, "G2": 1, "GP": 2, "Z1": 0, "Z2": 1, "ZP": 2}
_KIND_SPACE = {"G1": EISENSTEIN, "G2": EISENSTEIN, "GP": EISENSTEIN, "Z1": ZETA, "Z2": ZETA, "ZP": ZETA}


class MixedSpaceError(ValueError):
    """Eisenstein and zeta generators were combined in one element."""


class MixedWeightError(ValueError):
    """Generators of different weights were combined in one element."""


@dataclass(frozen=True, order=True)
class GenId:
    """One formal generator, identified by kind and index tuple.

    Kinds: ``G1`` = G(k;d), ``G2`` = G(k1,k2;d1,d2), ``GP`` = P(k1,k2;d1,d2),
    ``Z1`` = Z(k), ``Z2`` = Z(k1,k2), ``ZP`` = ZP(k1,k2).
    """

    kind: str
    args: tuple[int, ...]

    def __post_init__(self):
        expected = {"G1": 2, "G2": 4, "GP": 4, "Z1": 1, "Z2": 2, "ZP": 2}.get(self.kind)
        if expected is None:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if len(self.args) != expected:
            raise ValueError(f"{self.kind} takes {expected} indices, got {self.args}")
        if self.kind == "G1":
            k, d = self.args
            ok = k >= 1 and d >= 0
        elif self.kind in ("G2", "GP"):
            k1, k2, d1, d2 = self.args
            ok = k1 >= 1 and k2 >= 1 and d1 >= 0 and d2 >= 0
        else:
            ok = all(k >= 1 for k in self.args)
        if not ok:
            raise ValueError(f"invalid indices {self.args} for kind {self.kind}")

    @property
    def space(self) -> str:
        return _KIND_SPACE[self.kind]

    @property
    def weight(self) -> int:
        return sum(self.args)

    @property
    def depth(self) -> int:
        return 1 if self.kind in ("G1", "Z1") else 2

    def is_product(self) -> bool:
        return self.kind in ("GP", "ZP")

    def sort_key(self):
        # matches the enumeration order: depth one by increasing d, depth two
        # lexicographic in (k1, d1, k2, d2), zeta generators by first index
        if self.kind == "G1":
            return (0, (self.args[1],))
        if self.kind in ("G2", "GP"):
            k1, k2, d1, d2 = self.args
            return (_KIND_ORDER[self.kind], (k1, d1, k2, d2))
        return (_KIND_ORDER[self.kind], self.args)

    def __str__(self) -> str:
        if self.kind == "G1":
            return "G(%d;%d)" % self.args
        if self.kind == "G2":
            return "G(%d,%d;%d,%d)" % self.args
        if self.kind == "GP":
            return "P(%d,%d;%d,%d)" % self.args
        if self.kind == "Z1":
            return "Z(%d)" % self.args
        if self.kind == "Z2":
            return "Z(%d,%d)" % self.args
        return "ZP(%d,%d)" % self.args


def G1(k: int, d: int) -> GenId:
    return GenId("G1", (k, d))


def G2(k1: int, k2: int, d1: int, d2: int) -> GenId:
    return GenId("G2", (k1, k2, d1, d2))


def GP(k1: int, k2: int, d1: int, d2: int) -> GenId:
    return GenId("GP", (k1, k2, d1, d2))


def Z1(k: int) -> GenId:
    return GenId("Z1", (k,))


def Z2(k1: int, k2: int) -> GenId:
    return GenId("Z2", (k1, k2))


def ZP(k1: int, k2: int) -> GenId:
    return GenId("ZP", (k1, k2))


def parse_genid(text: str) -> GenId:
    """Parse the text syntax G(k;d), G(k1,k2;d1,d2), P(...), Z(k), Z(k1,k2), ZP(k1,k2)."""
    s = text.strip()
    for head, kinds in (("ZP", {1: None, 2: "ZP"}), ("G", {1: "G1", 2: "G2"}), ("P", {1: None, 2: "GP"}), ("Z", {1: "Z1", 2: "Z2"})):
        if s.startswith(head + "("):
            if not s.endswith(")"):
                raise ValueError(f"unbalanced parentheses in generator {text!r}")
            body = s[len(head) + 1 : -1]
            groups = body.split(";")
            try:
                nums = [[int(x) for x in g.split(",")] for g in groups]
            except ValueError:
                raise ValueError(f"non-integer index in generator {text!r}") from None
            if head in ("Z", "ZP"):
                if len(nums) != 1:
                    raise ValueError(f"{head}-generators take no derivative indices: {text!r}")
                ks = nums[0]
                kind = kinds.get(len(ks))
                if kind is None:
                    raise ValueError(f"wrong index count in generator {text!r}")
                return GenId(kind, tuple(ks))
            if len(nums) != 2 or len(nums[0]) != len(nums[1]):
                raise ValueError(f"expected matching k- and d-groups in generator {text!r}")
            kind = kinds.get(len(nums[0]))
            if kind is None:
                raise ValueError(f"wrong index count in generator {text!r}")
            if kind == "G1":
                return GenId(kind, (nums[0][0], nums[1][0]))
            return GenId(kind, (nums[0][0], nums[0][1], nums[1][0], nums[1][1]))
    raise ValueError(f"unrecognized generator {text!r}")


class FormalElement:
    """A sparse rational linear combination of same-weight, same-space generators."""

    __slots__ = ("space", "weight", "_terms")

    def __init__(self, terms: Mapping[GenId, Fraction] | Iterable = (), space: str | None = None):
        items = terms.items() if hasattr(terms, "items") else terms
        acc: dict[GenId, Fraction] = {}
        for gen, c in items:
            c = Fraction(c)
            if not c:
                continue
            acc[gen] = acc[gen] + c if gen in acc else c
        acc = {g: c for g, c in acc.items() if c}
        weight = None
        for gen in acc:
            if space is None:
                space = gen.space
            elif gen.space != space:
                raise MixedSpaceError(f"{gen} does not live in the {space!r} space")
            if weight is None:
                weight = gen.weight
            elif gen.weight != weight:
                raise MixedWeightError(f"{gen} has weight {gen.weight}, expected {weight}")
        self.space = space
        self.weight = weight
        self._terms = acc

    @classmethod
    def _make(cls, space, weight, terms: dict) -> "FormalElement":
        el = object.__new__(cls)
        el.space = space
        el.weight = weight
        el._terms = terms
        return el

    @classmethod
    def single(cls, gen: GenId, coefficient=1) -> "FormalElement":
        c = Fraction(coefficient)
        if not c:
            return cls._make(gen.space, None, {})
        return cls._make(gen.space, gen.weight, {gen: c})

    @classmethod
    def zero(cls, space: str | None = None) -> "FormalElement":
        return cls._make(space, None, {})

    def terms(self) -> list[tuple[GenId, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, gen: GenId) -> Fraction:
        return self._terms.get(gen, Fraction(0))

    def generators(self) -> set[GenId]:
        return set(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _check_compatible(self, other: "FormalElement"):
        if self.space is not None and other.space is not None and self.space != other.space:
            raise MixedSpaceError("cannot combine elements of different spaces")
        if self.weight is not None and other.weight is not None and self.weight != other.weight:
            raise MixedWeightError(
                f"cannot combine weight {self.weight} with weight {other.weight}"
            )

    def __add__(self, other) -> "FormalElement":
        if not isinstance(other, FormalElement):
            return NotImplemented
        self._check_compatible(other)
        t = dict(self._terms)
        for g, c in other._terms.items():
            s = t.get(g)
            if s is None:
                t[g] = c
            else:
                s = s + c
                if s:
                    t[g] = s
                else:
                    del t[g]
        weight = (self.weight if self.weight is not None else other.weight) if t else None
        return FormalElement._make(self.space or other.space, weight, t)

    def __sub__(self, other) -> "FormalElement":
        return self.__add__(-other)

    def __neg__(self) -> "FormalElement":
        return FormalElement._make(self.space, self.weight, {g: -c for g, c in self._terms.items()})

    def __mul__(self, scalar) -> "FormalElement":
        c = Fraction(scalar)
        if not c:
            return FormalElement._make(self.space, None, {})
        return FormalElement._make(self.space, self.weight, {g: v * c for g, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalElement):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def to_text(self) -> str:
        """Render in the expression grammar, e.g. ``5/2*G(4;0) - P(2,2;0,0)``."""
        if not self._terms:
            return "0"
        parts = []
        for gen, c in self.terms():
            mag = abs(c)
            body = str(gen) if mag == 1 else f"{mag}*{gen}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FormalElement({self.to_text()})"
