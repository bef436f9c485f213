"""Realizations built from the Kronecker function.

The two-variable series with polar part -(1/X + 1/Y)/2 whose regular
coefficients are derivatives of Eisenstein series satisfies the three-term
Fay identity.  From its regular part ``b1`` a four-variable series ``b2``
is assembled through a fixed group-ring combination; the pair (b1, b2)
solves the generating-series form of the double-shuffle relations, so
coefficient extraction defines a linear map from the formal double
Eisenstein space into q-series, landing in the quasimodular ring.  Taking
constant terms gives the rational (Bernoulli-number) realization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .action import GroupRingElem, MATRICES, act_group_ring, wplus_check
from .eisenstein import derived_eisenstein, eisenstein_qexp
from .elements import EISENSTEIN, FormalElement, GenId
from .maps import map_partial
from .multipoly import (
    BiSeries,
    MultiPoly,
    RationalFunction4,
    X1,
    X2,
    Y1,
    Y2,
    divided_difference,
)
from .series import QSeries
from .spaces import enumerate_generators


@dataclass(frozen=True)
class KroneckerTable:
    """The regular part of the Kronecker function as a coefficient table.

    ``biseries`` stores plain monomial coefficients: the coefficient of
    X^r Y^s is |r-s|!/(r! s!) (q d/dq)^min(r,s) G_{|r-s|+1}, supported on
    odd r+s only.  :meth:`entry` returns the series-convention entry (the
    coefficient of X^r Y^s/s!), which is s! times the stored one.
    """

    biseries: BiSeries
    degree: int
    q_order: int

    def entry(self, r: int, s: int) -> QSeries:
        c = self.biseries.coefficient(r, s)
        if c is None:
            return QSeries.zero(self.q_order)
        return c * factorial(s)

    def raw_coefficient(self, r: int, s: int) -> QSeries:
        c = self.biseries.coefficient(r, s)
        return QSeries.zero(self.q_order) if c is None else c


def kronecker_b1(degree: int, q_order: int) -> KroneckerTable:
    """Tabulate the regular Kronecker coefficients up to a total degree."""
    terms = {}
    for r in range(degree + 1):
        for s in range(degree + 1 - r):
            if (r + s) % 2 == 0:
                continue
            k = abs(r - s) + 1
            if k % 2:
                continue  # odd-weight Eisenstein series vanish
            c = Fraction(factorial(abs(r - s)), factorial(r) * factorial(s))
            terms[(r, s)] = c * derived_eisenstein(k, min(r, s), q_order)
    return KroneckerTable(BiSeries(terms, degree), degree, q_order)


def _as_biseries(table) -> BiSeries:
    return table.biseries if isinstance(table, KroneckerTable) else table


def _lift_cap(b: BiSeries, extra: int) -> BiSeries:
    """Raise the exactness cap before multiplying by an exact polynomial of
    degree ``extra``; valid because the product's low coefficients only draw
    on stored ones."""
    return b if b.cap is None else BiSeries(b._t, b.cap + extra)


def _require_odd(b1: BiSeries):
    bad = [k for k in b1._t if (k[0] + k[1]) % 2 == 0]
    if bad:
        raise ValueError(f"depth-one table must be odd; even-degree entries at {sorted(bad)[:3]}")


def pair_product(b1, degree: int | None = None) -> MultiPoly:
    """b1(X1; Y1) * b1(X2; Y2) as a four-variable series."""
    b1 = _as_biseries(b1)
    cap = b1.cap if degree is None else degree
    return b1.substitute(X1, Y1, cap) * b1.substitute(X2, Y2, cap)


_GR = GroupRingElem.matrix
_STAR_COMBO = 5 - 3 * _GR(MATRICES["U"]) + _GR(MATRICES["U"] * MATRICES["epsilon"])
_SHUFFLE_COMBO = _GR(MATRICES["T"].inverse()) * (5 - 3 * _GR(MATRICES["epsilon"]) + _GR(MATRICES["U"]))
_ONE_PLUS_TINV = 1 + _GR(MATRICES["T"].inverse())


def _clip_order(b: BiSeries, q_order: int) -> BiSeries:
    return b.map_coefficients(
        lambda c: c.truncate(q_order) if isinstance(c, QSeries) and c.order > q_order else c
    )


def beta_combination(b1, degree: int, q_order: int) -> MultiPoly:
    """The correction series built from both divided differences of b1:

        (1/4) R*  | (5 - 3U + U epsilon)
      + (1/4) Rsh | (T^-1 (5 - 3 epsilon + U)).
    """
    b1 = _clip_order(_as_biseries(b1), q_order)
    quarter = Fraction(1, 4)
    rstar = divided_difference(b1, "star").truncate(degree)
    rshuffle = divided_difference(b1, "shuffle").truncate(degree)
    return (
        act_group_ring(_STAR_COMBO, rstar) * quarter
        + act_group_ring(_SHUFFLE_COMBO, rshuffle) * quarter
    )


def build_b2(b1, degree: int, q_order: int) -> MultiPoly:
    """Solve the double-shuffle system in depth two from an odd depth-one table.

    Returns (1/3) P | (1 + T^-1) - (1/3) beta with P = b1(X1;Y1) b1(X2;Y2);
    the result satisfies  P = b2|(1+epsilon) + R*  =  b2|T(1+epsilon) + Rsh
    coefficientwise below the truncation.  The input table must carry
    entries one degree beyond the requested output degree, because divided
    differences lower the exact degree by one.
    """
    b1 = _clip_order(_as_biseries(b1), q_order)
    _require_odd(b1)
    if b1.cap is not None and b1.cap < degree + 1:
        raise ValueError(f"need depth-one entries to degree {degree + 1}, have {b1.cap}")
    third = Fraction(1, 3)
    p = pair_product(b1, degree)
    return act_group_ring(_ONE_PLUS_TINV, p) * third - beta_combination(b1, degree, q_order) * third


# -- the Fay identity --------------------------------------------------------

def fay_check(include_pole: bool, regular, degree: int, q_order: int) -> bool:
    """Verify the three-term Fay identity for -(1/X+1/Y)/2 * [pole] + regular.

    The three products are summed after clearing the common denominator
    X1 X2 (X1-X2) Y1 Y2 (Y1+Y2); with C(X;Y) := X Y f(X;Y) the cleared sum is

        C(X1,Y1) C(X2,Y2) (X1-X2)(Y1+Y2)
      - C(X1-X2,-Y2) C(X1,Y1+Y2) X2 Y1
      + C(-X2,-(Y1+Y2)) C(X1-X2,Y1) X1 Y2

    which must vanish identically up to total degree ``degree`` + 2 and
    q-order ``q_order``.
    """
    regular = _as_biseries(regular) if regular is not None else BiSeries.zero(degree)
    cap = degree if regular.cap is None else min(regular.cap, degree)

    def to_series(c):
        if isinstance(c, QSeries):
            return c.truncate(min(c.order, q_order))
        return QSeries.constant(c, q_order)

    xy = BiSeries.monomial(1, 1, Fraction(1))
    cleared = (xy * _lift_cap(regular.truncate(cap), 2)).map_coefficients(to_series)
    if include_pole:
        half = QSeries.constant(Fraction(-1, 2), q_order)
        cleared = cleared + BiSeries({(1, 0): half, (0, 1): half}, cap + 2)

    x1mx2 = (1, -1, 0, 0)
    y1py2 = (0, 0, 1, 1)
    neg = lambda f: tuple(-v for v in f)

    t1 = (
        cleared.substitute(X1, Y1)
        * cleared.substitute(X2, Y2)
        * (MultiPoly.from_form(x1mx2) * MultiPoly.from_form(y1py2))
    )
    t2 = (
        cleared.substitute(x1mx2, neg(Y2))
        * cleared.substitute(X1, y1py2)
        * (MultiPoly.from_form(X2) * MultiPoly.from_form(Y1))
    )
    t3 = (
        cleared.substitute(neg(X2), neg(y1py2))
        * cleared.substitute(x1mx2, Y1)
        * (MultiPoly.from_form(X1) * MultiPoly.from_form(Y2))
    )
    return not (t1 - t2 + t3)


def polar_product_candidate(q_order: int) -> RationalFunction4:
    """(1/X1 + 1/Y1)(1/X2 + 1/Y2) over the denominator X1 Y1 X2 Y2."""
    one = QSeries.constant(1, q_order)
    num = (
        (MultiPoly.from_form(X1) + MultiPoly.from_form(Y1))
        * (MultiPoly.from_form(X2) + MultiPoly.from_form(Y2))
    ).map_coefficients(lambda c: c * one)
    return RationalFunction4(num, {0: 1, 1: 1, 2: 1, 3: 1})


def kronecker_wplus_candidate(b1, degree: int, q_order: int) -> RationalFunction4:
    """The full two-point Kronecker product, cleared over X1 Y1 X2 Y2."""
    b1 = _as_biseries(b1)
    half = Fraction(-1, 2)
    xy = BiSeries.monomial(1, 1, Fraction(1))
    cleared = xy * _lift_cap(b1, 2) + BiSeries({(1, 0): half, (0, 1): half})
    cleared = cleared.map_coefficients(
        lambda c: c if isinstance(c, QSeries) else QSeries.constant(c, q_order)
    )
    num = cleared.substitute(X1, Y1) * cleared.substitute(X2, Y2)
    return RationalFunction4(num, {0: 1, 1: 1, 2: 1, 3: 1})


def polar_cross_terms(b1, q_order: int) -> RationalFunction4:
    """-(1/2)[(1/X2 + 1/Y2) b1(X1;Y1) + (1/X1 + 1/Y1) b1(X2;Y2)]."""
    b1 = _as_biseries(b1)
    half = Fraction(-1, 2)
    b = _lift_cap(b1, 3).map_coefficients(
        lambda c: c if isinstance(c, QSeries) else QSeries.constant(c, q_order)
    )
    num = (
        (MultiPoly.from_form(X2) + MultiPoly.from_form(Y2))
        * MultiPoly.from_form(X1)
        * MultiPoly.from_form(Y1)
        * b.substitute(X1, Y1)
        + (MultiPoly.from_form(X1) + MultiPoly.from_form(Y1))
        * MultiPoly.from_form(X2)
        * MultiPoly.from_form(Y2)
        * b.substitute(X2, Y2)
    ) * half
    return RationalFunction4(num, {0: 1, 1: 1, 2: 1, 3: 1})


# -- coefficient extraction ---------------------------------------------------

@dataclass(frozen=True)
class RealizationTable:
    """Values of one weight's generators under a realization."""

    weight: int
    q_order: int
    values: dict[GenId, QSeries]
    provenance: str

    def value(self, gen: GenId) -> QSeries:
        return self.values[gen]

    def to_json_list(self) -> list[dict]:
        return [
            {"gen": str(g), "value": s.to_text(), "provenance": self.provenance}
            for g, s in sorted(self.values.items(), key=lambda t: t[0].sort_key())
        ]


class KroneckerRealization:
    """Extraction context: the depth-one table and depth-two series at one size.

    Serves every weight up to ``max_weight`` at one q-order.  Values follow
    the generating-series conventions: depth-one values are d! times the
    stored coefficient, depth-two values are d1! d2! times the coefficient
    of X1^(k1-1) X2^(k2-1) Y1^d1 Y2^d2, and product generators map to
    products of depth-one values.
    """

    def __init__(self, max_weight: int, q_order: int):
        if max_weight < 2:
            max_weight = 2
        self.max_weight = max_weight
        self.q_order = q_order
        self.table = kronecker_b1(max(max_weight - 1, 1), q_order)
        self._b2: MultiPoly | None = None
        self._zero = QSeries.zero(q_order)

    @property
    def b2(self) -> MultiPoly:
        if self._b2 is None:
            self._b2 = build_b2(self.table, self.max_weight - 2, self.q_order)
        return self._b2

    def depth_one(self, k: int, d: int) -> QSeries:
        if k + d > self.max_weight:
            raise ValueError(f"weight {k + d} exceeds this context's maximum {self.max_weight}")
        return self.table.entry(k - 1, d)

    def value(self, gen: GenId) -> QSeries:
        if gen.space != EISENSTEIN:
            raise ValueError("the Kronecker realization is defined on the Eisenstein space")
        if gen.kind == "G1":
            return self.depth_one(*gen.args)
        k1, k2, d1, d2 = gen.args
        if gen.kind == "GP":
            return self.depth_one(k1, d1) * self.depth_one(k2, d2)
        if gen.weight > self.max_weight:
            raise ValueError(f"weight {gen.weight} exceeds this context's maximum {self.max_weight}")
        c = self.b2.coefficient((k1 - 1, k2 - 1, d1, d2))
        if c is None:
            return self._zero
        return c * (factorial(d1) * factorial(d2))

    def element_value(self, element: FormalElement) -> QSeries:
        out = self._zero
        for gen, c in element._terms.items():
            out = out + self.value(gen) * c
        return out

    def realization_table(self, weight: int) -> RealizationTable:
        values = {g: self.value(g) for g in enumerate_generators(EISENSTEIN, weight)}
        return RealizationTable(weight, self.q_order, values, "series-extraction")


#: Small requests still build at the scale the identity catalog needs, so
#: one cached context serves them all.
DEFAULT_MAX_WEIGHT = 12


@lru_cache(maxsize=8)
def realization(max_weight: int, q_order: int) -> KroneckerRealization:
    return KroneckerRealization(max_weight, q_order)


def _context_for(weight: int, q_order: int) -> KroneckerRealization:
    return realization(max(weight, DEFAULT_MAX_WEIGHT), q_order)


def realize_kronecker(gen: GenId, q_order: int) -> QSeries:
    """The q-series value of one generator under the Kronecker realization."""
    return _context_for(gen.weight, q_order).value(gen)


def realize_element(element: FormalElement, q_order: int) -> QSeries:
    """Linear extension of the Kronecker realization to an element."""
    if not element:
        return QSeries.zero(q_order)
    return _context_for(element.weight, q_order).element_value(element)


def realize_bernoulli(gen: GenId) -> Fraction:
    """The constant term of the Kronecker value: the rational realization."""
    return _context_for(gen.weight, 0).value(gen).coefficient(0)


def closed_form_depth2(k1: int, k2: int, q_order: int) -> QSeries:
    """The quasimodular closed form of the depth-two value at (d1, d2) = (0, 0).

    For k1 + k2 >= 4 even this is the explicit combination of products
    G_{l1} G_{l2}, the single series G_{k1+k2}, and first derivatives; the
    coefficients of the derivative terms involve 1/(k-2), so the weight-2
    case (k1 = k2 = 1) is taken from the harmonic-product row instead,
    where it equals -G_2/2.
    """
    k = k1 + k2
    if k % 2:
        raise ValueError("the closed form applies to even total weight only")
    if min(k1, k2) < 1:
        raise ValueError("row indices must be >= 1")
    if k == 2:
        return eisenstein_qexp(2, q_order) * Fraction(-1, 2)

    def gprime(m: int) -> QSeries:
        if m == 1:
            return eisenstein_qexp(2, q_order)
        return derived_eisenstein(m, 1, q_order)

    sign1 = (-1) ** k1
    out = eisenstein_qexp(k1, q_order) * eisenstein_qexp(k2, q_order) * Fraction(1, 3)
    for l1 in range(2, k - 1, 2):
        l2 = k - l1
        c = Fraction(sign1, 3) * comb(l2 - 1, k1 - 1)
        if c:
            out = out + eisenstein_qexp(l1, q_order) * eisenstein_qexp(l2, q_order) * c
    c = Fraction(5 + 3 * sign1 * comb(k - 1, k1 - 1) - sign1 * comb(k - 1, k1), 12)
    out = out - eisenstein_qexp(k, q_order) * c
    if k2 == 1:
        out = out - gprime(k1 - 1) * Fraction(5, 12 * (k1 - 1))
    if k1 == 1:
        out = out + gprime(k2 - 1) * Fraction(1, 4 * (k2 - 1))
    out = out + gprime(k - 2) * (Fraction((-1) ** k2, 12 * (k - 2)) * comb(k - 2, k1 - 1))
    return out


def check_derivation_diagram(weight: int, q_order: int, context: KroneckerRealization | None = None) -> bool:
    """q d/dq of every realized weight generator equals the realized image
    of the weight-raising map, compared to order q_order - 1."""
    if q_order < 1:
        raise ValueError("the diagram check needs q-order >= 1")
    ctx = context if context is not None else _context_for(weight + 2, q_order)
    if ctx.max_weight < weight + 2 or ctx.q_order < q_order:
        raise ValueError("context is too small for this diagram check")
    n = q_order - 1
    for gen in enumerate_generators(EISENSTEIN, weight):
        lhs = ctx.value(gen).truncate(q_order).qderive()
        rhs = ctx.element_value(map_partial(FormalElement.single(gen)))
        if lhs.truncate(n) != rhs.truncate(min(n, rhs.order)):
            return False
    return True


def kronecker_wplus_check(degree: int, q_order: int) -> bool:
    """Membership of the two-point Kronecker product in the bi-period space."""
    b1 = kronecker_b1(degree + 2, q_order)
    candidate = kronecker_wplus_candidate(b1, degree, q_order)
    return wplus_check(candidate, MultiPoly.zero(degree), degree, q_order)
