"""Truncated polynomial series in X1, X2, Y1, Y2 and their polar companions.

Three carriers live here:

* :class:`BiSeries` -- two-variable truncated series t(X; Y), the shape of
  depth-one generating series.
* :class:`MultiPoly` -- four-variable truncated series, the carrier of
  depth-two generating series and of the matrix action.
* :class:`RationalFunction4` -- a MultiPoly numerator over a denominator
  that is a product of forms from the fixed set ``FORMS``; division never
  happens on series, equalities are checked after cross-multiplication.

Coefficients are generic: exact Fractions, QSeries, or any value supporting
addition, negation, multiplication by scalars and truthiness (used to drop
zero terms).  Total degree is capped by ``max_total_degree``; a cap of
``None`` marks an exact polynomial that never truncates.  Binary operations
keep the smaller cap, so stored coefficients are always exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Literal

LinForm = tuple[int, int, int, int]

X1: LinForm = (1, 0, 0, 0)
X2: LinForm = (0, 1, 0, 0)
Y1: LinForm = (0, 0, 1, 0)
Y2: LinForm = (0, 0, 0, 1)
IDENTITY_IMAGES: tuple[LinForm, LinForm, LinForm, LinForm] = (X1, X2, Y1, Y2)

#: The fixed linear-form set allowed in denominators, in a stable order.
FORMS: tuple[LinForm, ...] = (
    X1,
    X2,
    Y1,
    Y2,
    (1, -1, 0, 0),  # X1 - X2
    (1, 1, 0, 0),   # X1 + X2
    (0, 0, 1, -1),  # Y1 - Y2
    (0, 0, 1, 1),   # Y1 + Y2
)

FORM_NAMES = ("X1", "X2", "Y1", "Y2", "X1-X2", "X1+X2", "Y1-Y2", "Y1+Y2")

_FORM_INDEX = {f: i for i, f in enumerate(FORMS)}


class UnsupportedFormError(ValueError):
    """A substituted denominator form left the fixed linear-form set."""


def form_neg(f: LinForm) -> LinForm:
    return (-f[0], -f[1], -f[2], -f[3])


def compose_form(f: LinForm, images: tuple[LinForm, LinForm, LinForm, LinForm]) -> LinForm:
    """The image of a linear form when each variable is replaced by a form."""
    out = [0, 0, 0, 0]
    for c, img in zip(f, images):
        if c:
            for i in range(4):
                out[i] += c * img[i]
    return tuple(out)


def match_signed_form(f: LinForm) -> tuple[int, int]:
    """Return (index into FORMS, sign) with f == sign * FORMS[index].

    Raises :class:`UnsupportedFormError` when f is not a signed fixed form.
    """
    if f in _FORM_INDEX:
        return _FORM_INDEX[f], 1
    g = form_neg(f)
    if g in _FORM_INDEX:
        return _FORM_INDEX[g], -1
    raise UnsupportedFormError(f"linear form {f} is outside the fixed denominator set")


@lru_cache(maxsize=None)
def _form_power(f: LinForm, e: int) -> tuple[tuple[tuple[int, int, int, int], int], ...]:
    """Expansion of f**e as ((exponent-vector, integer coefficient), ...)."""
    if e == 0:
        return (((0, 0, 0, 0), 1),)
    prev = _form_power(f, e - 1)
    acc: dict[tuple[int, int, int, int], int] = {}
    for exps, c in prev:
        for i, fi in enumerate(f):
            if fi:
                key = tuple(v + (1 if j == i else 0) for j, v in enumerate(exps))
                acc[key] = acc.get(key, 0) + c * fi
    return tuple(sorted((k, v) for k, v in acc.items() if v))


@lru_cache(maxsize=None)
def _monomial_expansion(
    images: tuple[LinForm, LinForm, LinForm, LinForm],
    exps: tuple[int, int, int, int],
    cap: int | None,
) -> tuple[tuple[tuple[int, int, int, int], int], ...]:
    """Expansion of the monomial with the given exponents under a substitution."""
    acc: dict[tuple[int, int, int, int], int] = {(0, 0, 0, 0): 1}
    for img, e in zip(images, exps):
        if e == 0:
            continue
        factor = _form_power(img, e)
        nxt: dict[tuple[int, int, int, int], int] = {}
        for k1, c1 in acc.items():
            for k2, c2 in factor:
                key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3])
                if cap is not None and sum(key) > cap:
                    continue
                nxt[key] = nxt.get(key, 0) + c1 * c2
        acc = nxt
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def _min_cap(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class MultiPoly:
    """Truncated series in X1, X2, Y1, Y2 with generic coefficients."""

    __slots__ = ("_t", "cap")

    def __init__(self, terms=(), cap: int | None = None):
        t = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exps, c in items:
            exps = tuple(exps)
            if cap is not None and sum(exps) > cap:
                continue
            if c:
                t[exps] = t[exps] + c if exps in t else c
        self._t = {k: v for k, v in t.items() if v}
        self.cap = cap

    @classmethod
    def zero(cls, cap: int | None = None) -> "MultiPoly":
        return cls((), cap)

    @classmethod
    def monomial(cls, exps, coefficient, cap: int | None = None) -> "MultiPoly":
        return cls([(tuple(exps), coefficient)], cap)

    @classmethod
    def from_form(cls, f: LinForm) -> "MultiPoly":
        """A linear form as an exact polynomial with Fraction coefficients."""
        terms = []
        for i, c in enumerate(f):
            if c:
                exps = tuple(1 if j == i else 0 for j in range(4))
                terms.append((exps, Fraction(c)))
        return cls(terms, None)

    def terms(self):
        """Deterministically ordered (exponents, coefficient) pairs."""
        return sorted(self._t.items())

    def coefficient(self, exps):
        return self._t.get(tuple(exps))

    def degree(self) -> int:
        return max((sum(k) for k in self._t), default=0)

    def __bool__(self) -> bool:
        return bool(self._t)

    def truncate(self, cap: int | None) -> "MultiPoly":
        if cap is None or (self.cap is not None and cap >= self.cap):
            return self
        return MultiPoly({k: v for k, v in self._t.items() if sum(k) <= cap}, cap)

    def map_coefficients(self, fn: Callable) -> "MultiPoly":
        return MultiPoly({k: fn(v) for k, v in self._t.items()}, self.cap)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({k: -v for k, v in self._t.items()}, self.cap)

    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        cap = _min_cap(self.cap, other.cap)
        a = self.truncate(cap)
        b = other.truncate(cap)
        t = dict(a._t)
        for k, v in b._t.items():
            t[k] = t[k] + v if k in t else v
        return MultiPoly(t, cap)

    def __sub__(self, other) -> "MultiPoly":
        return self.__add__(-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            cap = _min_cap(self.cap, other.cap)
            t: dict = {}
            for k1, c1 in self._t.items():
                d1 = sum(k1)
                for k2, c2 in other._t.items():
                    if cap is not None and d1 + sum(k2) > cap:
                        continue
                    key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3])
                    prod = c1 * c2
                    t[key] = t[key] + prod if key in t else prod
            return MultiPoly(t, cap)
        # scalar
        if not other:
            return MultiPoly.zero(self.cap)
        return MultiPoly({k: v * other for k, v in self._t.items()}, self.cap)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        cap = _min_cap(self.cap, other.cap)
        a = self.truncate(cap)._t
        b = other.truncate(cap)._t
        if set(a) != set(b):
            return False
        return all(a[k] == b[k] for k in a)

    __hash__ = None

    def substitute(self, images: tuple[LinForm, LinForm, LinForm, LinForm]) -> "MultiPoly":
        """Replace each variable by a linear form, exactly below the cap."""
        images = tuple(tuple(f) for f in images)
        if images == IDENTITY_IMAGES:
            return self
        t: dict = {}
        for exps, c in self._t.items():
            for key, ic in _monomial_expansion(images, exps, self.cap):
                scaled = c * ic
                t[key] = t[key] + scaled if key in t else scaled
        return MultiPoly(t, self.cap)

    def partial(self, var: int) -> "MultiPoly":
        """Formal partial derivative with respect to variable index 0..3."""
        t = {}
        for exps, c in self._t.items():
            e = exps[var]
            if e:
                key = tuple(v - (1 if i == var else 0) for i, v in enumerate(exps))
                t[key] = t[key] + c * e if key in t else c * e
        return MultiPoly(t, None if self.cap is None else self.cap - 1)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v!r}" for k, v in list(self.terms())[:4])
        more = "" if len(self._t) <= 4 else f", ... ({len(self._t)} terms)"
        return f"MultiPoly({{{inner}{more}}}, cap={self.cap})"


class BiSeries:
    """Truncated series in two variables (X; Y) with generic coefficients."""

    __slots__ = ("_t", "cap")

    def __init__(self, terms=(), cap: int | None = None):
        t = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exps, c in items:
            exps = tuple(exps)
            if cap is not None and exps[0] + exps[1] > cap:
                continue
            if c:
                t[exps] = t[exps] + c if exps in t else c
        self._t = {k: v for k, v in t.items() if v}
        self.cap = cap

    @classmethod
    def zero(cls, cap: int | None = None) -> "BiSeries":
        return cls((), cap)

    @classmethod
    def monomial(cls, r: int, s: int, coefficient, cap: int | None = None) -> "BiSeries":
        return cls([((r, s), coefficient)], cap)

    def terms(self):
        return sorted(self._t.items())

    def coefficient(self, r: int, s: int):
        return self._t.get((r, s))

    def __bool__(self) -> bool:
        return bool(self._t)

    def truncate(self, cap: int | None) -> "BiSeries":
        if cap is None or (self.cap is not None and cap >= self.cap):
            return self
        return BiSeries({k: v for k, v in self._t.items() if k[0] + k[1] <= cap}, cap)

    def map_coefficients(self, fn: Callable) -> "BiSeries":
        return BiSeries({k: fn(v) for k, v in self._t.items()}, self.cap)

    def __neg__(self) -> "BiSeries":
        return BiSeries({k: -v for k, v in self._t.items()}, self.cap)

    def __add__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            return NotImplemented
        cap = _min_cap(self.cap, other.cap)
        t = dict(self.truncate(cap)._t)
        for k, v in other.truncate(cap)._t.items():
            t[k] = t[k] + v if k in t else v
        return BiSeries(t, cap)

    def __sub__(self, other) -> "BiSeries":
        return self.__add__(-other)

    def __mul__(self, other) -> "BiSeries":
        if isinstance(other, BiSeries):
            cap = _min_cap(self.cap, other.cap)
            t: dict = {}
            for (r1, s1), c1 in self._t.items():
                for (r2, s2), c2 in other._t.items():
                    if cap is not None and r1 + s1 + r2 + s2 > cap:
                        continue
                    key = (r1 + r2, s1 + s2)
                    prod = c1 * c2
                    t[key] = t[key] + prod if key in t else prod
            return BiSeries(t, cap)
        if not other:
            return BiSeries.zero(self.cap)
        return BiSeries({k: v * other for k, v in self._t.items()}, self.cap)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        cap = _min_cap(self.cap, other.cap)
        a = self.truncate(cap)._t
        b = other.truncate(cap)._t
        return set(a) == set(b) and all(a[k] == b[k] for k in a)

    __hash__ = None

    def partial_x(self) -> "BiSeries":
        t = {}
        for (r, s), c in self._t.items():
            if r:
                t[(r - 1, s)] = c * r
        return BiSeries(t, None if self.cap is None else self.cap - 1)

    def partial_y(self) -> "BiSeries":
        t = {}
        for (r, s), c in self._t.items():
            if s:
                t[(r, s - 1)] = c * s
        return BiSeries(t, None if self.cap is None else self.cap - 1)

    def substitute(self, image_x: LinForm, image_y: LinForm, cap: int | None = None) -> MultiPoly:
        """Evaluate t(image_x; image_y) as a four-variable polynomial."""
        if cap is None:
            cap = self.cap
        else:
            cap = _min_cap(cap, self.cap)
        image_x = tuple(image_x)
        image_y = tuple(image_y)
        t: dict = {}
        for (r, s), c in self._t.items():
            for key, ic in _monomial_expansion((image_x, image_y, (0, 0, 0, 0), (0, 0, 0, 0)), (r, s, 0, 0), cap):
                scaled = c * ic
                t[key] = t[key] + scaled if key in t else scaled
        return MultiPoly(t, cap)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v!r}" for k, v in list(self.terms())[:4])
        more = "" if len(self._t) <= 4 else f", ... ({len(self._t)} terms)"
        return f"BiSeries({{{inner}{more}}}, cap={self.cap})"


def divided_difference(t: BiSeries, mode: Literal["star", "shuffle"]) -> MultiPoly:
    """The two divided-difference images of a depth-one series.

    ``star`` returns (t(X1; Y1+Y2) - t(X2; Y1+Y2)) / (X1 - X2) and
    ``shuffle`` returns (t(X1+X2; Y1) - t(X1+X2; Y2)) / (Y1 - Y2), both
    computed by the telescoping identity
    (u^a - v^a)/(u - v) = sum_i u^i v^(a-1-i), so the result is an exact
    polynomial division with no series inversion.  The output is exact one
    degree below the input's cap.
    """
    cap = None if t.cap is None else t.cap - 1
    out: dict = {}

    def bump(key, value):
        out[key] = out[key] + value if key in out else value

    if mode == "star":
        for (a, s), c in t._t.items():
            if a == 0:
                continue
            ypows = _form_power((0, 0, 1, 1), s)  # (Y1+Y2)^s
            for i in range(a):
                for yk, yc in ypows:
                    key = (i, a - 1 - i, yk[2], yk[3])
                    if cap is not None and sum(key) > cap:
                        continue
                    bump(key, c * yc)
    elif mode == "shuffle":
        for (a, s), c in t._t.items():
            if s == 0:
                continue
            xpows = _form_power((1, 1, 0, 0), a)  # (X1+X2)^a
            for j in range(s):
                for xk, xc in xpows:
                    key = (xk[0], xk[1], j, s - 1 - j)
                    if cap is not None and sum(key) > cap:
                        continue
                    bump(key, c * xc)
    else:
        raise ValueError(f"unknown divided-difference mode {mode!r}")
    return MultiPoly(out, cap)


def divide_exact_linear(p: MultiPoly, f: LinForm) -> MultiPoly | None:
    """Exact quotient p / f for a fixed-set linear form, or None.

    Only forms with one or two unit-coefficient variables occur in the fixed
    set.  Division proceeds top-down in the leading variable; when ``p`` is
    the truncation of a divisible series the quotient is exact one degree
    below the cap (terms the truncation removed sit strictly above it).
    """
    vars_ = [(i, c) for i, c in enumerate(f) if c]
    if not vars_ or any(abs(c) != 1 for _, c in vars_) or len(vars_) > 2:
        raise UnsupportedFormError(f"cannot divide by form {f}")
    cap = None if p.cap is None else p.cap - 1
    if not p:
        return MultiPoly.zero(cap)

    u, a = vars_[0]
    if len(vars_) == 1:
        t = {}
        for exps, c in p._t.items():
            if exps[u] == 0:
                return None
            key = tuple(v - (1 if i == u else 0) for i, v in enumerate(exps))
            t[key] = c * a  # 1/a == a for a unit
        return MultiPoly(t, cap)

    v, b = vars_[1]
    # layers[j] maps the monomial with the u-exponent removed to its coefficient
    layers: dict[int, dict] = {}
    for exps, c in p._t.items():
        rest = tuple(0 if i == u else e for i, e in enumerate(exps))
        layers.setdefault(exps[u], {})[rest] = c
    top = max(layers)
    q_layer: dict = {}
    quotient: dict = {}
    for j in range(top, 0, -1):
        cur = dict(layers.get(j, {}))
        for rest, c in q_layer.items():  # subtract b * v * q_j
            key = tuple(e + (1 if i == v else 0) for i, e in enumerate(rest))
            nv = cur.get(key)
            cur[key] = (nv - c * b) if nv is not None else -(c * b)
        q_layer = {rest: c * a for rest, c in cur.items() if c}  # q_{j-1} = cur / a
        for rest, c in q_layer.items():
            key = tuple(e + (j - 1 if i == u else 0) for i, e in enumerate(rest))
            quotient[key] = c
    # remainder check at u-degree 0
    rem = dict(layers.get(0, {}))
    for rest, c in q_layer.items():
        key = tuple(e + (1 if i == v else 0) for i, e in enumerate(rest))
        nv = rem.get(key)
        rem[key] = (nv - c * b) if nv is not None else -(c * b)
    if any(rem.values()):
        return None
    return MultiPoly(quotient, cap)


class RationalFunction4:
    """A MultiPoly numerator over a product of fixed linear forms.

    ``den`` maps an index into :data:`FORMS` to a positive exponent.  Sums
    cross-multiply to the exponentwise maximum of the denominators, products
    add exponents, and equality means the difference has zero numerator (up
    to the tracked truncation).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: dict[int, int] | None = None):
        self.num = num
        self.den = {} if not num else {i: e for i, e in (den or {}).items() if e}
        if any(e < 0 for e in self.den.values()):
            raise ValueError("denominator exponents must be non-negative")

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "RationalFunction4":
        return cls(p, {})

    def den_degree(self) -> int:
        return sum(self.den.values())

    def den_poly(self) -> MultiPoly:
        out = MultiPoly.monomial((0, 0, 0, 0), Fraction(1))
        for i, e in sorted(self.den.items()):
            form = MultiPoly.from_form(FORMS[i])
            for _ in range(e):
                out = out * form
        return out

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __neg__(self) -> "RationalFunction4":
        return RationalFunction4(-self.num, dict(self.den))

    def _scaled_to(self, den: dict[int, int]) -> MultiPoly:
        """Numerator after raising this fraction to the given denominator."""
        num = self.num
        for i, e in sorted(den.items()):
            extra = e - self.den.get(i, 0)
            if extra < 0:
                raise ValueError("target denominator does not dominate")
            if extra:
                form = MultiPoly.from_form(FORMS[i])
                for _ in range(extra):
                    num = num * form
        return num

    def __add__(self, other) -> "RationalFunction4":
        if isinstance(other, MultiPoly):
            other = RationalFunction4.from_poly(other)
        if not isinstance(other, RationalFunction4):
            return NotImplemented
        den = dict(self.den)
        for i, e in other.den.items():
            den[i] = max(den.get(i, 0), e)
        return RationalFunction4(self._scaled_to(den) + other._scaled_to(den), den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction4":
        return self.__add__(-other if isinstance(other, RationalFunction4) else -RationalFunction4.from_poly(other))

    def __mul__(self, other) -> "RationalFunction4":
        if isinstance(other, RationalFunction4):
            den = dict(self.den)
            for i, e in other.den.items():
                den[i] = den.get(i, 0) + e
            return RationalFunction4(self.num * other.num, den)
        return RationalFunction4(self.num * other, dict(self.den))  # scalar or MultiPoly

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            other = RationalFunction4.from_poly(other)
        if not isinstance(other, RationalFunction4):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def normalize(self) -> "RationalFunction4":
        """Cancel denominator forms dividing the numerator exactly.

        A zero numerator normalizes to denominator 1.  Cancellation on a
        truncated numerator lowers its cap by one per cancelled factor.
        """
        if not self.num:
            return RationalFunction4(self.num, {})
        num = self.num
        den = dict(self.den)
        for i in sorted(den):
            while den.get(i, 0) > 0:
                q = divide_exact_linear(num, FORMS[i])
                if q is None:
                    break
                num = q
                den[i] -= 1
        return RationalFunction4(num, den)

    def __repr__(self) -> str:
        den = " * ".join(
            FORM_NAMES[i] + (f"^{e}" if e > 1 else "") for i, e in sorted(self.den.items())
        )
        return f"RationalFunction4({self.num!r} / {den or '1'})"
