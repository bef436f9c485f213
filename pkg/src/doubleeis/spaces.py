"""Presentations of the formal double Eisenstein and double zeta spaces.

A weight is presented by its ordered generator list together with the row
reduced form of the double-shuffle relation rows; dimensions, membership
tests and canonical normal forms all read off the reduced system.  Built
systems are immutable and memoized in-process; they can additionally be
cached on disk as JSON keyed by (space, weight).
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from fractions import Fraction
from math import comb, factorial
from pathlib import Path

from .elements import EISENSTEIN, ZETA, FormalElement, G1, G2, GP, GenId, Z1, Z2, ZP

CACHE_ENV_VAR = "DOUBLEEIS_CACHE_DIR"
CACHE_FORMAT_VERSION = 1

_SPACE_NAMES = {EISENSTEIN: EISENSTEIN, ZETA: ZETA, "e": EISENSTEIN, "z": ZETA}


def _space(space: str) -> str:
    try:
        return _SPACE_NAMES[space]
    except KeyError:
        raise ValueError(f"unknown space {space!r}; use 'E' or 'Z'") from None


def enumerate_generators(space: str, weight: int) -> list[GenId]:
    """All weight-homogeneous generators in the deterministic basis order.

    Eisenstein: depth-one G(k;d) by increasing d, then depth-two G ordered
    lexicographically by (k1, d1, k2, d2), then the P generators in the same
    order.  Zeta: Z(K), then Z(k1,k2) by k1, then ZP(k1,k2) by k1.
    """
    space = _space(space)
    if weight < 1:
        raise ValueError("weight must be >= 1")
    if space == ZETA:
        gens = [Z1(weight)]
        gens += [Z2(k1, weight - k1) for k1 in range(1, weight)]
        gens += [ZP(k1, weight - k1) for k1 in range(1, weight)]
        return gens
    gens = [G1(weight - d, d) for d in range(weight)]
    depth2 = list(_depth2_indices(weight))
    gens += [G2(k1, k2, d1, d2) for (k1, k2, d1, d2) in depth2]
    gens += [GP(k1, k2, d1, d2) for (k1, k2, d1, d2) in depth2]
    return gens


def _depth2_indices(weight: int):
    """(k1, k2, d1, d2) of one weight, lexicographic in (k1, d1, k2, d2)."""
    for k1 in range(1, weight):
        for d1 in range(weight - k1):
            for k2 in range(1, weight - k1 - d1 + 1):
                d2 = weight - k1 - d1 - k2
                yield (k1, k2, d1, d2)


def stuffle_row(k1: int, k2: int, d1: int, d2: int) -> FormalElement:
    """P(k1,k2;d1,d2) minus its harmonic-product expansion; zero in the space."""
    return FormalElement(
        [
            (GP(k1, k2, d1, d2), 1),
            (G2(k1, k2, d1, d2), -1),
            (G2(k2, k1, d2, d1), -1),
            (G1(k1 + k2, d1 + d2), -1),
        ]
    )


def shuffle_row(k1: int, k2: int, d1: int, d2: int) -> FormalElement:
    """P(k1,k2;d1,d2) minus its integral-shuffle expansion; zero in the space."""
    terms: list[tuple[GenId, Fraction]] = [(GP(k1, k2, d1, d2), Fraction(1))]
    K, D = k1 + k2, d1 + d2
    for l1 in range(1, K):
        l2 = K - l1
        for e1 in range(D + 1):
            e2 = D - e1
            c = Fraction(0)
            if e1 <= d1:
                c += comb(l1 - 1, k1 - 1) * comb(d1, e1) * (-1) ** (d1 - e1)
            if e1 <= d2:
                c += comb(l1 - 1, k2 - 1) * comb(d2, e1) * (-1) ** (d2 - e1)
            if c:
                terms.append((G2(l1, l2, e1, e2), -c))
    tail = Fraction(factorial(d1) * factorial(d2), factorial(D + 1)) * comb(K - 2, k1 - 1)
    if tail:
        terms.append((G1(K - 1, D + 1), -tail))
    return FormalElement(terms)


def eisenstein_relations(weight: int) -> list[FormalElement]:
    """Both defining rows for every depth-two index of one weight."""
    if weight < 2:
        return []
    rows = []
    for (k1, k2, d1, d2) in _depth2_indices(weight):
        rows.append(stuffle_row(k1, k2, d1, d2))
        rows.append(shuffle_row(k1, k2, d1, d2))
    return rows


def zeta_relations(weight: int) -> list[FormalElement]:
    """Both defining rows for every (k1, k2) with k1 + k2 = weight."""
    if weight < 2:
        return []
    rows = []
    for k1 in range(1, weight):
        k2 = weight - k1
        rows.append(
            FormalElement([(ZP(k1, k2), 1), (Z2(k1, k2), -1), (Z2(k2, k1), -1), (Z1(weight), -1)])
        )
        terms = [(ZP(k1, k2), Fraction(1))]
        for j in range(1, weight):
            c = comb(j - 1, k1 - 1) + comb(j - 1, k2 - 1)
            if c:
                terms.append((Z2(j, weight - j), Fraction(-c)))
        rows.append(FormalElement(terms))
    return rows


def _rref(rows: list[dict[int, Fraction]]) -> list[tuple[int, dict[int, Fraction]]]:
    """Reduced row echelon form of sparse rows, pivoting on the first column."""
    pivot_rows: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            piv = pivot_rows.get(c)
            if piv is None:
                inv = 1 / row[c]
                pivot_rows[c] = {j: v * inv for j, v in row.items()}
                break
            f = row.pop(c)
            for j, v in piv.items():
                if j == c:
                    continue
                w = row.get(j)
                w = -f * v if w is None else w - f * v
                if w:
                    row[j] = w
                else:
                    row.pop(j, None)
    # back-substitution: clear pivot columns from the other rows
    for c in sorted(pivot_rows, reverse=True):
        src = pivot_rows[c]
        for p, row in pivot_rows.items():
            if p >= c or c not in row:
                continue
            f = row.pop(c)
            for j, v in src.items():
                if j == c:
                    continue
                w = row.get(j)
                w = -f * v if w is None else w - f * v
                if w:
                    row[j] = w
                else:
                    row.pop(j, None)
    return [(c, pivot_rows[c]) for c in sorted(pivot_rows)]


class RelationSystem:
    """Ordered basis plus row-reduced relation rows for one weight."""

    __slots__ = ("space", "weight", "basis", "index", "rref_rows")

    def __init__(self, space: str, weight: int, basis: list[GenId], rref_rows):
        self.space = space
        self.weight = weight
        self.basis = list(basis)
        self.index = {g: i for i, g in enumerate(self.basis)}
        self.rref_rows = [(c, dict(r)) for c, r in rref_rows]

    @classmethod
    def build(cls, space: str, weight: int) -> "RelationSystem":
        space = _space(space)
        basis = enumerate_generators(space, weight)
        index = {g: i for i, g in enumerate(basis)}
        relations = eisenstein_relations(weight) if space == EISENSTEIN else zeta_relations(weight)
        rows = [{index[g]: c for g, c in rel._terms.items()} for rel in relations]
        return cls(space, weight, basis, _rref(rows))

    @property
    def rank(self) -> int:
        return len(self.rref_rows)

    @property
    def dimension(self) -> int:
        return len(self.basis) - len(self.rref_rows)

    def _vector(self, element: FormalElement) -> dict[int, Fraction]:
        v = {}
        for g, c in element._terms.items():
            i = self.index.get(g)
            if i is None:
                raise ValueError(f"{g} is not a weight-{self.weight} generator of this space")
            v[i] = c
        return v

    def normal_form(self, element: FormalElement) -> FormalElement:
        """The canonical representative of an element modulo the relations."""
        if not element:
            return element
        if element.space != self.space or element.weight != self.weight:
            raise ValueError("element does not belong to this relation system")
        v = self._vector(element)
        for c, row in self.rref_rows:
            f = v.pop(c, None)
            if f is None:
                continue
            for j, w in row.items():
                if j == c:
                    continue
                u = v.get(j)
                u = -f * w if u is None else u - f * w
                if u:
                    v[j] = u
                else:
                    v.pop(j, None)
        return FormalElement([(self.basis[i], c) for i, c in v.items()])

    def is_zero(self, element: FormalElement) -> bool:
        return not self.normal_form(element)

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "format_version": CACHE_FORMAT_VERSION,
            "space": self.space,
            "weight": self.weight,
            "basis": [str(g) for g in self.basis],
            "rank": self.rank,
            "dimension": self.dimension,
            "rows": [
                {"pivot": c, "entries": [[j, str(v)] for j, v in sorted(row.items())]}
                for c, row in self.rref_rows
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "RelationSystem":
        from .elements import parse_genid

        if data.get("format_version") != CACHE_FORMAT_VERSION:
            raise ValueError("unsupported cache format version")
        basis = [parse_genid(t) for t in data["basis"]]
        rows = [
            (r["pivot"], {int(j): Fraction(v) for j, v in r["entries"]}) for r in data["rows"]
        ]
        return cls(data["space"], data["weight"], basis, rows)


# -- construction with caching --------------------------------------------

_MEMO: dict[tuple[str, int], RelationSystem] = {}


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env).expanduser()
    return Path.home() / ".cache" / "doubleeis"


def _cache_file(cache_dir: Path, space: str, weight: int) -> Path:
    return cache_dir / f"relations_{space}_{weight}.json"


def _atomic_write_json(path: Path, data: dict):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def relation_system(space: str, weight: int, cache_dir: str | Path | None = None, use_disk: bool = True) -> RelationSystem:
    """The relation system of one weight, memoized and optionally disk-cached."""
    space = _space(space)
    key = (space, weight)
    path = None
    if use_disk:
        path = _cache_file(Path(cache_dir) if cache_dir else default_cache_dir(), space, weight)
    sys_ = _MEMO.get(key)
    if sys_ is not None:
        if path is not None and not path.exists():
            _atomic_write_json(path, sys_.to_json_dict())
        return sys_
    if path is not None:
        if path.exists():
            try:
                sys_ = RelationSystem.from_json_dict(json.loads(path.read_text()))
            except (ValueError, KeyError, json.JSONDecodeError):
                sys_ = None  # stale or foreign file: rebuild
    if sys_ is None:
        sys_ = RelationSystem.build(space, weight)
        if path is not None:
            _atomic_write_json(path, sys_.to_json_dict())
    _MEMO[key] = sys_
    return sys_


def dimension(space: str, weight: int, **kwargs) -> int:
    return relation_system(space, weight, **kwargs).dimension


def normal_form(element: FormalElement, **kwargs) -> FormalElement:
    """Canonical representative modulo the relations of its space and weight."""
    if not element:
        return element
    return relation_system(element.space, element.weight, **kwargs).normal_form(element)


def is_zero_in_space(element: FormalElement, **kwargs) -> bool:
    return not normal_form(element, **kwargs)


def cache_status(cache_dir: str | Path | None = None) -> dict:
    d = Path(cache_dir) if cache_dir else default_cache_dir()
    files = sorted(d.glob("relations_*.json")) if d.is_dir() else []
    return {
        "cache_dir": str(d),
        "files": [f.name for f in files],
        "total_bytes": sum(f.stat().st_size for f in files),
    }


def cache_clear(cache_dir: str | Path | None = None) -> int:
    d = Path(cache_dir) if cache_dir else default_cache_dir()
    n = 0
    if d.is_dir():
        for f in d.glob("relations_*.json"):
            f.unlink()
            n += 1
    return n


# -- tabular exports -------------------------------------------------------

def relation_rows(space: str, weight: int, reduced: bool = False) -> tuple[list[GenId], list[list[Fraction]]]:
    """Dense relation rows over the ordered basis, raw or row-reduced."""
    space = _space(space)
    basis = enumerate_generators(space, weight)
    if reduced:
        sys_ = relation_system(space, weight)
        dense = []
        for c, row in sys_.rref_rows:
            vec = [Fraction(0)] * len(basis)
            for j, v in row.items():
                vec[j] = v
            dense.append(vec)
        return basis, dense
    index = {g: i for i, g in enumerate(basis)}
    relations = eisenstein_relations(weight) if space == EISENSTEIN else zeta_relations(weight)
    dense = []
    for rel in relations:
        vec = [Fraction(0)] * len(basis)
        for g, c in rel._terms.items():
            vec[index[g]] = c
        dense.append(vec)
    return basis, dense


def relations_to_csv(space: str, weight: int, reduced: bool = False) -> str:
    basis, rows = relation_rows(space, weight, reduced)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([str(g) for g in basis])
    for row in rows:
        writer.writerow([str(v) for v in row])
    return buf.getvalue()


def relations_to_json(space: str, weight: int, reduced: bool = False) -> dict:
    basis, rows = relation_rows(space, weight, reduced)
    return {
        "space": _space(space),
        "weight": weight,
        "basis": [str(g) for g in basis],
        "rows": [[str(v) for v in row] for row in rows],
    }
