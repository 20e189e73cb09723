"""
Lattice systems for the uncolored and colored bosonic models.

Geometry: r rows numbered 1..r from top to bottom, columns labeled N, N-1,
..., M from left to right. Row i uses spectral parameter z_i. Boundary: left
edges are vacuum, right edges are ``-`` (uncolored) or the right flag
(colored), bottom edges are empty, and the top edge of column j carries the
particles of the parts lambda_i = j (colored: with color c_i).

The partition function is normalized by (z_1 ... z_r)^M, which makes it
independent of the padding (M, N).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterator, Sequence

from .laurent import LaurentPoly, poly_sum
from .weights import (
    MINUS, PLUS, Family, fused_weight, uncolored_weight,
)
from .weyl import is_dominant

__all__ = [
    "Model", "SystemSpec", "State", "top_boundary", "enumerate_states",
    "partition_function", "column_transfer_matrix", "partition_function_transfer",
    "multisets_up_to", "uncolored_system", "colored_system",
    "partition_function_enumerated", "Model", "InvalidSystem",
]


class Model(str, Enum):
    UNCOLORED = "uncolored"
    COLORED = "colored"


class InvalidSystem(ValueError):
    pass


@dataclass(frozen=True)
class SystemSpec:
    model: Model
    family: Family
    rank: int
    lam: tuple[int, ...]
    top_flag: tuple[int, ...] | None = None
    right_flag: tuple[int, ...] | None = None
    M: int | None = None
    N: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "model", Model(self.model))
        object.__setattr__(self, "family", Family.parse(self.family))
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))
        r = self.rank
        if len(self.lam) != r:
            raise InvalidSystem(f"lambda {self.lam} does not have {r} parts")
        if not is_dominant(self.lam):
            raise InvalidSystem(f"lambda {self.lam} is not dominant")
        if self.M is None:
            object.__setattr__(self, "M", min(self.lam[-1], 0) if r else 0)
        if self.N is None:
            object.__setattr__(self, "N", max(self.lam[0], 0) if r else 0)
        if r and (self.M > self.lam[-1] or self.N < self.lam[0]):
            raise InvalidSystem(f"columns {self.M}..{self.N} do not cover lambda {self.lam}")
        if self.model is Model.COLORED:
            for name in ("top_flag", "right_flag"):
                flag = getattr(self, name)
                if flag is None or len(flag) != r:
                    raise InvalidSystem(f"colored systems need a {name} of length {r}")
                flag = tuple(int(x) for x in flag)
                if any(not 1 <= x <= r for x in flag):
                    raise InvalidSystem(f"{name} {flag} uses colors outside 1..{r}")
                object.__setattr__(self, name, flag)
        else:
            object.__setattr__(self, "top_flag", None)
            object.__setattr__(self, "right_flag", None)

    @property
    def columns(self) -> list[int]:
        """Column labels from left to right."""
        return list(range(self.N, self.M - 1, -1))

    def colors_balanced(self) -> bool:
        if self.model is Model.UNCOLORED:
            return True
        return sorted(self.top_flag) == sorted(self.right_flag)

    def with_padding(self, M: int, N: int) -> SystemSpec:
        return SystemSpec(self.model, self.family, self.rank, self.lam,
                          self.top_flag, self.right_flag, M, N)

    def to_dict(self) -> dict:
        out = {"model": self.model.value, "family": self.family.value, "rank": self.rank,
               "lambda": list(self.lam), "M": self.M, "N": self.N}
        if self.model is Model.COLORED:
            out["top_flag"] = list(self.top_flag)
            out["right_flag"] = list(self.right_flag)
        return out


def uncolored_system(lam: Sequence[int], family="R", **kw) -> SystemSpec:
    return SystemSpec(Model.UNCOLORED, family, len(lam), tuple(lam), **kw)


def colored_system(lam: Sequence[int], top_flag: Sequence[int], right_flag: Sequence[int],
                   family="R", **kw) -> SystemSpec:
    return SystemSpec(Model.COLORED, family, len(lam), tuple(lam),
                      tuple(top_flag), tuple(right_flag), **kw)


@dataclass(frozen=True)
class State:
    """One admissible spin assignment.

    ``horizontal[i][k]`` is the spin on row i+1 to the left of the k-th column
    (k = ncols is the right boundary); ``vertical[i][k]`` is the spin above row
    i+1 in the k-th column (i = r is the bottom boundary). Columns are indexed
    left to right, i.e. label N first.
    """
    spec: SystemSpec
    horizontal: tuple
    vertical: tuple
    weight: LaurentPoly = field(compare=False, default=None)

    def to_dict(self) -> dict:
        def vjson(v):
            return list(v) if isinstance(v, tuple) else v
        return {
            "system": self.spec.to_dict(),
            "columns": self.spec.columns,
            "horizontal": [list(row) for row in self.horizontal],
            "vertical": [[vjson(v) for v in row] for row in self.vertical],
            "weight": self.weight.to_dict() if self.weight is not None else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def multisets_up_to(r: int, total: int) -> list[tuple[int, ...]]:
    """All multiplicity vectors of length r with sum <= total."""
    out = []

    def rec(prefix, left):
        if len(prefix) == r:
            out.append(tuple(prefix))
            return
        for m in range(left + 1):
            rec(prefix + [m], left - m)

    rec([], total)
    return sorted(out, key=lambda v: (sum(v), tuple(-x for x in v)))


def top_boundary(spec: SystemSpec) -> dict[int, object]:
    """Top spin of every column label: a count, or a multiplicity vector."""
    r = spec.rank
    out = {}
    for j in spec.columns:
        if spec.model is Model.UNCOLORED:
            out[j] = sum(1 for x in spec.lam if x == j)
        else:
            m = [0] * r
            for li, ci in zip(spec.lam, spec.top_flag):
                if li == j:
                    m[ci - 1] += 1
            out[j] = tuple(m)
    return out


def _vacuum_vertical(spec):
    return 0 if spec.model is Model.UNCOLORED else (0,) * spec.rank


def _right_boundary(spec):
    if spec.model is Model.UNCOLORED:
        return (MINUS,) * spec.rank
    return spec.right_flag


def _occupancy(v) -> int:
    return v if isinstance(v, int) else sum(v)


def _vertex_moves(spec: SystemSpec, row: int, a, b):
    """All (right, bottom, weight) with nonzero weight for left a, top b."""
    r = spec.rank
    return _vertex_moves_cached(spec.model, spec.family, r, row, a, b)


@lru_cache(maxsize=None)
def _vertex_moves_cached(model, family, r, row, a, b):
    moves = []
    if model is Model.UNCOLORED:
        cands = [(a, b)]
        if a == PLUS and b >= 1:
            cands.append((MINUS, b - 1))
        if a == MINUS:
            cands.append((PLUS, b + 1))
        for c, d in cands:
            w = uncolored_weight(family, a, b, c, d, row, r)
            if w:
                moves.append((c, d, w))
    else:
        for c in range(r + 1):
            d = list(b)
            if a != PLUS:
                d[a - 1] += 1
            if c != PLUS:
                d[c - 1] -= 1
            if min(d) < 0:
                continue
            d = tuple(d)
            w = fused_weight(family, a, b, c, d, row, r)
            if w:
                moves.append((c, d, w))
    return tuple(moves)


def _normalizer(spec: SystemSpec) -> LaurentPoly:
    return LaurentPoly.monomial([spec.M] * spec.rank)


def enumerate_states(spec: SystemSpec) -> Iterator[State]:
    """Depth-first, row-major enumeration of all states with nonzero weight.

    Each state carries its raw (unnormalized) weight. The order is
    deterministic: at every vertex the candidate moves are tried in the fixed
    order of :func:`_vertex_moves`.
    """
    r = spec.rank
    cols = spec.columns
    ncols = len(cols)
    top = top_boundary(spec)
    right = _right_boundary(spec)
    vacuum = _vacuum_vertical(spec)
    if not spec.colors_balanced():
        return

    horiz = [[None] * (ncols + 1) for _ in range(r)]
    vert = [[None] * ncols for _ in range(r + 1)]
    for k, j in enumerate(cols):
        vert[0][k] = top[j]
    for i in range(r):
        horiz[i][0] = PLUS

    def rec(pos: int, weight: LaurentPoly):
        if pos == r * ncols:
            yield State(spec, tuple(tuple(h) for h in horiz),
                        tuple(tuple(v) for v in vert), weight)
            return
        i, k = divmod(pos, ncols)
        a = horiz[i][k]
        b = vert[i][k]
        for c, d, w in _vertex_moves(spec, i + 1, a, b):
            if k == ncols - 1 and c != right[i]:
                continue
            if i == r - 1 and d != vacuum:
                continue
            if _occupancy(d) > r:
                raise AssertionError(f"vertical occupancy {d} exceeds rank {r}")
            horiz[i][k + 1] = c
            vert[i + 1][k] = d
            yield from rec(pos + 1, weight * w)
        horiz[i][k + 1] = None
        vert[i + 1][k] = None

    if ncols == 0:
        return
    yield from rec(0, LaurentPoly.one(r))


def partition_function_enumerated(spec: SystemSpec) -> LaurentPoly:
    """Normalized sum of the weights streamed by :func:`enumerate_states`."""
    raw = poly_sum((s.weight for s in enumerate_states(spec)), spec.rank)
    return raw * _normalizer(spec)


@lru_cache(maxsize=4096)
def partition_function(spec: SystemSpec) -> LaurentPoly:
    """Normalized partition function (z_1 ... z_r)^M * sum of state weights.

    Sums over exactly the states of :func:`enumerate_states`, but sweeps the
    grid vertex by vertex keeping one accumulated weight per frontier
    configuration, so shared prefixes are multiplied once.
    """
    r = spec.rank
    if not spec.colors_balanced():
        return LaurentPoly.zero(r)
    cols = spec.columns
    ncols = len(cols)
    top = top_boundary(spec)
    right = _right_boundary(spec)
    vacuum = _vacuum_vertical(spec)

    frontier = {(PLUS, tuple(top[j] for j in cols)): LaurentPoly.one(r)}
    for i in range(r):
        for k in range(ncols):
            nxt: dict = {}
            for (a, verts), acc in frontier.items():
                b = verts[k]
                for c, d, w in _vertex_moves(spec, i + 1, a, b):
                    if k == ncols - 1 and c != right[i]:
                        continue
                    if i == r - 1 and d != vacuum:
                        continue
                    if _occupancy(d) > r:
                        raise AssertionError(f"vertical occupancy {d} exceeds rank {r}")
                    key = (c, verts[:k] + (d,) + verts[k + 1:])
                    nxt.setdefault(key, []).append(acc * w)
            frontier = {key: poly_sum(parts, r) for key, parts in nxt.items()}
            frontier = {key: p for key, p in frontier.items() if p}
        # next row starts from the left vacuum edge
        frontier = {(PLUS, verts): acc for (_, verts), acc in frontier.items()}
    total = poly_sum(frontier.values(), r)
    return total * _normalizer(spec)


@lru_cache(maxsize=None)
def column_transfer_matrix(family, m: int, r: int) -> dict:
    """Column transfer matrix C_m as ``{(delta, eps): weight}``.

    delta/eps are the horizontal spins to the left/right of the column, m
    particles enter at the top and none leave at the bottom. Only nonzero
    entries are stored.
    """
    family = Family.parse(family)
    out = {}

    def rec(i, n, delta, eps, weight):
        if i == r:
            if n == 0:
                out[(tuple(delta), tuple(eps))] = weight
            return
        for a in (PLUS, MINUS):
            cands = [(a, n)]
            if a == PLUS and n >= 1:
                cands.append((MINUS, n - 1))
            if a == MINUS:
                cands.append((PLUS, n + 1))
            for c, d in cands:
                w = uncolored_weight(family, a, n, c, d, i + 1, r)
                if w:
                    rec(i + 1, d, delta + [a], eps + [c], weight * w)

    rec(0, m, [], [], LaurentPoly.one(r))
    return out


def partition_function_transfer(spec: SystemSpec) -> LaurentPoly:
    """Uncolored partition function as a product of column transfer matrices."""
    if spec.model is not Model.UNCOLORED:
        raise InvalidSystem("transfer matrices are implemented for uncolored systems")
    r = spec.rank
    top = top_boundary(spec)
    vec = {(PLUS,) * r: LaurentPoly.one(r)}
    for j in spec.columns:
        mat = column_transfer_matrix(spec.family, top[j], r)
        nxt: dict = {}
        for (delta, eps), w in mat.items():
            if delta in vec:
                nxt.setdefault(eps, []).append(vec[delta] * w)
        vec = {eps: poly_sum(parts, r) for eps, parts in nxt.items()}
    raw = vec.get((MINUS,) * r, LaurentPoly.zero(r))
    return raw * _normalizer(spec)
