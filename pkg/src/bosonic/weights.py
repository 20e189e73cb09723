"""
Boltzmann weight tables: uncolored P/R weights, monochrome colored weights,
fused colored weights, and the three R-matrices.

Spin encoding
-------------
Horizontal spins are ints: ``PLUS = 0`` is the vacuum, ``k >= 1`` is the color
gamma_k. In the uncolored model the single particle ``MINUS`` is 1. Colors are
ordered gamma_1 > gamma_2 > ... > gamma_r, so as integers a *smaller* index is a
*larger* color; every comparison goes through :func:`color_gt`.

Vertical spins are an int occupancy (uncolored and monochrome edges) or a
tuple of multiplicities ``(m_1, ..., m_r)`` (fused colored edges).

Vertex arguments are always ``(left, top, right, bottom)``. R-matrix arguments
are the four adjacent spins in the geometric order ``(sw, nw, ne, se)``.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Sequence

from .laurent import LaurentPoly

__all__ = [
    "PLUS", "MINUS", "Family", "color_gt", "color_lt",
    "uncolored_weight", "monochrome_weight", "fused_weight", "fused_internal_chain",
    "rmatrix_uncolored", "rmatrix_colored", "rmatrix_aux", "weight_table",
]

PLUS = 0
MINUS = 1


class Family(str, Enum):
    P = "P"
    R = "R"

    @classmethod
    def parse(cls, value) -> Family:
        if isinstance(value, Family):
            return value
        return cls(str(value).upper())


def color_gt(a: int, b: int) -> bool:
    """gamma_a > gamma_b."""
    return a < b


def color_lt(a: int, b: int) -> bool:
    return a > b


def _z(i, rank):
    return LaurentPoly.z(i, rank)


def _t_power(n, rank):
    return LaurentPoly.t(rank, n)


def _one(rank):
    return LaurentPoly.one(rank)


def _zero(rank):
    return LaurentPoly.zero(rank)


def _t_geometric(n, rank):
    """1 + t + ... + t^n, i.e. (1 - t^{n+1}) / (1 - t)."""
    return LaurentPoly(rank, {(0,) * rank + (k,): 1 for k in range(n + 1)})


@lru_cache(maxsize=None)
def uncolored_weight(family, a: int, b: int, c: int, d: int, z_index: int, rank: int) -> LaurentPoly:
    """Uncolored vertex (left a, top b, right c, bottom d) with parameter z_i.

    A(n): (+, n, +, n) -> 1          B(n): (-, n, -, n) -> z_i
    C(n): (-, n, +, n+1) -> z_i (1 - t^{n+1}) [P] or z_i (1 - t) [R]
    D(n): (+, n+1, -, n) -> 1 [P] or 1 + t + ... + t^n [R]
    """
    family = Family.parse(family)
    if min(b, d) < 0:
        return _zero(rank)
    z = _z(z_index, rank)
    if a == PLUS and c == PLUS and b == d:
        return _one(rank)
    if a == MINUS and c == MINUS and b == d:
        return z
    if a == MINUS and c == PLUS and d == b + 1:
        n = b
        if family is Family.P:
            return z * (1 - _t_power(n + 1, rank))
        return z * (1 - _t_power(1, rank))
    if a == PLUS and c == MINUS and b == d + 1:
        n = d
        if family is Family.P:
            return _one(rank)
        return _t_geometric(n, rank)
    return _zero(rank)


@lru_cache(maxsize=None)
def monochrome_weight(family, color: int, a: int, b: int, a_out: int, d: int,
                      z_index: int, rank: int) -> LaurentPoly:
    """Monochrome vertex of type (z_i, gamma_color); the vertical edge holds
    copies of ``color`` only. Arguments are (left a, top b, right a_out, bottom d).
    """
    family = Family.parse(family)
    if min(b, d) < 0:
        return _zero(rank)
    z = _z(z_index, rank)
    if a == a_out and b == d:
        if a == PLUS:
            return _one(rank)  # A(n)
        # B(n): a color passes over the column
        if color == a:
            return z
        if color_lt(color, a):
            return _one(rank)
        return _t_power(b, rank)
    if a == color and a_out == PLUS and d == b + 1:
        n = b
        if family is Family.P:
            return z * (1 - _t_power(n + 1, rank))
        return z * (1 - _t_power(1, rank))
    if a == PLUS and a_out == color and b == d + 1:
        n = d
        if family is Family.P:
            return _one(rank)
        return _t_geometric(n, rank)
    return _zero(rank)


def fused_internal_chain(a: int, b: Sequence[int], d: Sequence[int]) -> list[int] | None:
    """Horizontal spins through the monochrome columns gamma_r, ..., gamma_1.

    Returns ``[h_0, h_1, ..., h_r]`` where h_0 = a and h_k is the spin to the
    right of the k-th column visited, or None if no admissible chain exists.
    The chain is forced column by column, so it is unique when it exists.
    """
    ncol = len(b)
    chain = [a]
    cur = a
    for k in range(ncol, 0, -1):
        bk, dk = b[k - 1], d[k - 1]
        if dk == bk + 1:
            if cur != k:
                return None
            cur = PLUS
        elif dk == bk - 1:
            if cur != PLUS:
                return None
            cur = k
        elif dk != bk:
            return None
        chain.append(cur)
    return chain


@lru_cache(maxsize=None)
def fused_weight(family, a: int, b: tuple, c: int, d: tuple, z_index: int, rank: int) -> LaurentPoly:
    """Colored vertex weight obtained by fusing r monochrome vertices laid out
    left to right in color order gamma_r, ..., gamma_1."""
    b, d = tuple(b), tuple(d)
    if len(b) != len(d) or min(b + d, default=0) < 0:
        return _zero(rank)
    chain = fused_internal_chain(a, b, d)
    if chain is None or chain[-1] != c:
        return _zero(rank)
    ncol = len(b)
    result = _one(rank)
    for step, k in enumerate(range(ncol, 0, -1)):
        w = monochrome_weight(family, k, chain[step], b[k - 1], chain[step + 1], d[k - 1],
                              z_index, rank)
        if not w:
            return _zero(rank)
        result = result * w
    return result


@lru_cache(maxsize=None)
def rmatrix_uncolored(sw: int, nw: int, ne: int, se: int, i: int, j: int, rank: int) -> LaurentPoly:
    zi, zj, t = _z(i, rank), _z(j, rank), _t_power(1, rank)
    key = (sw, nw, ne, se)
    P, M = PLUS, MINUS
    table = {
        (P, P, P, P): zi - t * zj,
        (M, M, M, M): zi - t * zj,
        (M, P, P, M): (1 - t) * zi,
        (P, M, M, P): (1 - t) * zj,
        (P, M, P, M): t * (zi - zj),
        (M, P, M, P): zi - zj,
    }
    return table.get(key, _zero(rank))


@lru_cache(maxsize=None)
def rmatrix_colored(sw: int, nw: int, ne: int, se: int, i: int, j: int, rank: int) -> LaurentPoly:
    zi, zj, t = _z(i, rank), _z(j, rank), _t_power(1, rank)
    if sw == nw == ne == se:
        return zi - t * zj  # both the all-vacuum and the single-color entry
    if sw != PLUS and nw != PLUS:
        c, d = sw, nw
        if (ne, se) == (d, c):
            return (1 - t) * zi if color_lt(c, d) else (1 - t) * zj
        if (ne, se) == (c, d):
            return zi - zj if color_gt(c, d) else t * (zi - zj)
        return _zero(rank)
    if sw != PLUS and nw == PLUS:
        c = sw
        if (ne, se) == (PLUS, c):
            return (1 - t) * zi
        if (ne, se) == (c, PLUS):
            return zi - zj
        return _zero(rank)
    if sw == PLUS and nw != PLUS:
        c = nw
        if (ne, se) == (c, PLUS):
            return (1 - t) * zj
        if (ne, se) == (PLUS, c):
            return t * (zi - zj)
    return _zero(rank)


def _cyclic_descending(x: int, y: int, z: int) -> bool:
    """True iff (x, y, z) is a cyclic rotation of a strictly descending triple."""
    return (
        (color_gt(x, y) and color_gt(y, z))
        or (color_gt(y, z) and color_gt(z, x))
        or (color_gt(z, x) and color_gt(x, y))
    )


@lru_cache(maxsize=None)
def rmatrix_aux(color: int, sw: int, nw: int, ne: int, se: int, i: int, j: int, rank: int) -> LaurentPoly:
    """Auxiliary R-vertex labeled (z_i, z_j, gamma_color)."""
    zi, zj, t = _z(i, rank), _z(j, rank), _t_power(1, rank)
    c = color
    if sw == nw == ne == se:
        return zi - t * zj
    if sw != PLUS and nw != PLUS:
        d, e = sw, nw
        if (ne, se) == (d, e):
            return t * (zi - zj) if color_gt(e, d) else zi - zj
        if (ne, se) == (e, d):
            if e == c:
                return (1 - t) * zj
            if d == c:
                return (1 - t) * zi
            return (1 - t) * zj if _cyclic_descending(e, c, d) else (1 - t) * zi
        return _zero(rank)
    if sw == PLUS and nw != PLUS:
        d = nw
        if (ne, se) == (PLUS, d):
            return t * (zi - zj)
        if (ne, se) == (d, PLUS):
            return (1 - t) * zj
        return _zero(rank)
    if sw != PLUS and nw == PLUS:
        d = sw
        if (ne, se) == (d, PLUS):
            return zi - zj
        if (ne, se) == (PLUS, d):
            return (1 - t) * zi
    return _zero(rank)


def weight_table(kind: str, family="R", rank: int = 2, n_max: int = 2) -> list[dict]:
    """All nonzero entries of one weight table, for JSON dumps and golden tests.

    ``kind`` is one of ``uncolored``, ``monochrome``, ``fused``,
    ``rmatrix-uncolored``, ``rmatrix-colored``, ``rmatrix-aux``. For vertex
    tables ``rank`` is the number of colors; the spectral parameter is z_1 in
    a ring of that rank (rank 2 for R-matrices, with z_i = z_1, z_j = z_2).
    """
    from .lattice import multisets_up_to  # local import: lattice imports weights

    family = Family.parse(family)
    rows = []
    if kind == "uncolored":
        for a in (PLUS, MINUS):
            for c in (PLUS, MINUS):
                for b in range(n_max + 1):
                    for d in range(n_max + 1):
                        w = uncolored_weight(family, a, b, c, d, 1, 1)
                        if w:
                            rows.append({"left": a, "top": b, "right": c, "bottom": d,
                                         "weight": w.to_dict()})
    elif kind == "monochrome":
        spins = range(rank + 1)
        for color in range(1, rank + 1):
            for a in spins:
                for c in spins:
                    for b in range(n_max + 1):
                        for d in range(n_max + 1):
                            w = monochrome_weight(family, color, a, b, c, d, 1, rank)
                            if w:
                                rows.append({"color": color, "left": a, "top": b, "right": c,
                                             "bottom": d, "weight": w.to_dict()})
    elif kind == "fused":
        spins = range(rank + 1)
        vert = multisets_up_to(rank, n_max)
        for a in spins:
            for b in vert:
                for c in spins:
                    for d in vert:
                        w = fused_weight(family, a, b, c, d, 1, rank)
                        if w:
                            rows.append({"left": a, "top": list(b), "right": c,
                                         "bottom": list(d), "weight": w.to_dict()})
    elif kind in ("rmatrix-uncolored", "rmatrix-colored", "rmatrix-aux"):
        spins = (PLUS, MINUS) if kind == "rmatrix-uncolored" else tuple(range(rank + 1))
        labels = range(1, rank + 1) if kind == "rmatrix-aux" else [None]
        for label in labels:
            for sw in spins:
                for nw in spins:
                    for ne in spins:
                        for se in spins:
                            if kind == "rmatrix-uncolored":
                                w = rmatrix_uncolored(sw, nw, ne, se, 1, 2, 2)
                            elif kind == "rmatrix-colored":
                                w = rmatrix_colored(sw, nw, ne, se, 1, 2, 2)
                            else:
                                w = rmatrix_aux(label, sw, nw, ne, se, 1, 2, 2)
                            if w:
                                row = {"sw": sw, "nw": nw, "ne": ne, "se": se,
                                       "weight": w.to_dict()}
                                if label is not None:
                                    row = {"color": label, **row}
                                rows.append(row)
    else:
        raise ValueError(f"unknown weight table {kind!r}")
    return rows
