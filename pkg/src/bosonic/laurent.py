"""
Exact Laurent polynomials in z_1, ..., z_r and t with integer coefficients.

A monomial is stored as a tuple ``(e_1, ..., e_r, e_t)`` of (possibly
negative) exponents, so the natural tuple order is the canonical order:
lexicographic on the z-exponents, then on the t-exponent.

>>> z1, z2 = LaurentPoly.z(1, 2), LaurentPoly.z(2, 2)
>>> t = LaurentPoly.t(2)
>>> print((z1 - t * z2) * (1 + t))
t*z1 + z1 - t^2*z2 - t*z2
"""

from __future__ import annotations

import heapq
import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "LaurentPoly", "NotDivisible", "RankMismatch",
    "add", "mul", "permute_z", "invert_z", "invert_t", "exact_div", "eval_poly",
]

Exponent = tuple  # (e_1, ..., e_r, e_t)


class RankMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Raised when a division has no exact Laurent-polynomial quotient."""


class LaurentPoly:
    """Immutable Laurent polynomial; ``terms`` never stores a zero coefficient."""

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[Exponent, int] | None = None):
        self.rank = rank
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    if len(key) != rank + 1:
                        raise RankMismatch(f"monomial {key} does not have rank {rank}")
                    clean[tuple(key)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> LaurentPoly:
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.rank = rank
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, rank: int) -> LaurentPoly:
        return cls._raw(rank, {})

    @classmethod
    def const(cls, c: int, rank: int) -> LaurentPoly:
        return cls._raw(rank, {(0,) * (rank + 1): int(c)} if c else {})

    @classmethod
    def one(cls, rank: int) -> LaurentPoly:
        return cls.const(1, rank)

    @classmethod
    def monomial(cls, z_exp: Sequence[int], t_exp: int = 0, coeff: int = 1) -> LaurentPoly:
        rank = len(z_exp)
        if not coeff:
            return cls.zero(rank)
        return cls._raw(rank, {tuple(z_exp) + (t_exp,): int(coeff)})

    @classmethod
    def z(cls, i: int, rank: int, power: int = 1) -> LaurentPoly:
        """The variable z_i (1-based), optionally raised to ``power``."""
        if not 1 <= i <= rank:
            raise ValueError(f"z_{i} is not a variable of rank {rank}")
        e = [0] * rank
        e[i - 1] = power
        return cls.monomial(e)

    @classmethod
    def t(cls, rank: int, power: int = 1) -> LaurentPoly:
        return cls.monomial([0] * rank, power)

    # basic access

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (descending) order."""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.rank)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.rank != self.rank:
                raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.rank)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return LaurentPoly._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.rank, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly.zero(self.rank)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        n = self.rank + 1
        for kb, cb in b.items():
            for ka, ca in a.items():
                key = tuple(ka[i] + kb[i] for i in range(n))
                out[key] = out.get(key, 0) + ca * cb
        return LaurentPoly._raw(self.rank, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise NotDivisible("only monomials have Laurent inverses")
            (key, c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible(f"coefficient {c} is not a unit")
            return LaurentPoly._raw(self.rank, {tuple(e * n for e in key): c ** (-n)})
        result = LaurentPoly.one(self.rank)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_monomial(self, z_shift: Sequence[int], t_shift: int = 0) -> LaurentPoly:
        """Multiply by z^z_shift * t^t_shift without a general product."""
        shift = tuple(z_shift) + (t_shift,)
        return LaurentPoly._raw(
            self.rank,
            {tuple(e + s for e, s in zip(k, shift)): c for k, c in self._terms.items()},
        )

    # substitutions

    def permute_z(self, w) -> LaurentPoly:
        """(w.f)(z) = f(w^{-1} z); on monomials z^mu -> z^{w mu}.

        ``w`` is a Permutation or any one-line sequence (images of 1..r).
        """
        one_line = tuple(getattr(w, "one_line", w))
        if len(one_line) != self.rank:
            raise RankMismatch(f"permutation of {len(one_line)} letters on rank {self.rank}")
        r = self.rank
        out = {}
        for k, c in self._terms.items():
            new = [0] * (r + 1)
            for i in range(r):
                new[one_line[i] - 1] = k[i]
            new[r] = k[r]
            out[tuple(new)] = c
        return LaurentPoly._raw(r, out)

    def swap_z(self, i: int) -> LaurentPoly:
        """Apply the simple reflection s_i (swap z_i and z_{i+1})."""
        out = {}
        for k, c in self._terms.items():
            lst = list(k)
            lst[i - 1], lst[i] = lst[i], lst[i - 1]
            out[tuple(lst)] = c
        return LaurentPoly._raw(self.rank, out)

    def invert_z(self) -> LaurentPoly:
        r = self.rank
        return LaurentPoly._raw(
            r, {tuple(-e for e in k[:r]) + (k[r],): c for k, c in self._terms.items()}
        )

    def invert_t(self) -> LaurentPoly:
        r = self.rank
        return LaurentPoly._raw(r, {k[:r] + (-k[r],): c for k, c in self._terms.items()})

    def embed(self, rank: int, positions: Sequence[int] | None = None) -> LaurentPoly:
        """Re-home into a ring of larger rank; variable i goes to ``positions[i-1]``."""
        positions = positions or list(range(1, self.rank + 1))
        out = {}
        for k, c in self._terms.items():
            new = [0] * (rank + 1)
            for i, p in enumerate(positions):
                new[p - 1] = k[i]
            new[rank] = k[self.rank]
            out[tuple(new)] = c
        return LaurentPoly._raw(rank, out)

    # division

    def exact_div(self, g: LaurentPoly) -> LaurentPoly:
        """Return h with self == g * h, or raise NotDivisible.

        Long division under the canonical (lex) order. Every quotient monomial
        must lie in the per-variable degree box implied by the degrees of
        ``self`` and ``g``; leaving it proves non-divisibility, which also
        guarantees termination.
        """
        g = self._coerce(g)
        if not g._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return LaurentPoly.zero(self.rank)
        n = self.rank + 1
        if len(g._terms) == 1:
            (gk, gc), = g._terms.items()
            out = {}
            for k, c in self._terms.items():
                q, rem = divmod(c, gc)
                if rem:
                    raise NotDivisible(f"coefficient {c} not divisible by {gc}")
                out[tuple(k[i] - gk[i] for i in range(n))] = q
            return LaurentPoly._raw(self.rank, out)

        lo_f, hi_f = _degree_box(self._terms, n)
        lo_g, hi_g = _degree_box(g._terms, n)
        lo = [lo_f[i] - lo_g[i] for i in range(n)]
        hi = [hi_f[i] - hi_g[i] for i in range(n)]
        if any(l > h for l, h in zip(lo, hi)):
            raise NotDivisible("degree bounds are inconsistent")

        g_lead = max(g._terms)
        g_lead_c = g._terms[g_lead]
        g_rest = [(k, c) for k, c in g._terms.items() if k != g_lead]

        rem = dict(self._terms)
        heap = [_Neg(k) for k in rem]
        heapq.heapify(heap)
        quotient = {}
        while heap:
            k = heapq.heappop(heap).key
            c = rem.get(k)
            if not c:
                continue
            qk = tuple(k[i] - g_lead[i] for i in range(n))
            if any(qk[i] < lo[i] or qk[i] > hi[i] for i in range(n)):
                raise NotDivisible(f"quotient term {qk} leaves the degree box")
            qc, r = divmod(c, g_lead_c)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by {g_lead_c}")
            quotient[qk] = qc
            del rem[k]
            for gk, gc in g_rest:
                key = tuple(qk[i] + gk[i] for i in range(n))
                old = rem.get(key)
                if old is None:
                    rem[key] = -qc * gc
                    heapq.heappush(heap, _Neg(key))
                else:
                    s = old - qc * gc
                    if s:
                        rem[key] = s
                    else:
                        del rem[key]
        return LaurentPoly._raw(self.rank, quotient)

    # evaluation and inspection

    def eval(self, z_values: Sequence, t_value) -> Fraction:
        """Exact rational value at the given point."""
        if len(z_values) != self.rank:
            raise RankMismatch(f"{len(z_values)} values for rank {self.rank}")
        point = [Fraction(v) for v in z_values] + [Fraction(t_value)]
        total = Fraction(0)
        for k, c in self._terms.items():
            term = Fraction(c)
            for v, e in zip(point, k):
                if e:
                    if v == 0 and e < 0:
                        raise ZeroDivisionError("zero substituted into a negative power")
                    term *= v ** e
            total += term
        return total

    def coefficient(self, z_exp: Sequence[int], t_exp: int = 0) -> int:
        return self._terms.get(tuple(z_exp) + (t_exp,), 0)

    def t_free(self) -> bool:
        return all(k[-1] == 0 for k in self._terms)

    def z_degree_bounds(self) -> tuple[list[int], list[int]]:
        return _degree_box(self._terms, self.rank + 1)

    # serialization

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [
                {"z": list(k[:-1]), "t": k[-1], "c": str(c)} for k, c in self.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> LaurentPoly:
        rank = int(data["rank"])
        terms = {}
        for term in data["terms"]:
            key = tuple(int(e) for e in term["z"]) + (int(term["t"]),)
            if len(key) != rank + 1:
                raise RankMismatch(f"term {term} does not have rank {rank}")
            terms[key] = terms.get(key, 0) + int(term["c"])
        return cls(rank, terms)

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls.from_dict(json.loads(text))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            factors = []
            if k[-1]:
                factors.append("t" if k[-1] == 1 else f"t^{k[-1]}")
            for i, e in enumerate(k[:-1], start=1):
                if e:
                    factors.append(f"z{i}" if e == 1 else f"z{i}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly(rank={self.rank}, {self})"


class _Neg:
    """Heap wrapper so heapq pops the lex-largest exponent first."""

    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other):
        return self.key > other.key


def _degree_box(terms, n):
    keys = list(terms)
    lo = [min(k[i] for k in keys) for i in range(n)]
    hi = [max(k[i] for k in keys) for i in range(n)]
    return lo, hi


# functional spellings of the ring operations


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def permute_z(f: LaurentPoly, w) -> LaurentPoly:
    return f.permute_z(w)


def invert_z(f: LaurentPoly) -> LaurentPoly:
    return f.invert_z()


def invert_t(f: LaurentPoly) -> LaurentPoly:
    return f.invert_t()


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f.exact_div(g)


def eval_poly(f: LaurentPoly, z_values: Sequence, t_value) -> Fraction:
    return f.eval(z_values, t_value)


def poly_sum(polys: Iterable[LaurentPoly], rank: int) -> LaurentPoly:
    """Sum with a single accumulator dict; much faster than repeated ``+``."""
    acc: dict = {}
    for p in polys:
        for k, c in p._terms.items():
            acc[k] = acc.get(k, 0) + c
    return LaurentPoly._raw(rank, {k: c for k, c in acc.items() if c})
