"""
Type A Weyl group combinatorics: permutations of 1..r, reduced words, Bruhat
order, and the action on weights in Z^r.

Conventions used everywhere in the package:

* ``Permutation((w(1), ..., w(r)))`` is one-line notation, 1-based.
* ``u * v`` is composition, ``(u * v)(i) = u(v(i))``.
* ``s(i, r)`` swaps i and i+1.
* The action on weights is ``(w lam)_{w(i)} = lam_i``; it matches the action on
  polynomials ``(w f)(z) = f(w^{-1} z)`` in the sense that w sends z^lam to
  z^{w lam}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

__all__ = [
    "Permutation", "identity", "s", "longest_element", "all_permutations",
    "length", "reduced_word", "all_reduced_words", "from_word", "bruhat_leq",
    "act_on_weight", "pairing_2rho", "minimal_sorter", "is_dominant",
    "is_antidominant", "num_positive_roots", "positive_roots", "standard_flag",
    "act_on_flag", "compose", "inverse", "bruhat_interval_below", "iter_weights",
    "partitions_in_box", "MAX_WORDS_RANK",
]

MAX_WORDS_RANK = 4


@dataclass(frozen=True, order=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "one_line", tuple(int(x) for x in self.one_line))
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise ValueError(f"{self.one_line} is not a permutation of 1..{len(self.one_line)}")

    @property
    def rank(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.rank != self.rank:
            raise ValueError("permutations of different rank")
        return Permutation(tuple(self.one_line[j - 1] for j in other.one_line))

    def inverse(self) -> Permutation:
        inv = [0] * self.rank
        for i, wi in enumerate(self.one_line, start=1):
            inv[wi - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return self.one_line == tuple(range(1, self.rank + 1))

    def has_left_descent(self, i: int) -> bool:
        """True iff l(s_i w) < l(w), i.e. i+1 appears before i in one-line notation."""
        inv = self.inverse()
        return inv(i) > inv(i + 1)

    def has_right_descent(self, i: int) -> bool:
        """True iff l(w s_i) < l(w)."""
        return self(i) > self(i + 1)

    def to_list(self) -> list[int]:
        return list(self.one_line)

    def __str__(self):
        return "[" + ",".join(map(str, self.one_line)) + "]"


def identity(r: int) -> Permutation:
    return Permutation(tuple(range(1, r + 1)))


def s(i: int, r: int) -> Permutation:
    if not 1 <= i < r:
        raise ValueError(f"s_{i} is not a simple reflection of S_{r}")
    w = list(range(1, r + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(tuple(w))


def longest_element(r: int) -> Permutation:
    return Permutation(tuple(range(r, 0, -1)))


def compose(u: Permutation, v: Permutation) -> Permutation:
    return u * v


def inverse(w: Permutation) -> Permutation:
    return w.inverse()


@lru_cache(maxsize=None)
def all_permutations(r: int) -> tuple[Permutation, ...]:
    """All of S_r, sorted by length, then one-line notation."""
    perms = [Permutation(p) for p in permutations(range(1, r + 1))]
    return tuple(sorted(perms, key=lambda w: (length(w), w.one_line)))


def length(w: Permutation) -> int:
    """Number of inversions."""
    a = w.one_line
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])


def num_positive_roots(r: int) -> int:
    return r * (r - 1) // 2


def positive_roots(r: int) -> list[tuple[int, ...]]:
    """e_i - e_j for i < j, as integer vectors."""
    roots = []
    for i in range(r):
        for j in range(i + 1, r):
            v = [0] * r
            v[i], v[j] = 1, -1
            roots.append(tuple(v))
    return roots


def from_word(word: Sequence[int], r: int) -> Permutation:
    w = identity(r)
    for i in word:
        w = w * s(i, r)
    return w


@lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Lexicographically smallest reduced word.

    The first letters of reduced words of w are exactly its left descents, so
    taking the smallest one and recursing on s_i w gives the lex-minimum.
    """
    word = []
    cur = w
    while not cur.is_identity():
        i = next(i for i in range(1, w.rank) if cur.has_left_descent(i))
        word.append(i)
        cur = s(i, w.rank) * cur
    return tuple(word)


def all_reduced_words(w: Permutation) -> set[tuple[int, ...]]:
    if w.rank > MAX_WORDS_RANK:
        raise ValueError(f"all_reduced_words is limited to rank <= {MAX_WORDS_RANK}")
    return set(_reduced_words(w))


@lru_cache(maxsize=None)
def _reduced_words(w: Permutation) -> tuple[tuple[int, ...], ...]:
    if w.is_identity():
        return ((),)
    out = []
    for i in range(1, w.rank):
        if w.has_left_descent(i):
            for tail in _reduced_words(s(i, w.rank) * w):
                out.append((i,) + tail)
    return tuple(out)


def bruhat_leq(y: Permutation, w: Permutation) -> bool:
    """Strong Bruhat order, by the tableau criterion.

    y <= w iff for every k the sorted prefix y(1..k) is entrywise <= the sorted
    prefix w(1..k). Tests cross-check this against subword enumeration.
    """
    if y.rank != w.rank:
        raise ValueError("permutations of different rank")
    for k in range(1, y.rank):
        a = sorted(y.one_line[:k])
        b = sorted(w.one_line[:k])
        if any(x > z for x, z in zip(a, b)):
            return False
    return True


def bruhat_interval_below(w: Permutation) -> list[Permutation]:
    return [y for y in all_permutations(w.rank) if bruhat_leq(y, w)]


def act_on_weight(w: Permutation, lam: Sequence[int]) -> tuple[int, ...]:
    """(w lam)_{w(i)} = lam_i."""
    if len(lam) != w.rank:
        raise ValueError(f"weight {tuple(lam)} does not have rank {w.rank}")
    out = [0] * w.rank
    for i, li in enumerate(lam, start=1):
        out[w(i) - 1] = li
    return tuple(out)


def act_on_flag(w: Permutation, flag: Sequence[int]) -> tuple[int, ...]:
    """Same permutation action, applied to a color sequence."""
    return act_on_weight(w, flag)


def pairing_2rho(lam: Sequence[int]) -> int:
    """<lam, 2 rho> = sum_i lam_i (r + 1 - 2i)."""
    r = len(lam)
    return sum(li * (r + 1 - 2 * i) for i, li in enumerate(lam, start=1))


def is_dominant(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def is_antidominant(lam: Sequence[int]) -> bool:
    return all(lam[i] <= lam[i + 1] for i in range(len(lam) - 1))


def minimal_sorter(lam: Sequence[int]) -> Permutation:
    """The shortest y with y(lam) weakly increasing.

    Equal entries keep their relative order: y(i) is the position of lam_i in
    the stable ascending sort.
    """
    order = sorted(range(len(lam)), key=lambda i: lam[i])
    y = [0] * len(lam)
    for pos, i in enumerate(order, start=1):
        y[i] = pos
    return Permutation(tuple(y))


def standard_flag(r: int) -> tuple[int, ...]:
    """c_0 = (gamma_1, ..., gamma_r) as color indices."""
    return tuple(range(1, r + 1))


def iter_weights(r: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """All vectors in [lo, hi]^r, lexicographic."""
    if r == 0:
        yield ()
        return
    for head in range(lo, hi + 1):
        for tail in iter_weights(r - 1, lo, hi):
            yield (head,) + tail


def partitions_in_box(r: int, max_part: int) -> list[tuple[int, ...]]:
    """Partitions with at most r parts (padded with zeros), parts <= max_part."""
    out = []

    def rec(prefix, bound):
        if len(prefix) == r:
            out.append(tuple(prefix))
            return
        for p in range(bound, -1, -1):
            rec(prefix + [p], p)

    rec([], max_part)
    return out
