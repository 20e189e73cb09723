"""
Divided-difference calculus on Laurent polynomials.

The Hecke parameter q is the ring variable t throughout. With
z^{alpha_i} = z_i / z_{i+1} and s_i swapping z_i, z_{i+1}:

* Demazure operator        d_i f  = (f - z^{-alpha_i} s_i f) / (1 - z^{-alpha_i})
* its shifted companion    d'_i f = (f - s_i f) / (z^{alpha_i} - 1)       (d_i = d'_i + 1)
* Demazure-Lusztig         L_i f  = (z^a f - s_i f - q f + q z^a s_i f) / (z^a - 1) - f
* inverse                  L_i^{-1} f = (f - s_i f - f/q + z^{-a} s_i f / q) / (z^{-a} - 1)

Every quotient is computed with :meth:`LaurentPoly.exact_div`, so an algebra
mistake surfaces as ``NotDivisible`` instead of a silently wrong answer.

>>> from bosonic.laurent import LaurentPoly
>>> z1 = LaurentPoly.z(1, 2)
>>> str(partial_op(1, z1))
'z1 + z2'
>>> str(dl_apply(1, z1))
'z2'
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .laurent import LaurentPoly, poly_sum
from .weyl import (
    Permutation, all_permutations, identity, is_dominant, longest_element,
    positive_roots, reduced_word, s,
)

__all__ = [
    "NonDominant", "partial_op", "partial_circ_op", "dl_apply", "dl_inv_apply",
    "dl_word_apply", "dl_inv_word_apply", "demazure_word_apply", "omega",
    "omega_alternating_sum", "omega_of_deformed_monomial", "r_polynomial",
    "r_polynomial_symmetrized", "r_polynomial_rational_value", "v_m", "v_lambda",
    "p_polynomial", "tau", "theta_sum", "dot_action",
]


class NonDominant(ValueError):
    pass


def _check_index(i: int, f: LaurentPoly):
    if not 1 <= i < f.rank:
        raise ValueError(f"simple reflection index {i} outside 1..{f.rank - 1}")


def _zi(i: int, r: int) -> LaurentPoly:
    return LaurentPoly.z(i, r)


def _root_binomial(i: int, r: int) -> LaurentPoly:
    """z_i - z_{i+1}, the common denominator after clearing z-powers."""
    return _zi(i, r) - _zi(i + 1, r)


def partial_op(i: int, f: LaurentPoly) -> LaurentPoly:
    """Demazure operator: (z_i f - z_{i+1} s_i f) / (z_i - z_{i+1})."""
    _check_index(i, f)
    r = f.rank
    num = _zi(i, r) * f - _zi(i + 1, r) * f.swap_z(i)
    return num.exact_div(_root_binomial(i, r))


def partial_circ_op(i: int, f: LaurentPoly) -> LaurentPoly:
    """(f - s_i f) / (z^{alpha_i} - 1) = z_{i+1} (f - s_i f) / (z_i - z_{i+1})."""
    _check_index(i, f)
    r = f.rank
    num = _zi(i + 1, r) * (f - f.swap_z(i))
    return num.exact_div(_root_binomial(i, r))


def dl_apply(i: int, f: LaurentPoly) -> LaurentPoly:
    """Demazure-Lusztig operator L_i (q = t), via the single-division form of L_i + 1."""
    _check_index(i, f)
    r = f.rank
    q = LaurentPoly.t(r)
    zi, zj = _zi(i, r), _zi(i + 1, r)
    sf = f.swap_z(i)
    num = zi * f - zj * sf - q * zj * f + q * zi * sf
    return num.exact_div(_root_binomial(i, r)) - f


def dl_inv_apply(i: int, f: LaurentPoly) -> LaurentPoly:
    """Inverse Demazure-Lusztig operator, cleared by z_i:

    (z_i f - z_i s_i f - q^{-1} z_i f + q^{-1} z_{i+1} s_i f) / (z_{i+1} - z_i).
    """
    _check_index(i, f)
    r = f.rank
    qinv = LaurentPoly.t(r, -1)
    zi, zj = _zi(i, r), _zi(i + 1, r)
    sf = f.swap_z(i)
    num = zi * f - zi * sf - qinv * zi * f + qinv * zj * sf
    return num.exact_div(zj - zi)


def _word(w, rank: int) -> tuple[int, ...]:
    if isinstance(w, Permutation):
        if w.rank != rank:
            raise ValueError(f"permutation of rank {w.rank} applied in rank {rank}")
        return reduced_word(w)
    return tuple(w)


def dl_word_apply(w, f: LaurentPoly) -> LaurentPoly:
    """L_w = L_{i_1} ... L_{i_k} for a reduced word (i_1, ..., i_k) of w.

    ``w`` is a Permutation (its lexicographically smallest reduced word is
    used) or an explicit word.
    """
    for i in reversed(_word(w, f.rank)):
        f = dl_apply(i, f)
    return f


def dl_inv_word_apply(w, f: LaurentPoly) -> LaurentPoly:
    """L_w^{-1} = L_{i_k}^{-1} ... L_{i_1}^{-1}."""
    for i in _word(w, f.rank):
        f = dl_inv_apply(i, f)
    return f


def demazure_word_apply(w, f: LaurentPoly, shifted: bool = False) -> LaurentPoly:
    """d_w = d_{i_1} ... d_{i_k} (or the shifted operators d'_w)."""
    op = partial_circ_op if shifted else partial_op
    for i in reversed(_word(w, f.rank)):
        f = op(i, f)
    return f


def omega(f: LaurentPoly) -> LaurentPoly:
    """Omega = Demazure operator of the longest element."""
    return demazure_word_apply(longest_element(f.rank), f)


def _sign(w: Permutation) -> int:
    return -1 if w.length() % 2 else 1


def _vandermonde(r: int) -> LaurentPoly:
    out = LaurentPoly.one(r)
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            out = out * (_zi(i, r) - _zi(j, r))
    return out


def _staircase(r: int) -> tuple[int, ...]:
    return tuple(range(r - 1, -1, -1))


def omega_alternating_sum(f: LaurentPoly) -> LaurentPoly:
    """Weyl character formula form of Omega:

    sum_w sign(w) w(z^delta f) / prod_{i<j} (z_i - z_j), delta = (r-1, ..., 0).
    """
    r = f.rank
    shifted = f.scale_monomial(_staircase(r))
    num = poly_sum((shifted.permute_z(w) * _sign(w) for w in all_permutations(r)), r)
    return num.exact_div(_vandermonde(r))


def dot_action(w: Permutation, mu: Sequence[int]) -> tuple[int, ...]:
    """w . mu = w(mu + delta) - delta (integral form of the rho-shifted action)."""
    from .weyl import act_on_weight
    d = _staircase(len(mu))
    moved = act_on_weight(w, [m + x for m, x in zip(mu, d)])
    return tuple(m - x for m, x in zip(moved, d))


def _deformation_factor(r: int) -> LaurentPoly:
    """prod over positive roots of (1 - q z^{-alpha})."""
    out = LaurentPoly.one(r)
    for root in positive_roots(r):
        out = out * (1 - LaurentPoly.monomial([-x for x in root], 1))
    return out


@lru_cache(maxsize=None)
def omega_of_deformed_monomial(mu: tuple[int, ...]) -> LaurentPoly:
    """Omega( prod_{alpha>0} (1 - q z^{-alpha}) z^mu ) for any integer vector mu."""
    r = len(mu)
    return omega(_deformation_factor(r) * LaurentPoly.monomial(mu))


def _require_dominant(lam):
    if not is_dominant(lam):
        raise NonDominant(f"{tuple(lam)} is not dominant")


def r_polynomial(lam: Sequence[int]) -> LaurentPoly:
    """Hall-Littlewood R-polynomial: Omega applied to the deformed monomial."""
    lam = tuple(lam)
    _require_dominant(lam)
    return omega_of_deformed_monomial(lam)


def r_polynomial_symmetrized(lam: Sequence[int]) -> LaurentPoly:
    """Independent evaluation of R_lambda by symmetrization with cleared denominators.

    prod_{alpha>0} (1 - z^{-alpha}) = V(z) / z^delta, so
    R_lambda = V^{-1} sum_w sign(w) w( z^delta prod(1 - q z^{-alpha}) z^lambda ).
    """
    lam = tuple(lam)
    _require_dominant(lam)
    r = len(lam)
    inner = _deformation_factor(r) * LaurentPoly.monomial(
        [a + b for a, b in zip(lam, _staircase(r))])
    num = poly_sum((inner.permute_z(w) * _sign(w) for w in all_permutations(r)), r)
    return num.exact_div(_vandermonde(r))


def r_polynomial_rational_value(lam: Sequence[int], z_values: Sequence, q_value) -> Fraction:
    """The uncleared symmetrization sum evaluated at a rational point:

    sum_w prod_{i<j} (1 - q z_{w(j)}/z_{w(i)}) / (1 - z_{w(j)}/z_{w(i)}) * prod_i z_{w(i)}^{lam_i}.
    Requires pairwise distinct nonzero z values.
    """
    lam = tuple(lam)
    _require_dominant(lam)
    r = len(lam)
    z = [Fraction(x) for x in z_values]
    q = Fraction(q_value)
    total = Fraction(0)
    for w in all_permutations(r):
        zw = [z[w(i) - 1] for i in range(1, r + 1)]
        term = Fraction(1)
        for i in range(r):
            term *= zw[i] ** lam[i]
            for j in range(i + 1, r):
                ratio = zw[j] / zw[i]
                term *= (1 - q * ratio) / (1 - ratio)
        total += term
    return total


def v_m(m: int, rank: int = 1) -> LaurentPoly:
    """prod_{i=1}^m (1 - t^i)/(1 - t) = prod_{i=1}^m (1 + t + ... + t^{i-1})."""
    out = LaurentPoly.one(rank)
    for i in range(1, m + 1):
        out = out * poly_sum((LaurentPoly.t(rank, k) for k in range(i)), rank)
    return out


def v_lambda(lam: Sequence[int]) -> LaurentPoly:
    """prod over distinct part values of v_{multiplicity}."""
    r = len(lam)
    out = LaurentPoly.one(r)
    for m in Counter(lam).values():
        out = out * v_m(m, r)
    return out


@lru_cache(maxsize=None)
def _p_polynomial(lam: tuple[int, ...]) -> LaurentPoly:
    return r_polynomial(lam).exact_div(v_lambda(lam))


def p_polynomial(lam: Sequence[int]) -> LaurentPoly:
    """Hall-Littlewood P-polynomial R_lambda / v_lambda(t)."""
    lam = tuple(lam)
    _require_dominant(lam)
    return _p_polynomial(lam)


@lru_cache(maxsize=None)
def _tau(lam: tuple[int, ...], w: Permutation, y: Permutation) -> LaurentPoly:
    start = dl_inv_word_apply(y, LaurentPoly.monomial(lam))
    return dl_word_apply(w, start).scale_monomial([0] * len(lam), y.length())


def tau(lam: Sequence[int], w: Permutation, y: Permutation) -> LaurentPoly:
    """tau^lambda_{w,y} = q^{l(y)} L_w L_y^{-1} z^lambda, for any integer vector lambda."""
    lam = tuple(int(x) for x in lam)
    if w.rank != len(lam) or y.rank != len(lam):
        raise ValueError("permutations and weight must share the rank")
    return _tau(lam, w, y)


def dl_orbit(f: LaurentPoly) -> dict[Permutation, LaurentPoly]:
    """{w: L_w f} for all w, built along the left weak order (L_{s_i w} = L_i L_w)."""
    r = f.rank
    out = {identity(r): f}
    for w in all_permutations(r):  # sorted by length
        if w in out:
            continue
        i = next(i for i in range(1, r) if w.has_left_descent(i))
        out[w] = dl_apply(i, out[s(i, r) * w])
    return out


def theta_sum(f: LaurentPoly) -> LaurentPoly:
    """Theta f = sum over the Weyl group of L_w f."""
    return poly_sum(dl_orbit(f).values(), f.rank)
