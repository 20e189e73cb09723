"""
Executable checks of the identities relating the lattice models, the weight
tables and the operator calculus.

Every check returns a :class:`VerificationReport` with the exact number of
cases examined and, for each failure, the configuration needed to replay it
together with both sides of the identity.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .demazure import (
    dl_apply, dl_inv_apply, p_polynomial, r_polynomial, r_polynomial_symmetrized,
    tau, v_lambda,
)
from .laurent import LaurentPoly, poly_sum
from .lattice import (
    colored_system, enumerate_states, multisets_up_to, partition_function,
    partition_function_transfer, uncolored_system,
)
from .weights import (
    MINUS, PLUS, Family, fused_weight, monochrome_weight, rmatrix_aux,
    rmatrix_colored, rmatrix_uncolored, uncolored_weight,
)
from .weyl import (
    Permutation, act_on_flag, all_permutations, is_dominant, s, standard_flag,
)

__all__ = [
    "Failure", "VerificationReport", "ybe_sides", "check_ybe_uncolored",
    "check_ybe_colored", "check_ybe_aux", "check_local_lifting", "local_lifting_terms",
    "check_global_lifting", "check_colored_evaluation", "check_uncolored_pf", "check_flag_recursion",
    "check_monostatic", "check_symmetry", "jobs_from_env", "uncolored_pf_sweep",
    "global_lifting_sweep", "check_operator_algebra", "check_tau_properties",
    "monomial_test_set", "random_laurent",
]


def _jsonable(x):
    if isinstance(x, LaurentPoly):
        return x.to_dict()
    if isinstance(x, Permutation):
        return list(x.one_line)
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, Family):
        return x.value
    return x


@dataclass
class Failure:
    config: dict
    lhs: LaurentPoly
    rhs: LaurentPoly

    def to_dict(self) -> dict:
        return {"config": _jsonable(self.config), "lhs": self.lhs.to_dict(),
                "rhs": self.rhs.to_dict()}


@dataclass
class VerificationReport:
    check_name: str
    parameters: dict
    cases_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, config: dict, lhs: LaurentPoly, rhs: LaurentPoly) -> bool:
        self.cases_checked += 1
        if lhs != rhs:
            self.failures.append(Failure(dict(config), lhs, rhs))
            return False
        return True

    def merge(self, other: VerificationReport) -> VerificationReport:
        self.cases_checked += other.cases_checked
        self.failures.extend(other.failures)
        return self

    def to_dict(self, max_failures: int | None = 20) -> dict:
        shown = self.failures if max_failures is None else self.failures[:max_failures]
        return {
            "check": self.check_name,
            "parameters": _jsonable(self.parameters),
            "cases_checked": self.cases_checked,
            "failure_count": len(self.failures),
            "passed": self.passed,
            "failures": [f.to_dict() for f in shown],
            **({"details": _jsonable(self.details)} if self.details else {}),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={_jsonable(v)}" for k, v in self.parameters.items())
        return (f"{status} {self.check_name} ({params}): {self.cases_checked} cases, "
                f"{len(self.failures)} failures")


def jobs_from_env(default: int = 1) -> int:
    value = os.environ.get("BOSONIC_JOBS")
    if not value:
        return default
    try:
        return max(1, int(value))
    except ValueError:
        return default


def _chunks(items: list, n: int) -> list[list]:
    size = max(1, -(-len(items) // n))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _run_parallel(worker: Callable, args: tuple, cases: list, jobs: int,
                  report: VerificationReport) -> VerificationReport:
    """Run ``worker(args, chunk)`` over chunks of cases and merge the partial reports."""
    if jobs <= 1 or len(cases) < 2:
        return report.merge(worker(args, cases))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(worker, [args] * jobs, _chunks(cases, jobs)))
    for part in parts:
        report.merge(part)
    return report


# --------------------------------------------------------------------------
# Yang-Baxter equations
#
# One shared 3-vertex harness. Horizontal boundary spins a, b enter on the
# left (a bottom, b top), d, e leave on the right (d top, e bottom); the two
# columns share the vertical spins c (top) and f (bottom).
#
#   LHS = sum_{g,h,x} R(a,b,g,h) V_i(g,c,d,x) V_j(h,x,e,f)
#   RHS = sum_{g,h,x} V_j(b,c,g,x) V_i(a,x,h,f) R(h,g,d,e)
#
# with V_i, V_j the vertices of spectral parameter z_1, z_2 (ring of rank 2),
# vertex arguments (left, top, right, bottom) and R arguments (sw, nw, ne, se).
# --------------------------------------------------------------------------


def _flip_c_weights(vertex: Callable) -> Callable:
    """Fault injection: negate the weight of every absorbing (C-type) vertex."""
    def mutated(a, b, c, d, row):
        w = vertex(a, b, c, d, row)
        return -w if a != PLUS and c == PLUS else w
    return mutated


@lru_cache(maxsize=None)
def _ybe_model(kind: str, family: Family, r: int, k: int, fault: bool):
    """(horizontal spins, charge(spin), vertex, R on the left side, R on the right side)."""
    if kind == "uncolored":
        horiz = (PLUS, MINUS)

        def charge(sp):
            return 1 if sp == MINUS else 0

        def vertex(a, b, c, d, row):
            return uncolored_weight(family, a, b, c, d, row, 2)

        def r_left(sw, nw, ne, se):
            return rmatrix_uncolored(sw, nw, ne, se, 1, 2, 2)
        r_right = r_left
    elif kind == "colored":
        horiz = tuple(range(r + 1))

        def charge(sp):
            v = [0] * r
            if sp != PLUS:
                v[sp - 1] = 1
            return tuple(v)

        def vertex(a, b, c, d, row):
            return fused_weight(family, a, b, c, d, row, 2)

        def r_left(sw, nw, ne, se):
            return rmatrix_colored(sw, nw, ne, se, 1, 2, 2)
        r_right = r_left
    elif kind == "aux":
        horiz = tuple(range(r + 1))
        k_prev = k - 1 if k > 1 else r

        def charge(sp):
            return 1 if sp == k else 0

        def vertex(a, b, c, d, row):
            return monochrome_weight(family, k, a, b, c, d, row, 2)

        def r_left(sw, nw, ne, se):
            return rmatrix_aux(k, sw, nw, ne, se, 1, 2, 2)

        def r_right(sw, nw, ne, se):
            return rmatrix_aux(k_prev, sw, nw, ne, se, 1, 2, 2)
    else:
        raise ValueError(f"unknown Yang-Baxter model {kind!r}")
    if fault:
        vertex = _flip_c_weights(vertex)
    return horiz, charge, vertex, r_left, r_right


def _vadd(x, y, sign=1):
    if isinstance(x, int):
        return x + sign * y
    return tuple(a + sign * b for a, b in zip(x, y))


def _valid_vertical(x) -> bool:
    return (x >= 0) if isinstance(x, int) else min(x, default=0) >= 0


def ybe_sides(kind: str, family, r: int, k: int, a, b, c, d, e, f,
              fault: bool = False) -> tuple[LaurentPoly, LaurentPoly]:
    """Both 3-vertex partition functions for one boundary (replays a failure)."""
    family = Family.parse(family)
    horiz, charge, vertex, r_left, r_right = _ybe_model(kind, family, r, k, fault)
    lhs_terms, rhs_terms = [], []
    for g in horiz:
        for h in horiz:
            # LHS: R first, then the z_1 vertex on top and the z_2 vertex below.
            rw = r_left(a, b, g, h)
            if rw:
                x = _vadd(_vadd(c, charge(g)), charge(d), -1)
                if _valid_vertical(x):
                    w1 = vertex(g, c, d, x, 1)
                    if w1:
                        w2 = vertex(h, x, e, f, 2)
                        if w2:
                            lhs_terms.append(rw * w1 * w2)
            # RHS: the z_2 vertex on top, the z_1 vertex below, R last.
            rw = r_right(h, g, d, e)
            if rw:
                x = _vadd(_vadd(c, charge(b)), charge(g), -1)
                if _valid_vertical(x):
                    w1 = vertex(b, c, g, x, 2)
                    if w1:
                        w2 = vertex(a, x, h, f, 1)
                        if w2:
                            rhs_terms.append(w1 * w2 * rw)
    return poly_sum(lhs_terms, 2), poly_sum(rhs_terms, 2)


def _ybe_boundaries(kind: str, r: int, k: int, bound: int) -> list[tuple]:
    """Every boundary (a, b, c, d, e, f) with vertical spins inside the bound.

    Boundaries violating charge conservation are included: both sides must
    then vanish, which is part of what the sweep verifies.
    """
    horiz, *_ = _ybe_model(kind, Family.R, r, k, False)
    if kind == "colored":
        verticals = multisets_up_to(r, bound)
    else:
        verticals = list(range(bound + 1))
    return [(a, b, c, d, e, f) for a in horiz for b in horiz for c in verticals
            for d in horiz for e in horiz for f in verticals]


def _ybe_worker(args, cases) -> VerificationReport:
    kind, family, r, k, fault = args
    rep = VerificationReport("ybe", {})
    for (a, b, c, d, e, f) in cases:
        lhs, rhs = ybe_sides(kind, family, r, k, a, b, c, d, e, f, fault)
        rep.record({"a": a, "b": b, "c": c, "d": d, "e": e, "f": f}, lhs, rhs)
    return rep


def _check_ybe(name, kind, family, r, k, bound, fault, jobs, params) -> VerificationReport:
    family = Family.parse(family)
    report = VerificationReport(name, params)
    cases = _ybe_boundaries(kind, r, k, bound)
    return _run_parallel(_ybe_worker, (kind, family, r, k, fault), cases, jobs, report)


def check_ybe_uncolored(family="R", n_max: int = 4, fault: bool = False,
                        jobs: int = 1) -> VerificationReport:
    """Uncolored Yang-Baxter equation for every boundary with c, f <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return _check_ybe("ybe-uncolored", "uncolored", family, 1, 0, n_max, fault, jobs,
                      {"family": Family.parse(family), "n_max": n_max, "fault": fault})


def check_ybe_colored(family="R", r: int = 3, m_max: int = 3, fault: bool = False,
                      jobs: int = 1) -> VerificationReport:
    """Colored (fused) Yang-Baxter equation; vertical spins of total size <= m_max."""
    return _check_ybe("ybe-colored", "colored", family, r, 0, m_max, fault, jobs,
                      {"family": Family.parse(family), "rank": r, "m_max": m_max,
                       "fault": fault})


def check_ybe_aux(family="R", r: int = 3, k: int | None = None, m_max: int = 3,
                  fault: bool = False, jobs: int = 1) -> VerificationReport:
    """Monochrome-column Yang-Baxter equations.

    The column has color k; the R-vertex is labeled k on the left side and
    k-1 on the right side (k-1 read cyclically, so 0 means r). ``k=None``
    runs every k in 1..r.
    """
    ks = range(1, r + 1) if k is None else [k]
    report = VerificationReport("ybe-aux", {"family": Family.parse(family), "rank": r,
                                            "k": k if k is not None else "all",
                                            "m_max": m_max, "fault": fault})
    for kk in ks:
        if not 1 <= kk <= r:
            raise ValueError(f"k={kk} outside 1..{r}")
        report.merge(_check_ybe("ybe-aux", "aux", family, r, kk, m_max, fault, jobs, {}))
    return report


# --------------------------------------------------------------------------
# Lifting
# --------------------------------------------------------------------------


def _project_h(spin: int) -> int:
    return PLUS if spin == PLUS else MINUS


def local_lifting_terms(a: int, b: tuple, C: int, D: int, family="R"
                        ) -> list[tuple[int, tuple, LaurentPoly]]:
    """All colored completions (c, d) of (a, b) projecting to (C, D), with weights."""
    r = len(b)
    outs = [PLUS] if C == PLUS else list(range(1, r + 1))
    terms = []
    for c in outs:
        for d in multisets_up_to(r, D):
            if sum(d) != D:
                continue
            w = fused_weight(family, a, tuple(b), c, d, 1, 1)
            if w:
                terms.append((c, d, w))
    return terms


def check_local_lifting(r: int = 3, n_max: int = 3, family="R") -> VerificationReport:
    """Uncolored weight equals the sum of colored weights over colored outputs."""
    family = Family.parse(family)
    report = VerificationReport("local-lifting", {"family": family, "rank": r,
                                                  "n_max": n_max})
    for A in (PLUS, MINUS):
        lifts_a = [PLUS] if A == PLUS else list(range(1, r + 1))
        for B in range(n_max + 1):
            lifts_b = [m for m in multisets_up_to(r, B) if sum(m) == B]
            for C in (PLUS, MINUS):
                D = B + (A == MINUS) - (C == MINUS)
                if not 0 <= D <= n_max:
                    continue
                lhs = uncolored_weight(family, A, B, C, D, 1, 1)
                for a in lifts_a:
                    for b in lifts_b:
                        rhs = poly_sum((w for _, _, w in local_lifting_terms(a, b, C, D, family)), 1)
                        report.record({"A": A, "B": B, "C": C, "D": D, "a": a, "b": b},
                                      lhs, rhs)
    return report


def _distinct_rearrangements(flag: Sequence[int]) -> list[tuple[int, ...]]:
    return sorted(set(permutations(flag)))


def check_global_lifting(lam: Sequence[int], flag: Sequence[int] | None = None,
                         r: int | None = None, family="R") -> VerificationReport:
    """Z(uncolored) = sum over right flags d of Z(colored; lam, c, d).

    Holds for the R-family; for the P-family the failures are the expected
    counterexamples (recorded, not raised).
    """
    lam = tuple(lam)
    r = r or len(lam)
    flag = tuple(flag) if flag is not None else standard_flag(r)
    family = Family.parse(family)
    report = VerificationReport("global-lifting", {"family": family, "lambda": lam,
                                                   "top_flag": flag})
    lhs = partition_function(uncolored_system(lam, family))
    rhs = poly_sum((partition_function(colored_system(lam, flag, d, family))
                    for d in _distinct_rearrangements(flag)), r)
    report.record({"lambda": lam, "top_flag": flag}, lhs, rhs)
    return report


# --------------------------------------------------------------------------
# Partition-function theorems
# --------------------------------------------------------------------------


def check_monostatic(lam: Sequence[int], top_flag: Sequence[int] | None = None,
                     family="R") -> VerificationReport:
    """Z(S_{lam,c,c}) = t^{l(w)} z^lam with exactly one state, c = w c_0.

    ``top_flag=None`` sweeps all proper flags.
    """
    lam = tuple(lam)
    r = len(lam)
    family = Family.parse(family)
    c0 = standard_flag(r)
    if top_flag is None:
        ws = list(all_permutations(r))
    else:
        ws = [w for w in all_permutations(r) if act_on_flag(w, c0) == tuple(top_flag)]
        if not ws:
            raise ValueError(f"{tuple(top_flag)} is not a proper flag")
    report = VerificationReport("monostatic", {"family": family, "lambda": lam,
                                               "top_flag": top_flag or "all"})
    for w in ws:
        c = act_on_flag(w, c0)
        spec = colored_system(lam, c, c, family)
        expected = LaurentPoly.monomial(lam, w.length())
        value = partition_function(spec)
        report.record({"top_flag": c, "quantity": "partition_function"}, value, expected)
        if top_flag is not None:
            report.details["value"] = value
        n_states = sum(1 for _ in enumerate_states(spec))
        report.record({"top_flag": c, "quantity": "state_count"},
                      LaurentPoly.const(n_states, r), LaurentPoly.one(r))
    return report


def check_colored_evaluation(lam: Sequence[int], r: int | None = None, family="R"
                  ) -> VerificationReport:
    """Z(S_{lam, y c_0, w c_0}) = tau^lam_{w,y} for all pairs (w, y)."""
    lam = tuple(lam)
    r = r or len(lam)
    family = Family.parse(family)
    c0 = standard_flag(r)
    report = VerificationReport("colored-evaluation", {"family": family, "lambda": lam})
    for w in all_permutations(r):
        for y in all_permutations(r):
            spec = colored_system(lam, act_on_flag(y, c0), act_on_flag(w, c0), family)
            report.record({"w": w, "y": y}, partition_function(spec), tau(lam, w, y))
    return report


def check_uncolored_pf(lam: Sequence[int], r: int | None = None) -> VerificationReport:
    """Z_P = P_lam, Z_R = R_lam, Z_R = v_lam Z_P, cross-checked three ways."""
    lam = tuple(lam)
    report = VerificationReport("uncolored-pf", {"lambda": lam})
    z_p = partition_function(uncolored_system(lam, "P"))
    z_r = partition_function(uncolored_system(lam, "R"))
    oracle_r = r_polynomial_symmetrized(lam)
    oracle_p = oracle_r.exact_div(v_lambda(lam))
    report.record({"identity": "Z_P = P (operator)"}, z_p, p_polynomial(lam))
    report.record({"identity": "Z_R = R (operator)"}, z_r, r_polynomial(lam))
    report.record({"identity": "Z_P = P (symmetrization)"}, z_p, oracle_p)
    report.record({"identity": "Z_R = R (symmetrization)"}, z_r, oracle_r)
    report.record({"identity": "Z_R = v Z_P"}, z_r, v_lambda(lam) * z_p)
    report.record({"identity": "Z_P transfer"}, z_p,
                  partition_function_transfer(uncolored_system(lam, "P")))
    report.record({"identity": "Z_R transfer"}, z_r,
                  partition_function_transfer(uncolored_system(lam, "R")))
    return report


def check_flag_recursion(lam: Sequence[int], r: int | None = None, i: int | None = None,
                   w: Permutation | None = None, family="R") -> VerificationReport:
    """Z(S_{lam,c,s_i d}) = L_i^{+-1} Z(S_{lam,c,d}), d = w c_0, over all top flags c.

    L_i if s_i w > w, otherwise L_i^{-1}. ``i=None``/``w=None`` sweep all values.
    """
    lam = tuple(lam)
    r = r or len(lam)
    family = Family.parse(family)
    c0 = standard_flag(r)
    report = VerificationReport("flag-recursion", {"family": family, "lambda": lam,
                                             "i": i if i is not None else "all",
                                             "w": w if w is not None else "all"})
    for ii in ([i] if i is not None else range(1, r)):
        for ww in ([w] if w is not None else all_permutations(r)):
            d = act_on_flag(ww, c0)
            d_moved = act_on_flag(s(ii, r), d)
            up = (s(ii, r) * ww).length() > ww.length()
            op = dl_apply if up else dl_inv_apply
            for y in all_permutations(r):
                c = act_on_flag(y, c0)
                before = partition_function(colored_system(lam, c, d, family))
                after = partition_function(colored_system(lam, c, d_moved, family))
                report.record({"i": ii, "w": ww, "top_flag": c,
                               "direction": "L" if up else "L^-1"}, after, op(ii, before))
    return report


def check_symmetry(polys: Iterable[tuple[dict, LaurentPoly]], name="symmetry"
                   ) -> VerificationReport:
    """Every polynomial is invariant under all permutations of z."""
    report = VerificationReport(name, {})
    for config, f in polys:
        for w in all_permutations(f.rank):
            report.record({**config, "w": w}, f.permute_z(w), f)
    return report


def uncolored_pf_sweep(ranks: Iterable[int] = (1, 2, 3), max_part: int = 4
                       ) -> VerificationReport:
    from .weyl import partitions_in_box
    report = VerificationReport("uncolored-pf", {"ranks": list(ranks), "max_part": max_part})
    for r in ranks:
        for lam in partitions_in_box(r, max_part):
            report.merge(check_uncolored_pf(lam))
    return report


def global_lifting_sweep(ranks: Iterable[int] = (1, 2, 3), max_part: int = 3,
                         family="R", flags: str = "proper") -> VerificationReport:
    """Global lifting over all partitions in the box and all top flags.

    ``flags='proper'`` uses all proper flags; ``'all'`` adds every color
    sequence (repeated colors allowed).
    """
    from .weyl import iter_weights, partitions_in_box
    family = Family.parse(family)
    report = VerificationReport("global-lifting", {"family": family, "max_part": max_part,
                                                   "flags": flags})
    for r in ranks:
        if flags == "all":
            tops = list(iter_weights(r, 1, r))
        else:
            tops = [act_on_flag(w, standard_flag(r)) for w in all_permutations(r)]
        for lam in partitions_in_box(r, max_part):
            assert is_dominant(lam)
            for c in tops:
                report.merge(check_global_lifting(lam, c, r, family))
    return report


# --------------------------------------------------------------------------
# Operator algebra and tau
# --------------------------------------------------------------------------


def monomial_test_set(r: int, bound: int = 2) -> list[LaurentPoly]:
    """z^mu for every mu with |mu_i| <= bound."""
    from .weyl import iter_weights
    return [LaurentPoly.monomial(mu) for mu in iter_weights(r, -bound, bound)]


def random_laurent(rng, r: int, n_terms: int = 4, z_bound: int = 2, t_bound: int = 2,
                   coeff_bound: int = 5) -> LaurentPoly:
    """A random Laurent polynomial, reproducible from ``rng`` (a random.Random)."""
    terms = {}
    for _ in range(n_terms):
        key = tuple(rng.randint(-z_bound, z_bound) for _ in range(r)) + (
            rng.randint(-t_bound, t_bound),)
        terms[key] = terms.get(key, 0) + rng.choice(
            [c for c in range(-coeff_bound, coeff_bound + 1) if c])
    return LaurentPoly(r, terms)


def _operator_families():
    from .demazure import partial_circ_op, partial_op
    return {"partial": partial_op, "partial_circ": partial_circ_op, "dl": dl_apply}


def _apply_word(op, word, f):
    for i in reversed(word):
        f = op(i, f)
    return f


def _operator_identities(report: VerificationReport, f: LaurentPoly, label) -> None:
    """Single-index identities and braid/commutation relations on one input."""
    from .demazure import partial_circ_op, partial_op
    r = f.rank
    q = LaurentPoly.t(r)
    for i in range(1, r):
        cfg = {"input": label, "i": i}
        lf = dl_apply(i, f)
        report.record({**cfg, "identity": "quadratic"}, dl_apply(i, lf), (q - 1) * lf + q * f)
        report.record({**cfg, "identity": "inverse"}, dl_inv_apply(i, lf), f)
        report.record({**cfg, "identity": "partial - partial_circ = 1"},
                      partial_op(i, f) - partial_circ_op(i, f), f)
        report.record({**cfg, "identity": "L + 1 = q (L^-1 + 1)"},
                      lf + f, q * (dl_inv_apply(i, f) + f))
        deform = 1 - LaurentPoly.monomial([-1 if k == i - 1 else 1 if k == i else 0
                                           for k in range(r)], 1)
        report.record({**cfg, "identity": "L + 1 = partial (1 - q z^-alpha)"},
                      lf + f, partial_op(i, deform * f))
        pf = partial_op(i, f)
        report.record({**cfg, "identity": "partial idempotent"}, partial_op(i, pf), pf)
    for name, op in _operator_families().items():
        for i in range(1, r - 1):
            report.record({"input": label, "operator": name, "identity": "braid", "i": i},
                          _apply_word(op, (i, i + 1, i), f), _apply_word(op, (i + 1, i, i + 1), f))
        for i in range(1, r):
            for j in range(i + 2, r):
                report.record({"input": label, "operator": name, "identity": "commute",
                               "i": i, "j": j},
                              _apply_word(op, (i, j), f), _apply_word(op, (j, i), f))


def check_operator_algebra(r: int = 3, bound: int = 2, random_count: int = 0,
                           seed: int = 0) -> VerificationReport:
    """Hecke/Demazure relations on the monomial test set and optional random inputs.

    Covers the quadratic relation, L^{-1} L = 1, partial = partial_circ + 1,
    both single-division forms of L + 1, idempotence of partial, braid and
    commutation relations for all three operator families, independence of
    the reduced word, the Bruhat-sum expansion of partial_w, the Omega oracle,
    the dot-action sign rule, and the R-polynomial duality.
    """
    import random

    from .demazure import (
        demazure_word_apply, dot_action, omega, omega_alternating_sum,
        omega_of_deformed_monomial,
    )
    from .weyl import (
        all_reduced_words, bruhat_leq, longest_element, num_positive_roots,
        partitions_in_box,
    )
    report = VerificationReport("operators", {"rank": r, "bound": bound,
                                              "random_count": random_count, "seed": seed})
    inputs = [(f"z^{list(m.terms)[0][:r]}", m) for m in monomial_test_set(r, bound)]
    rng = random.Random(seed)
    for n in range(random_count):
        inputs.append((f"random#{n}", random_laurent(rng, r)))
    perms = all_permutations(r)
    w0 = longest_element(r)
    for label, f in inputs:
        _operator_identities(report, f, label)
        for w in perms:
            words = sorted(all_reduced_words(w)) if r <= 4 else [None]
            for name, op in _operator_families().items():
                ref = _apply_word(op, words[0], f)
                for word in words[1:]:
                    report.record({"input": label, "operator": name, "w": w, "word": word,
                                   "identity": "reduced-word independence"},
                                  _apply_word(op, word, f), ref)
            report.record({"input": label, "w": w, "identity": "Bruhat expansion"},
                          demazure_word_apply(w, f),
                          poly_sum((demazure_word_apply(y, f, shifted=True)
                                    for y in perms if bruhat_leq(y, w)), r))
        om = omega(f)
        report.record({"input": label, "identity": "Omega alternating sum"},
                      om, omega_alternating_sum(f))
    for mu_poly in monomial_test_set(r, bound):
        mu = list(mu_poly.terms)[0][:r]
        base = omega(mu_poly)
        for w in perms:
            sign = -1 if w.length() % 2 else 1
            report.record({"mu": mu, "w": w, "identity": "dot action"},
                          omega(LaurentPoly.monomial(dot_action(w, mu))), base * sign)
    from .weyl import act_on_weight
    for lam in partitions_in_box(r, 3):
        report.record({"lambda": lam, "identity": "R duality"},
                      omega_of_deformed_monomial(act_on_weight(w0, lam)),
                      r_polynomial(lam).invert_t().scale_monomial([0] * r, num_positive_roots(r)))
    return report


def check_tau_properties(r: int = 3, bound: int = 2) -> VerificationReport:
    """Sums over w of tau, their y-independence and value, and the involution."""
    from .demazure import omega_of_deformed_monomial
    from .weyl import (
        act_on_weight, is_antidominant, iter_weights, longest_element, num_positive_roots,
    )
    report = VerificationReport("tau", {"rank": r, "bound": bound})
    perms = all_permutations(r)
    w0 = longest_element(r)
    npos = num_positive_roots(r)
    for lam in iter_weights(r, -bound, bound):
        sums = {y: poly_sum((tau(lam, w, y) for w in perms), r) for y in perms}
        ref = omega_of_deformed_monomial(lam)
        for y, total in sums.items():
            report.record({"lambda": lam, "y": y, "identity": "sum over w"}, total, ref)
        if is_dominant(lam):
            report.record({"lambda": lam, "identity": "dominant sum"}, ref, r_polynomial(lam))
        if is_antidominant(lam):
            dual = r_polynomial(act_on_weight(w0, lam)).invert_t()
            report.record({"lambda": lam, "identity": "antidominant sum"}, ref,
                          dual.scale_monomial([0] * r, npos))
        neg = tuple(-x for x in lam)
        for w in perms:
            for y in perms:
                rhs = tau(neg, w * w0, y * w0).invert_z().invert_t()
                report.record({"lambda": lam, "w": w, "y": y, "identity": "involution"},
                              tau(lam, w, y), rhs.scale_monomial([0] * r, npos))
    return report
