"""Jack and Macdonald polynomials in superspace, operator actions, duality.

Polynomials are built sector by sector, least dominant first:

    P_L = m_L - sum_{G < L} <m_L, P_G> / <P_G, P_G> * P_G

which is the unique monic element of ``m_L + span{m_G : G < L}`` orthogonal
to every lower ``P_G``.  The Gram entries ``<m_L, m_O>`` come from the
m-to-p transition and the diagonal p-basis form.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from .coeffield import ONE, ZERO, RatFunc, const, substitute, var
from .pieri import hooks, norm_squared, strip_sign
from .superalgebra import (
    SymSuperFunc,
    _m_in_p_sector,
    collect,
    expand,
    oracle_variables,
    to_m,
    to_p,
    z_alpha,
    z_qt,
)
from .superpartitions import (
    NEW_CIRCLE,
    SuperPartition,
    classify_strip,
    conjugate,
    dominance_leq,
    enumerate_superpartitions,
    strips,
)

__all__ = [
    "JackExpansion",
    "jack",
    "macdonald",
    "jack_sector",
    "norm_squared",
    "norm_oracle",
    "expand_in_basis",
    "apply_e0tilde",
    "apply_Qtilde",
    "apply_qperp",
    "oracle_e0tilde",
    "oracle_Qtilde",
    "oracle_qperp",
    "omega_hat",
    "invert_alpha",
    "jack_limit",
]


class JackExpansion(SymSuperFunc):
    """A monic m-basis expansion tagged with its index and field."""

    __slots__ = ("lam", "field")

    def __init__(self, lam: SuperPartition, coeffs, field: str):
        super().__init__("m", coeffs)
        self.lam = lam
        self.field = field

    def to_json(self) -> dict:
        body = super().to_json()
        return {"lambda": str(self.lam), "basis": "m", "field": self.field, "coeffs": body["terms"]}


_lock = threading.Lock()
_cache: dict = {}


def _diag(field):
    return z_alpha if field == "alpha" else z_qt


def _gram(n: int, m: int, field: str) -> dict:
    """``<m_O, m_G>`` for every pair in the sector."""
    trans = _m_in_p_sector(n, m)
    diag = _diag(field)
    zs = {sp: diag(sp) for sp in enumerate_superpartitions(n, m)}
    basis = enumerate_superpartitions(n, m)
    G = {}
    for i, om in enumerate(basis):
        for ga in basis[i:]:
            t1, t2 = trans[om], trans[ga]
            val = ZERO
            acc = defaultdict(Fraction)
            for pi, c in t1.items():
                d = t2.get(pi)
                if d:
                    acc[pi] += c * d
            for pi, c in acc.items():
                if c:
                    val = val + zs[pi] * const(c)
            G[om, ga] = G[ga, om] = val
    return G


def jack_sector(n: int, m: int, field: str = "alpha") -> dict:
    """All polynomials of degree ``(n|m)``, keyed by superpartition."""
    key = (n, m, field)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    basis = enumerate_superpartitions(n, m)
    G = _gram(n, m, field)
    polys: dict = {}
    norms: dict = {}
    for lam in reversed(basis):
        coeffs = {lam: ONE}
        for ga in reversed(basis):
            if ga == lam or not dominance_leq(ga, lam):
                continue
            pg = polys[ga]
            proj = ZERO
            for om, c in pg.coeffs.items():
                proj = proj + c * G[lam, om]
            if proj.is_zero():
                continue
            if norms[ga].is_zero():
                raise ArithmeticError(f"singular Gram system at {ga}")
            f = proj / norms[ga]
            for om, c in pg.coeffs.items():
                coeffs[om] = coeffs.get(om, ZERO) - f * c
        poly = JackExpansion(lam, coeffs, field)
        # <P, P> = <m_lam, P> since P - m_lam is orthogonal to P
        nrm = ZERO
        for om, c in poly.coeffs.items():
            nrm = nrm + c * G[lam, om]
        polys[lam] = poly
        norms[lam] = nrm
    with _lock:
        _cache[key] = polys
        _cache[key + ("norms",)] = norms
    return polys


def jack(lam: SuperPartition) -> JackExpansion:
    return jack_sector(lam.n, lam.m, "alpha")[lam]


def macdonald(lam: SuperPartition) -> JackExpansion:
    return jack_sector(lam.n, lam.m, "qt")[lam]


def norm_oracle(lam: SuperPartition, field: str = "alpha") -> RatFunc:
    """``<P_lam, P_lam>`` from the Gram-Schmidt data."""
    jack_sector(lam.n, lam.m, field)
    return _cache[(lam.n, lam.m, field, "norms")][lam]


def expand_in_basis(f: SymSuperFunc, field: str = "alpha") -> dict:
    """Coefficients of ``f`` on the Jack (or Macdonald) basis, by triangular solve."""
    rest = dict(to_m(f).coeffs)
    out = {}
    by_sector = defaultdict(list)
    for sp in rest:
        by_sector[sp.degree].append(sp)
    for (n, m) in sorted(by_sector):
        polys = jack_sector(n, m, field)
        for lam in enumerate_superpartitions(n, m):
            c = rest.get(lam)
            if c is None or c.is_zero():
                continue
            out[lam] = c
            for om, v in polys[lam].coeffs.items():
                nv = rest.get(om, ZERO) - c * v
                if nv.is_zero():
                    rest.pop(om, None)
                else:
                    rest[om] = nv
    return out


# ---------------------------------------------------------------------------
# closed-form actions


def _new_circle(cls):
    return next(c for c, k in cls.cells.items() if k == NEW_CIRCLE)


def _col_product_upper(lam, omega, col):
    val = ONE
    for s in sorted(lam.cells("circled")):
        if s[1] == col:
            val = val * hooks(lam, s).upper / hooks(omega, s).upper
    return val


def apply_e0tilde(lam: SuperPartition) -> dict:
    """Coefficients of ``e~_0 P_lam`` on Jack polynomials."""
    out = {}
    for omega, cls in strips(lam, 0, "etilde"):
        i, j = _new_circle(cls)
        out[omega] = _col_product_upper(lam, omega, j) * strip_sign(cls)
    return out


def apply_Qtilde(lam: SuperPartition) -> dict:
    """Coefficients of ``Q~ P_lam``, with ``Q~ = sum theta_i z_i d/dz_i``."""
    a = var("a")
    out = {}
    for omega, cls in strips(lam, 0, "etilde"):
        i, j = _new_circle(cls)
        val = _col_product_upper(lam, omega, j) * strip_sign(cls) * (1 - i + a * (j - 1)) / a
        if not val.is_zero():
            out[omega] = val
    return out


def apply_qperp(lam: SuperPartition) -> dict:
    """Coefficients of ``q_perp P_lam``: one circle turned into a square."""
    out = {}
    for r, c in lam.circles():
        star = list(lam.star) + [0] * (len(lam.circled) - len(lam.star))
        star[r - 1] += 1
        omega = SuperPartition(lam.circled, tuple(star))
        val = ONE
        for s in sorted(lam.cells("circled")):
            if s[1] == c:
                val = val * hooks(omega, s).lower / hooks(lam, s).lower
        above = sum(1 for rr, _ in lam.circles() if rr < r)
        out[omega] = -val if above % 2 else val
    return out


# ---------------------------------------------------------------------------
# explicit-variable oracles for the same operators


def _oracle(f: SymSuperFunc, op: str, field="alpha") -> dict:
    f = to_m(f)
    n = max(sp.n for sp in f.coeffs)
    m = max(sp.m for sp in f.coeffs)
    N = oracle_variables(n + 1, m + 1)
    P = expand(f, N)
    Q = {"e0": P.theta_sum_times, "Q": P.theta_euler, "qperp": P.qperp}[op]()
    return expand_in_basis(collect(Q), field)


def oracle_e0tilde(lam: SuperPartition) -> dict:
    return _oracle(jack(lam), "e0")


def oracle_Qtilde(lam: SuperPartition) -> dict:
    return _oracle(jack(lam), "Q")


def oracle_qperp(lam: SuperPartition) -> dict:
    if lam.m == 0:
        return {}
    return _oracle(jack(lam), "qperp")


# ---------------------------------------------------------------------------
# duality


def invert_alpha(f: SymSuperFunc) -> SymSuperFunc:
    """Substitute ``alpha -> 1/alpha`` in every coefficient."""
    inv = {"a": 1 / var("a")}
    return f.map_coeffs(lambda c: substitute(c, inv))


def omega_hat(f: SymSuperFunc, direction: str = "alpha") -> SymSuperFunc:
    """The homomorphism ``p_n -> (-1)^(n-1) a p_n``, ``p~_l -> (-1)^l a p~_l``.

    ``direction="inv_alpha"`` uses ``1/alpha`` in place of ``alpha``.
    """
    a = var("a")
    if direction == "inv_alpha":
        a = 1 / a
    elif direction != "alpha":
        raise ValueError(f"unknown direction {direction!r}")
    out = {}
    for sp, c in to_p(f).coeffs.items():
        sign = sum(sp.antisym) + sum(k - 1 for k in sp.sym)
        val = c * a ** (sp.m + len(sp.sym))
        out[sp] = -val if sign % 2 else val
    return SymSuperFunc("p", out)


def jack_limit(c: RatFunc, k: int) -> RatFunc:
    """The value at ``alpha = k`` of the limit ``q = t^k``, ``t -> 1``.

    With ``v = 1 + eps`` and ``u = v^k`` the limit is an exact ``eps -> 0``
    substitution after normalization.
    """
    v = 1 + var("eps")
    return substitute(substitute(c, {"u": v**k, "v": v}), {"eps": 0})
