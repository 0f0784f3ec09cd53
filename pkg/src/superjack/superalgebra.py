"""Symmetric superpolynomials.

Two representations live here:

* :class:`SymSuperFunc` -- a finite combination of basis elements
  ``m_Lambda`` or ``p_Lambda`` indexed by superpartitions;
* :class:`ExplicitSuperPoly` -- an honest polynomial in ``z_1..z_N`` and
  anticommuting ``theta_1..theta_N``, used as the brute-force oracle.

Monomials of an explicit polynomial are ``theta_{i1}...theta_{ik} z^beta``
with ``i1 < ... < ik`` (0-based internally).  With this convention the
coefficient of ``theta_1...theta_m z^Lambda`` in ``m_Lambda`` is ``+1``.

Products of m-basis elements are computed from explicit variables: for each
candidate superpartition ``Omega`` of the product degree, the coefficient
of ``theta_1...theta_m z^Omega`` is accumulated from the explicit terms of
one factor and the (symmetric) coefficients of the other.  Only the first
``len(Omega)`` variables can contribute, so this is exactly
``collect(expand(f) * expand(g))`` for any sufficient ``N``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping

from .coeffield import ONE, ZERO, RatFunc, as_ratfunc, const, var
from .superpartitions import (
    EMPTY,
    SuperPartition,
    enumerate_superpartitions,
    z_lambda,
)

ALPHA = "a"

__all__ = [
    "SymSuperFunc",
    "ExplicitSuperPoly",
    "PowerSumIndex",
    "generator",
    "p_product",
    "multiply",
    "multiply_explicit",
    "expand",
    "collect",
    "to_p",
    "to_m",
    "d_operator",
    "scalar_alpha",
    "scalar_qt",
    "oracle_variables",
]


# ---------------------------------------------------------------------------
# basis-tagged combinations


class SymSuperFunc:
    """``sum_Lambda c_Lambda b_Lambda`` with ``b`` the m- or p-basis."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: Mapping[SuperPartition, object] | None = None):
        if basis not in ("m", "p"):
            raise ValueError(f"unsupported basis {basis!r}")
        self.basis = basis
        clean = {}
        for sp, c in (coeffs or {}).items():
            c = as_ratfunc(c)
            if not c.is_zero():
                clean[sp] = c
        self.coeffs = clean

    @classmethod
    def monomial(cls, sp: SuperPartition, basis: str = "m") -> "SymSuperFunc":
        return cls(basis, {sp: ONE})

    @classmethod
    def one(cls, basis: str = "m") -> "SymSuperFunc":
        return cls(basis, {EMPTY: ONE})

    def __getitem__(self, sp):
        return self.coeffs.get(sp, ZERO)

    def __iter__(self):
        return iter(self.coeffs.items())

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set:
        return {sp.degree for sp in self.coeffs}

    def fermionic_degrees(self) -> set:
        return {sp.m for sp in self.coeffs}

    def component(self, degree) -> "SymSuperFunc":
        return SymSuperFunc(self.basis, {sp: c for sp, c in self.coeffs.items() if sp.degree == degree})

    def _same_basis(self, other: "SymSuperFunc") -> "SymSuperFunc":
        return other if other.basis == self.basis else (to_m(other) if self.basis == "m" else to_p(other))

    def __add__(self, other):
        if not isinstance(other, SymSuperFunc):
            return NotImplemented
        other = self._same_basis(other)
        out = dict(self.coeffs)
        for sp, c in other.coeffs.items():
            out[sp] = out.get(sp, ZERO) + c
        return SymSuperFunc(self.basis, out)

    def __neg__(self):
        return SymSuperFunc(self.basis, {sp: -c for sp, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, SymSuperFunc):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "SymSuperFunc":
        c = as_ratfunc(c)
        return SymSuperFunc(self.basis, {sp: v * c for sp, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymSuperFunc):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymSuperFunc):
            return NotImplemented
        other = self._same_basis(other)
        return self.coeffs == other.coeffs

    def map_coeffs(self, fn) -> "SymSuperFunc":
        return SymSuperFunc(self.basis, {sp: fn(c) for sp, c in self.coeffs.items()})

    def substitute(self, bindings) -> "SymSuperFunc":
        return self.map_coeffs(lambda c: c.substitute(bindings))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = [f"({c})*{self.basis}{sp}" for sp, c in sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key(), reverse=True)]
        return " + ".join(terms)

    def to_json(self) -> dict:
        items = sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key(), reverse=True)
        return {"basis": self.basis, "terms": [{"sp": str(sp), "c": str(c)} for sp, c in items]}


# ---------------------------------------------------------------------------
# power-sum indices


class PowerSumIndex(tuple):
    """``(fermionic, bosonic)``: indices of ``p~`` (strictly decreasing) and ``p``."""

    def __new__(cls, fermionic=(), bosonic=()):
        f = tuple(fermionic)
        b = tuple(sorted(bosonic, reverse=True))
        if len(set(f)) != len(f):
            raise ValueError(f"repeated fermionic index in {f}")
        if any(x < 0 for x in f) or any(x < 1 for x in b):
            raise ValueError("power-sum indices out of range")
        return super().__new__(cls, (f, b))

    @property
    def fermionic(self):
        return self[0]

    @property
    def bosonic(self):
        return self[1]

    def superpartition(self) -> SuperPartition:
        return SuperPartition.from_parts(sorted(self.fermionic, reverse=True), self.bosonic)

    @classmethod
    def of(cls, sp: SuperPartition) -> "PowerSumIndex":
        return cls(sp.antisym, sp.sym)


def _sort_sign(seq) -> tuple[int, tuple]:
    """Sign of the permutation sorting ``seq`` decreasingly (0 on repeats)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, ()
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] < seq[j])
    return (-1) ** inversions, tuple(sorted(seq, reverse=True))


def p_product(x: PowerSumIndex, y: PowerSumIndex) -> tuple[int, PowerSumIndex | None]:
    """``p_x * p_y = sign * p_result`` for anticommuting ``p~``."""
    sign, ferm = _sort_sign(tuple(x.fermionic) + tuple(y.fermionic))
    if sign == 0:
        return 0, None
    return sign, PowerSumIndex(ferm, tuple(x.bosonic) + tuple(y.bosonic))


# ---------------------------------------------------------------------------
# explicit superpolynomials


def _merge_sign(left: tuple, right: tuple) -> int:
    """Sign of reordering ``theta_left theta_right`` into ascending order."""
    inv = 0
    for a in left:
        for b in right:
            if a > b:
                inv += 1
    return -1 if inv % 2 else 1


class ExplicitSuperPoly:
    """Polynomial in ``z_1..z_N`` and anticommuting ``theta_1..theta_N``.

    ``terms`` maps ``(thetas, exps)`` to a coefficient, ``thetas`` a strictly
    increasing tuple of 0-based indices and ``exps`` a length-N tuple.
    """

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: Mapping | None = None):
        if N < 1:
            raise ValueError("need at least one variable")
        self.N = N
        clean = {}
        for key, c in (terms or {}).items():
            c = as_ratfunc(c)
            if not c.is_zero():
                clean[key] = c
        self.terms = clean

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ExplicitSuperPoly):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return ExplicitSuperPoly(self.N, out)

    def __neg__(self):
        return ExplicitSuperPoly(self.N, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_ratfunc(c)
        return ExplicitSuperPoly(self.N, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, ExplicitSuperPoly):
            return self.scale(other)
        if other.N != self.N:
            raise ValueError("variable counts differ")
        acc: dict = defaultdict(lambda: ZERO)
        for (s1, e1), c1 in self.terms.items():
            set1 = set(s1)
            for (s2, e2), c2 in other.terms.items():
                if set1.intersection(s2):
                    continue
                sign = _merge_sign(s1, s2)
                key = (tuple(sorted(s1 + s2)), tuple(a + b for a, b in zip(e1, e2)))
                term = c1 * c2
                acc[key] = acc[key] + (term if sign > 0 else -term)
        return ExplicitSuperPoly(self.N, acc)

    # -- differential operators ------------------------------------------
    def d(self) -> "ExplicitSuperPoly":
        """``sum_i theta_i d/dz_i``."""
        acc: dict = defaultdict(lambda: ZERO)
        for (s, e), c in self.terms.items():
            for i in range(self.N):
                if e[i] == 0 or i in s:
                    continue
                sign = _merge_sign((i,), s)
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                key = (tuple(sorted((i,) + s)), ne)
                acc[key] = acc[key] + c * (sign * e[i])
        return ExplicitSuperPoly(self.N, acc)

    def theta_euler(self) -> "ExplicitSuperPoly":
        """``sum_i theta_i z_i d/dz_i`` (the N-independent part of Q)."""
        acc: dict = defaultdict(lambda: ZERO)
        for (s, e), c in self.terms.items():
            for i in range(self.N):
                if e[i] == 0 or i in s:
                    continue
                sign = _merge_sign((i,), s)
                key = (tuple(sorted((i,) + s)), e)
                acc[key] = acc[key] + c * (sign * e[i])
        return ExplicitSuperPoly(self.N, acc)

    def qperp(self) -> "ExplicitSuperPoly":
        """``sum_i z_i d/dtheta_i`` with the derivative acting from the left."""
        acc: dict = defaultdict(lambda: ZERO)
        for (s, e), c in self.terms.items():
            for pos, i in enumerate(s):
                sign = -1 if pos % 2 else 1
                ns = s[:pos] + s[pos + 1:]
                ne = e[:i] + (e[i] + 1,) + e[i + 1:]
                key = (ns, ne)
                acc[key] = acc[key] + c * sign
        return ExplicitSuperPoly(self.N, acc)

    def theta_sum_times(self) -> "ExplicitSuperPoly":
        """Left multiplication by ``theta_1 + ... + theta_N`` (that is, ``e~_0``)."""
        acc: dict = defaultdict(lambda: ZERO)
        for (s, e), c in self.terms.items():
            for i in range(self.N):
                if i in s:
                    continue
                sign = _merge_sign((i,), s)
                key = (tuple(sorted((i,) + s)), e)
                acc[key] = acc[key] + c * sign
        return ExplicitSuperPoly(self.N, acc)

    def __repr__(self):
        parts = []
        for (s, e), c in sorted(self.terms.items()):
            mon = "".join(f"θ{i + 1}" for i in s) + "".join(
                f"z{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            parts.append(f"({c}){mon or '1'}")
        return " + ".join(parts) or "0"


def _distinct_arrangements(values: tuple) -> Iterable[tuple]:
    return set(permutations(values))


@lru_cache(maxsize=None)
def _monomial_terms(sp: SuperPartition, N: int) -> tuple:
    """Explicit terms ``((thetas, exps), sign)`` of ``m_sp`` in N variables."""
    m = sp.m
    parts = sp.parts
    if len(parts) > N:
        return ()
    full = tuple(parts) + (0,) * (N - len(parts))
    out = []
    a = full[:m]
    s_vals = full[m:]
    from itertools import permutations as perms

    for fpos in perms(range(N), m):
        rest = [i for i in range(N) if i not in fpos]
        sign = 1
        order = list(fpos)
        inv = sum(1 for i in range(m) for j in range(i + 1, m) if order[i] > order[j])
        if inv % 2:
            sign = -1
        for arr in set(perms(s_vals)):
            exps = [0] * N
            for idx, val in zip(fpos, a):
                exps[idx] = val
            for idx, val in zip(rest, arr):
                exps[idx] = val
            out.append(((tuple(sorted(fpos)), tuple(exps)), sign))
    return tuple(out)


def expand(f: SymSuperFunc, N: int) -> ExplicitSuperPoly:
    """Realize ``f`` as an explicit polynomial in N variables."""
    f = to_m(f)
    need = max((sp.length for sp in f.coeffs), default=0)
    if N < need:
        raise ValueError(f"N={N} variables cannot represent a term of length {need}")
    acc: dict = defaultdict(lambda: ZERO)
    for sp, c in f.coeffs.items():
        for key, sign in _monomial_terms(sp, N):
            acc[key] = acc[key] + (c if sign > 0 else -c)
    return ExplicitSuperPoly(N, acc)


def _canonical_of(thetas: tuple, exps: tuple):
    """``(sign, superpartition)`` whose m-function carries this monomial."""
    fexps = [exps[i] for i in thetas]
    sign, a = _sort_sign(fexps)
    if sign == 0:
        return 0, None
    ts = set(thetas)
    s = sorted((e for i, e in enumerate(exps) if i not in ts and e), reverse=True)
    return sign, SuperPartition.from_parts(a, s)


def collect(P: ExplicitSuperPoly, strict: bool = True) -> SymSuperFunc:
    """Read off the m-basis expansion of a symmetric explicit polynomial.

    With ``strict`` the variable count must exceed the length of every
    superpartition met, otherwise terms of larger length could have been
    truncated.
    """
    out = {}
    for (s, e), c in P.terms.items():
        m = len(s)
        if s != tuple(range(m)):
            continue
        if any(e[i] <= e[i + 1] for i in range(m - 1)):
            continue
        tail = e[m:]
        if any(tail[i] < tail[i + 1] for i in range(len(tail) - 1)):
            continue
        sign, sp = _canonical_of(s, e)
        if strict and sp.length >= P.N:
            raise ValueError(
                f"N={P.N} is insufficient: {sp} fills every variable, longer terms may be truncated"
            )
        out[sp] = c if sign > 0 else -c
    return SymSuperFunc("m", out)


def oracle_variables(n_total: int, m_total: int) -> int:
    """Variable count for explicit computations at degree ``(n|m)``."""
    return n_total + m_total + 1


# ---------------------------------------------------------------------------
# products


def _lookup(f: SymSuperFunc, thetas: tuple, exps: tuple) -> RatFunc:
    sign, sp = _canonical_of(thetas, exps)
    if sign == 0:
        return ZERO
    c = f.coeffs.get(sp)
    if c is None:
        return ZERO
    return c if sign > 0 else -c


def _explicit_support(f: SymSuperFunc, N: int) -> list:
    acc: dict = defaultdict(lambda: ZERO)
    for sp, c in f.coeffs.items():
        for key, sign in _monomial_terms(sp, N):
            acc[key] = acc[key] + (c if sign > 0 else -c)
    return [(k, c) for k, c in acc.items() if not c.is_zero()]


def _multiply_m(f: SymSuperFunc, g: SymSuperFunc) -> SymSuperFunc:
    out: dict = {}
    degs_f = {sp.degree for sp in f.coeffs}
    degs_g = {sp.degree for sp in g.coeffs}
    # expand whichever factor has fewer basis terms
    expand_right = len(g.coeffs) <= len(f.coeffs)
    cache: dict = {}
    for df in degs_f:
        fc = f.component(df)
        for dg in degs_g:
            gc = g.component(dg)
            n, m = df[0] + dg[0], df[1] + dg[1]
            for omega in enumerate_superpartitions(n, m):
                N = omega.length
                exps_target = tuple(omega.parts)
                full = tuple(range(m))
                big = gc if expand_right else fc
                key = (id(big), N)
                if key not in cache:
                    cache[key] = _explicit_support(big, N)
                total = ZERO
                for (t, gamma), c in cache[key]:
                    if not set(t) <= set(full):
                        continue
                    if any(gi > oi for gi, oi in zip(gamma, exps_target)):
                        continue
                    beta = tuple(o - x for o, x in zip(exps_target, gamma))
                    rest = tuple(i for i in full if i not in t)
                    if expand_right:
                        other = _lookup(fc, rest, beta)
                        sign = _merge_sign(rest, t)
                    else:
                        other = _lookup(gc, rest, beta)
                        sign = _merge_sign(t, rest)
                    if other.is_zero():
                        continue
                    prod = c * other
                    total = total + (prod if sign > 0 else -prod)
                if not total.is_zero():
                    out[omega] = out.get(omega, ZERO) + total
    return SymSuperFunc("m", out)


def multiply(f: SymSuperFunc, g: SymSuperFunc) -> SymSuperFunc:
    """The product ``f * g`` (left factor first; odd elements anticommute)."""
    if f.basis == "p" and g.basis == "p":
        acc: dict = defaultdict(lambda: ZERO)
        for s1, c1 in f.coeffs.items():
            i1 = PowerSumIndex.of(s1)
            for s2, c2 in g.coeffs.items():
                sign, idx = p_product(i1, PowerSumIndex.of(s2))
                if sign == 0:
                    continue
                sp = idx.superpartition()
                term = c1 * c2
                acc[sp] = acc[sp] + (term if sign > 0 else -term)
        return SymSuperFunc("p", acc)
    return _multiply_m(to_m(f), to_m(g))


def multiply_explicit(f: SymSuperFunc, g: SymSuperFunc, N: int | None = None) -> SymSuperFunc:
    """``collect(expand(f, N) * expand(g, N))`` -- the slow, fully explicit route."""
    f, g = to_m(f), to_m(g)
    if N is None:
        n = max((sp.n for sp in f.coeffs), default=0) + max((sp.n for sp in g.coeffs), default=0)
        m = max((sp.m for sp in f.coeffs), default=0) + max((sp.m for sp in g.coeffs), default=0)
        N = oracle_variables(n, m)
    return collect(expand(f, N) * expand(g, N))


# ---------------------------------------------------------------------------
# generators


def _alpha():
    return var(ALPHA)


def generator(kind: str, k: int) -> SymSuperFunc:
    """The generators ``e, e~, h, h~, p, p~, g, g~`` of index ``k``."""
    tilde = kind.endswith("tilde")
    if tilde and k < 0 or not tilde and k < 1:
        raise ValueError(f"index {k} out of range for {kind}")
    if kind == "e":
        return SymSuperFunc.monomial(SuperPartition.from_parts((), (1,) * k))
    if kind == "etilde":
        return SymSuperFunc.monomial(SuperPartition.from_parts((0,), (1,) * k))
    if kind == "h":
        return SymSuperFunc("m", {sp: ONE for sp in enumerate_superpartitions(k, 0)})
    if kind == "htilde":
        return SymSuperFunc("m", {sp: const(sp.antisym[0] + 1) for sp in enumerate_superpartitions(k, 1)})
    if kind == "p":
        return SymSuperFunc.monomial(SuperPartition.from_parts((), (k,)), "p")
    if kind == "ptilde":
        return SymSuperFunc.monomial(SuperPartition.from_parts((k,), ()), "p")
    if kind in ("g", "gtilde"):
        a = _alpha()
        m = 1 if tilde else 0
        return SymSuperFunc(
            "p",
            {sp: ONE / (a ** sp.length * z_lambda(sp.sym)) for sp in enumerate_superpartitions(k, m)},
        )
    raise ValueError(f"unknown generator kind {kind!r}")


# ---------------------------------------------------------------------------
# change of basis


@lru_cache(maxsize=None)
def _p_in_m(sp: SuperPartition) -> dict:
    """``p_sp`` in the m-basis, as a dict of Fractions."""
    if sp == EMPTY:
        return {EMPTY: Fraction(1)}
    if sp.m:
        first = SuperPartition.from_parts((sp.antisym[0],), ())
        rest = SuperPartition.from_parts(sp.antisym[1:], sp.sym)
    else:
        first = SuperPartition.from_parts((), (sp.sym[0],))
        rest = SuperPartition.from_parts((), sp.sym[1:])
    if rest == EMPTY:
        return {first: Fraction(1)}
    left = SymSuperFunc.monomial(first)
    right = SymSuperFunc("m", {k: const(v) for k, v in _p_in_m(rest).items()})
    prod = _multiply_m(left, right)
    return {k: c.to_fraction() for k, c in prod.coeffs.items()}


@lru_cache(maxsize=None)
def _m_in_p_sector(n: int, m: int) -> dict:
    """``{Omega: {Lambda: c}}`` with ``m_Omega = sum_Lambda c p_Lambda``."""
    basis = enumerate_superpartitions(n, m)
    k = len(basis)
    index = {sp: i for i, sp in enumerate(basis)}
    # rows: p_Lambda in terms of m_Omega
    A = [[Fraction(0)] * k for _ in range(k)]
    for i, sp in enumerate(basis):
        for om, c in _p_in_m(sp).items():
            A[i][index[om]] = c
    # solve X A = I  (X = m-in-p), i.e. A^T X^T = I
    inv = _invert(A)
    out = {}
    for j, om in enumerate(basis):
        out[om] = {basis[i]: inv[j][i] for i in range(k) if inv[j][i]}
    return out


def _invert(A):
    """Inverse of a rational matrix: returns X with X @ A = I."""
    k = len(A)
    # Gauss-Jordan on [A^T | I] gives (A^T)^{-1} = (A^{-1})^T; we want rows of A^{-1}^T... keep it plain
    M = [row[:] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(A)]
    for col in range(k):
        piv = next(r for r in range(col, k) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        M[col] = [x / pv for x in M[col]]
        for r in range(k):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    Ainv = [row[k:] for row in M]  # A @ Ainv = I, hence Ainv @ A = I as well
    return Ainv


def to_m(f: SymSuperFunc) -> SymSuperFunc:
    if f.basis == "m":
        return f
    acc: dict = defaultdict(lambda: ZERO)
    for sp, c in f.coeffs.items():
        for om, v in _p_in_m(sp).items():
            acc[om] = acc[om] + c * v
    return SymSuperFunc("m", acc)


def to_p(f: SymSuperFunc) -> SymSuperFunc:
    if f.basis == "p":
        return f
    acc: dict = defaultdict(lambda: ZERO)
    for sp, c in f.coeffs.items():
        # m_sp = sum_L X[sp][L] p_L ; X = A^{-1} with p = A m
        for lam, v in _m_in_p_sector(*sp.degree)[sp].items():
            acc[lam] = acc[lam] + c * v
    return SymSuperFunc("p", acc)


# ---------------------------------------------------------------------------
# the d operator


def d_operator(f: SymSuperFunc) -> SymSuperFunc:
    """``d = sum_i theta_i d/dz_i``, computed on explicit variables."""
    f = to_m(f)
    if f.is_zero():
        return f
    n = max(sp.n for sp in f.coeffs)
    m = max(sp.m for sp in f.coeffs)
    N = oracle_variables(n, m + 1)
    return collect(expand(f, N).d())


# ---------------------------------------------------------------------------
# scalar products


def _fermion_sign(m: int) -> int:
    return -1 if (m * (m - 1) // 2) % 2 else 1


def z_alpha(sp: SuperPartition, alpha: RatFunc | None = None) -> RatFunc:
    """Diagonal entry ``<<p_sp, p_sp>>_alpha``."""
    a = _alpha() if alpha is None else alpha
    return a ** (sp.m + len(sp.sym)) * (_fermion_sign(sp.m) * z_lambda(sp.sym))


def z_qt(sp: SuperPartition) -> RatFunc:
    """Diagonal entry ``<<p_sp, p_sp>>_{q,t}``, written in ``u = q^(1/2)``, ``v = t^(1/2)``."""
    q, t = var("u") ** 2, var("v") ** 2
    val = q ** sum(sp.antisym) * (_fermion_sign(sp.m) * z_lambda(sp.sym))
    for part in sp.sym:
        val = val * (1 - q ** part) / (1 - t ** part)
    return val


def _scalar(f: SymSuperFunc, g: SymSuperFunc, diag) -> RatFunc:
    fp, gp = to_p(f), to_p(g)
    total = ZERO
    for sp, c in fp.coeffs.items():
        d = gp.coeffs.get(sp)
        if d is not None:
            total = total + c * d * diag(sp)
    return total


def scalar_alpha(f: SymSuperFunc, g: SymSuperFunc) -> RatFunc:
    return _scalar(f, g, z_alpha)


def scalar_qt(f: SymSuperFunc, g: SymSuperFunc) -> RatFunc:
    return _scalar(f, g, z_qt)
