"""Alternating sign matrices, six-vertex weights and the Izergin-Korepin determinant.

The non-linear factor of a vertical-strip Pieri coefficient is a domain-wall
partition function.  This module evaluates both sides of that relation:

    D(x, y; a) = prod_{i<j} [x_i/x_j][y_j/y_i]
                 / (prod_i x_i/y_i * prod_{i,j} [x_i/y_j][a x_i/y_j]) * sum_A w(A)

and its Jack limit

    Det = alpha^(n^2) prod_{i<j} (x_i - x_j)(y_j - y_i)
          / prod_{i,j} (x_i - y_j)(x_i - y_j + alpha) * sum_A w_alpha(A).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian

from .coeffield import ONE, RatFunc, as_ratfunc, determinant, product, rsum, var
from .pieri import _generic_qt, det_pieri, generic_limit_det
from .superpartitions import StripClassification

__all__ = [
    "ASM",
    "SpectralData",
    "IdentityReport",
    "enumerate_asm",
    "is_asm",
    "asm_weight",
    "asm_sum",
    "ik_determinant",
    "d_prime",
    "ik_prefactor",
    "det_asm_identity",
    "generic_det_vs_d_prime",
]

FLAVORS = ("alpha", "qt")


def is_asm(entries) -> bool:
    """Row and column sums 1 with alternating non-zero entries."""
    n = len(entries)
    if any(len(row) != n for row in entries):
        return False
    for line in list(entries) + [list(col) for col in zip(*entries)]:
        run = 0
        for e in line:
            if e not in (-1, 0, 1):
                return False
            run += e
            # partial sums stay in {0, 1} exactly when the signs alternate from +1
            if run not in (0, 1):
                return False
        if run != 1:
            return False
    return True


@dataclass(frozen=True)
class ASM:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(e) for e in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or not is_asm(rows):
            raise ValueError(f"not an alternating sign matrix: {rows}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_json(self) -> list:
        return [list(row) for row in self.entries]

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{e:2d}" for e in row) for row in self.entries)


def _rows(n: int) -> tuple:
    out = []
    for row in cartesian((1, 0, -1), repeat=n):
        run = 0
        for e in row:
            run += e
            if run not in (0, 1):
                break
        else:
            if run == 1:
                out.append(row)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_asm(n: int) -> tuple:
    """All ASMs of size ``n``, in lexicographic order of rows (1 before 0 before -1)."""
    if n < 1:
        raise ValueError("ASM size must be positive")
    rows = _rows(n)
    found = []

    def grow(acc, colsum):
        if len(acc) == n:
            if all(c == 1 for c in colsum):
                found.append(ASM(tuple(acc)))
            return
        for row in rows:
            nxt = tuple(c + e for c, e in zip(colsum, row))
            if all(c in (0, 1) for c in nxt):
                acc.append(row)
                grow(acc, nxt)
                acc.pop()

    grow([], (0,) * n)
    return tuple(found)


@dataclass(frozen=True)
class SpectralData:
    """Spectral parameters ``x``, ``y`` and a crossing parameter.

    For the alpha flavor ``a`` plays the role of alpha (default: the variable
    ``a``); for the qt flavor it is ``q^(1/2)`` (default: the variable ``u``).
    """

    xs: tuple
    ys: tuple
    a: RatFunc | None = None

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(as_ratfunc(x) for x in self.xs))
        object.__setattr__(self, "ys", tuple(as_ratfunc(y) for y in self.ys))
        if len(self.xs) != len(self.ys):
            raise ValueError("xs and ys must have the same length")

    @property
    def n(self) -> int:
        return len(self.xs)

    def crossing(self, flavor: str) -> RatFunc:
        if self.a is not None:
            return as_ratfunc(self.a)
        return var("a") if flavor == "alpha" else var("u")

    @classmethod
    def symbolic(cls, n: int, a: RatFunc | None = None) -> "SpectralData":
        """Formal parameters ``x1..xn``, ``y1..yn``."""
        return cls(tuple(var(f"x{i}") for i in range(1, n + 1)), tuple(var(f"y{j}") for j in range(1, n + 1)), a)


def _check_flavor(flavor):
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")


def _sq(z: RatFunc, a: RatFunc) -> RatFunc:
    """``[z] = (z - 1/z) / (a - 1/a)``."""
    return (z - 1 / z) / (a - 1 / a)


def asm_weight(A: ASM, data: SpectralData, flavor: str = "alpha") -> RatFunc:
    """Product of the entry weights of ``A``.

    A zero entry is "even" or "odd" according to the sum of the entries
    strictly above it in its column plus those strictly left of it in its row.
    """
    _check_flavor(flavor)
    if A.n != data.n:
        raise ValueError(f"ASM of size {A.n} with {data.n} spectral parameters")
    a = data.crossing(flavor)
    factors = []
    E = A.entries
    for i in range(A.n):
        for j in range(A.n):
            e = E[i][j]
            x, y = data.xs[i], data.ys[j]
            if flavor == "alpha":
                if e:
                    continue
                parity = sum(E[k][j] for k in range(i)) + sum(E[i][k] for k in range(j))
                factors.append((x - y + a) / a if parity % 2 == 0 else (x - y) / a)
            else:
                z = x / y
                if e == 1:
                    factors.append(z)
                elif e == -1:
                    factors.append(1 / z)
                else:
                    parity = sum(E[k][j] for k in range(i)) + sum(E[i][k] for k in range(j))
                    factors.append(_sq(a * z, a) if parity % 2 == 0 else _sq(z, a))
    return product(factors)


def asm_sum(data: SpectralData, flavor: str = "alpha") -> RatFunc:
    if data.n == 0:
        return ONE
    return rsum(asm_weight(A, data, flavor) for A in enumerate_asm(data.n))


def ik_determinant(data: SpectralData) -> RatFunc:
    """``det((a - 1/a)^2 / ((z - 1/z)(a z - 1/(a z))))`` with ``z = x_i/y_j``."""
    a = data.crossing("qt")
    top = (a - 1 / a) ** 2
    rows = []
    for x in data.xs:
        row = []
        for y in data.ys:
            z = x / y
            den = (z - 1 / z) * (a * z - 1 / (a * z))
            if den.is_zero():
                raise ArithmeticError(f"pole of the Izergin-Korepin entry at x/y = {z}")
            row.append(top / den)
        rows.append(row)
    return determinant(rows) if rows else ONE


def d_prime(data: SpectralData, t: RatFunc | None = None) -> RatFunc:
    """``((t - 1)/(a - 1/a))^n D``; ``t`` defaults to ``v^2``."""
    t = var("v") ** 2 if t is None else as_ratfunc(t)
    a = data.crossing("qt")
    return ((t - 1) / (a - 1 / a)) ** data.n * ik_determinant(data)


def ik_prefactor(data: SpectralData, flavor: str = "qt") -> RatFunc:
    """The factor multiplying ``sum_A w(A)`` in the determinant formula.

    For ``qt`` it is the prefactor of ``D``; for ``alpha`` the Jack-limit
    prefactor including ``alpha^(n^2)``.
    """
    _check_flavor(flavor)
    a = data.crossing(flavor)
    xs, ys, n = data.xs, data.ys, data.n
    num, den = [], []
    if flavor == "qt":
        for i in range(n):
            for j in range(i + 1, n):
                num.append(_sq(xs[i] / xs[j], a) * _sq(ys[j] / ys[i], a))
            den.append(xs[i] / ys[i])
            for j in range(n):
                den.append(_sq(xs[i] / ys[j], a) * _sq(a * xs[i] / ys[j], a))
    else:
        num.append(a ** (n * n))
        for i in range(n):
            for j in range(i + 1, n):
                num.append((xs[i] - xs[j]) * (ys[j] - ys[i]))
            for j in range(n):
                den.append((xs[i] - ys[j]) * (xs[i] - ys[j] + a))
    return product(num) / product(den)


# ---------------------------------------------------------------------------
# identities with the Pieri determinant


@dataclass(frozen=True)
class IdentityReport:
    lhs: RatFunc
    rhs: RatFunc

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"lhs": str(self.lhs), "rhs": str(self.rhs), "equal": self.equal}


def _asm_side(flavor):
    def generic(cls, xs, ys):
        data = SpectralData(xs, ys)
        val = ik_prefactor(data, flavor) * asm_sum(data, flavor)
        if flavor == "qt":
            a = data.crossing("qt")
            val = val * ((var("v") ** 2 - 1) / (a - 1 / a)) ** data.n
        return val

    return generic


def det_asm_identity(cls: StripClassification, flavor: str = "alpha") -> IdentityReport:
    """``det_pieri`` against the prefactor times the ASM sum.

    Coinciding labels are perturbed and the limit is taken as in
    :func:`superjack.pieri.generic_limit_det`.
    """
    _check_flavor(flavor)
    if cls.kind != "e":
        raise ValueError("the ASM form needs a square determinant (kind 'e')")
    lhs = det_pieri(cls, flavor)
    rhs = generic_limit_det(cls, flavor, generic=_asm_side(flavor))
    return IdentityReport(lhs, rhs)


def generic_det_vs_d_prime(n: int) -> IdentityReport:
    """Generic-label Macdonald determinant against ``D'`` with formal labels."""
    data = SpectralData.symbolic(n)
    rows = [[_generic_qt(x, y) for y in data.ys] for x in data.xs]
    lhs = determinant(rows) if rows else ONE
    return IdentityReport(lhs, d_prime(data))
