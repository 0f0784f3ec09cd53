"""Closed-form Pieri coefficients for Jack and Macdonald superpolynomials.

Coefficients are returned factorized as ``sign * psi * det`` (times
``t^d = v^(2d)`` for Macdonald).  The Jack parameter is the variable ``a``;
the Macdonald side is written in ``u = q^(1/2)`` and ``v = t^(1/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeffield import ONE, ZERO, RatFunc, const, determinant, product, substitute, var
from .superpartitions import (
    BUMPING,
    NEW_CIRCLE,
    NEW_SQUARE,
    PRE_CIRCLE,
    PRE_SQUARE,
    StripClassification,
    SuperPartition,
    arm,
    classify_horizontal_strip,
    column_relation,
    conjugate,
    leg,
    strips,
)

FIELDS = ("alpha", "qt")

__all__ = [
    "HookValue",
    "PieriCoefficient",
    "hooks",
    "norm_squared",
    "hook_product",
    "psi_prime",
    "phi",
    "phi_four_case",
    "label_value",
    "bracket",
    "det_pieri",
    "det_dual",
    "strip_sign",
    "d_stat",
    "pieri",
    "pieri_by_transport",
    "generic_limit_det",
    "lemma_sides",
]


def _a():
    return var("a")


def _uv():
    return var("u"), var("v")


def _check_field(field):
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}; expected one of {FIELDS}")


# ---------------------------------------------------------------------------
# hooks


@dataclass(frozen=True)
class HookValue:
    upper: RatFunc
    lower: RatFunc


def hooks(lam: SuperPartition, s, field: str = "alpha") -> HookValue:
    """Upper and lower hook-lengths of cell ``s`` of ``lam``'s circled diagram.

    The lower hook of a cell outside the star diagram (a circle) is 1, and
    ``1 - t`` in the Macdonald case: every q,t hook is ``(1 - t)`` times its
    Jack counterpart in the limit ``q = t^alpha, t -> 1``.
    """
    _check_field(field)
    r, c = s
    if r < 1 or c < 1 or r > len(lam.circled) or lam.circled[r - 1] < c:
        raise ValueError(f"cell {s} lies outside the circled diagram of {lam}")
    leg_c, arm_s = leg(lam.circled, s), arm(lam.star, s)
    leg_s, arm_c = leg(lam.star, s), arm(lam.circled, s)
    in_star = r <= len(lam.star) and lam.star[r - 1] >= c
    if field == "alpha":
        a = _a()
        upper = a * (arm_s + 1) + leg_c
        lower = a * arm_c + (leg_s + 1) if in_star else ONE
    else:
        u, v = _uv()
        upper = 1 - v ** (2 * leg_c) * u ** (2 * (arm_s + 1))
        lower = 1 - v ** (2 * (leg_s + 1)) * u ** (2 * arm_c) if in_star else 1 - v ** 2
    return HookValue(upper, lower)


def hook_product(lam: SuperPartition) -> RatFunc:
    """``alpha^m prod_{s in star} h_Lambda(s) / h^Lambda(s)``."""
    val = _a() ** lam.m
    for s in sorted(lam.cells("star")):
        h = hooks(lam, s)
        val = val * h.upper / h.lower
    return val


def norm_squared(lam: SuperPartition, field: str = "alpha") -> RatFunc:
    """``<<P_lam, P_lam>>`` in closed form.

    This is the hook product times ``(-1)^(m(m-1)/2)``, the same fermionic
    sign carried by the diagonal of the scalar product.
    """
    if field != "alpha":
        raise ValueError("closed-form norms are implemented for the Jack case only")
    val = hook_product(lam)
    return -val if (lam.m * (lam.m - 1) // 2) % 2 else val


# ---------------------------------------------------------------------------
# psi' and phi


def _line_end(cells: dict, line: list) -> tuple:
    """Kinds of the last two cells of a row or column of Omega."""
    kinds = [cells[c] for c in line]
    return kinds[-1], (kinds[-2] if len(kinds) > 1 else None)


def _ratios(lam, omega, s, field):
    hl, ho = hooks(lam, s, field), hooks(omega, s, field)
    A = hl.upper / ho.upper
    B = ho.lower / hl.lower
    return A, B


_NON_PRE = (NEW_SQUARE, BUMPING, NEW_CIRCLE)


def psi_prime(cls: StripClassification, field: str = "alpha") -> RatFunc:
    """Product over ``col_{Omega/Lambda}`` of A, B, C = AB or 1, by row ending."""
    _check_field(field)
    lam, omega, cells = cls.lam, cls.omega, cls.cells
    cols = {c for (r, c), k in cells.items() if k in _NON_PRE}
    lam_circ = lam.cells("circled")
    val = ONE
    for s in sorted(lam_circ):
        if s[1] not in cols:
            continue
        row = sorted(c for c in cells if c[0] == s[0])
        last, prev = _line_end(cells, row)
        A, B = _ratios(lam, omega, s, field)
        if last in (PRE_CIRCLE, PRE_SQUARE):
            val = val * A * B
        elif last == NEW_CIRCLE:
            if prev != BUMPING:
                val = val * A
        elif last == BUMPING:
            val = val * B
    return val


def phi_four_case(cls: StripClassification) -> RatFunc:
    """The four-case product over cells of ``Lambda`` in rows of ``Omega``
    holding a non-preexisting cell, weighted by how their column ends.

    Taken alone this is not the dual hook factor; see :func:`phi`.  At a
    circle of ``Lambda`` the upper hook vanishes, so A (and C) is 0 there.
    """
    lam, omega, cells = cls.lam, cls.omega, cls.cells
    rows = {r for (r, c), k in cells.items() if k in _NON_PRE}
    val = ONE
    for s in sorted(lam.cells("circled")):
        if s[0] not in rows:
            continue
        col = sorted((c for c in cells if c[1] == s[1]), key=lambda c: c[0])
        last, prev = _line_end(cells, col)
        if last in (NEW_CIRCLE, NEW_SQUARE, BUMPING):
            A, B = _ratios(lam, omega, s, "alpha")
            if last == NEW_CIRCLE:
                val = val * (A * B if prev == BUMPING else A)
            elif last == NEW_SQUARE:
                val = val * A * B
            else:
                val = val * B
    return val


def phi(cls: StripClassification) -> RatFunc:
    """Hook factor of the dual rule, so that ``u = sign' * phi * Det'``.

    Cells of ``Lambda^*`` in rows holding a non-preexisting cell follow the
    four-case column rule (A, C, B, C).  A circle of ``Lambda`` bumped at the
    bottom of its column gives ``h_Omega(s)/alpha``.  The other cells of
    ``Lambda^*`` give ``A*B``, each cell of ``Omega^*/Lambda^*`` gives
    ``h^Omega(s)/h_Omega(s)``, and a gained circle gives
    ``(-1)^m / alpha^2``.
    """
    lam, omega, cells = cls.lam, cls.omega, cls.cells
    a = _a()
    rows = {r for (r, c), k in cells.items() if k in _NON_PRE}
    star = lam.cells("star")
    val = ONE
    if cls.kind == "gtilde":
        val = (-1 if lam.m % 2 else 1) / a ** 2
    for s in sorted(lam.cells("circled")):
        if s[0] not in rows:
            if s in star:
                A, B = _ratios(lam, omega, s, "alpha")
                val = val * A * B
            continue
        col = sorted((c for c in cells if c[1] == s[1]), key=lambda c: c[0])
        last, prev = _line_end(cells, col)
        if s not in star:
            if last == BUMPING:
                val = val * hooks(omega, s).upper / a
            continue
        A, B = _ratios(lam, omega, s, "alpha")
        if last == NEW_CIRCLE:
            val = val * (A * B if prev == BUMPING else A)
        elif last == NEW_SQUARE:
            val = val * A * B
        elif last == BUMPING:
            val = val * B
    for s in sorted(omega.cells("star") - star):
        h = hooks(omega, s)
        val = val * h.lower / h.upper
    return val


# ---------------------------------------------------------------------------
# labels, brackets and determinants


def label_value(cell, field: str = "alpha") -> RatFunc:
    """``alpha*b - a`` at cell ``(a, b)``; for Macdonald ``t^{x/2} = u^b v^{-a}``."""
    r, c = cell
    if field == "alpha":
        return _a() * c - r
    u, v = _uv()
    return u ** c * v ** (-r)


def _generic_alpha(x, y):
    a = _a()
    diff = x - y
    if diff.is_zero() or (diff + a).is_zero():
        raise ArithmeticError("degenerate labels reached the generic bracket")
    return a / ((diff + a) * diff)


def _generic_qt(tx, ty):
    u, v = _uv()
    T = tx / ty
    num = (v ** 2 - 1) * (u - 1 / u)
    den = (T - 1 / T) * (u * T - 1 / (u * T))
    if den.is_zero():
        raise ArithmeticError("degenerate labels reached the generic bracket")
    return num / den


def bracket(x, y, rowrel: str = "none", field: str = "alpha") -> RatFunc:
    """``[x;y]``: generic value, 1 in the same row, 0 if another y shares x's row.

    ``x`` and ``y`` are label values (see :func:`label_value`).
    """
    if rowrel == "same":
        return ONE
    if rowrel == "other":
        return ZERO
    if rowrel != "none":
        raise ValueError(f"unknown row relation {rowrel!r}")
    return _generic_alpha(x, y) if field == "alpha" else _generic_qt(x, y)


def _pieri_matrix(cls, field):
    xs = [label_value(c, field) for _, c in cls.xlabels]
    ys = [label_value(c, field) for _, c in cls.ylabels]
    rows = []
    if cls.kind == "etilde":
        rows.append([ONE] * len(ys))
    for i in range(1, len(xs) + 1):
        rows.append([bracket(xs[i - 1], ys[j - 1], cls.row_relation(i, j), field) for j in range(1, len(ys) + 1)])
    return rows


def det_pieri(cls: StripClassification, field: str = "alpha") -> RatFunc:
    """The bracket determinant (n x n, or (n+1) x (n+1) with a row of ones)."""
    _check_field(field)
    rows = _pieri_matrix(cls, field)
    if not rows:
        return ONE
    return determinant(rows)


def det_dual(cls: StripClassification) -> RatFunc:
    """``Det'`` for a horizontal strip, with labels read bottom to top.

    Entries are ``alpha/((y-x+1)(y-x))``, 1 or 0 by the column relation; when
    a circle is gained the first row is ``alpha, ..., alpha``.
    """
    a = _a()
    xs = [label_value(c) for _, c in cls.xlabels]
    ys = [label_value(c) for _, c in cls.ylabels]
    rows = []
    if cls.kind == "gtilde":
        rows.append([a] * len(ys))
    for i in range(1, len(xs) + 1):
        row = []
        for j in range(1, len(ys) + 1):
            rel = column_relation(cls, i, j)
            if rel == "same":
                row.append(ONE)
            elif rel == "other":
                row.append(ZERO)
            else:
                diff = ys[j - 1] - xs[i - 1]
                row.append(a / ((diff + 1) * diff))
        rows.append(row)
    if not rows:
        return ONE
    return determinant(rows)


def strip_sign(cls: StripClassification, dual: bool = False) -> int:
    """``(-1)^#``: preexisting circles and new squares above each new circle
    and bumping square.

    For a horizontal strip (``dual``) the count runs over cells strictly to
    the left, which is the conjugate of "above"; cells of a horizontal strip
    may share a row, so "lower row" would not do.
    """
    movers = [c for c, k in cls.cells.items() if k in (NEW_CIRCLE, BUMPING)]
    blockers = [c for c, k in cls.cells.items() if k in (PRE_CIRCLE, NEW_SQUARE)]
    if dual:
        count = sum(1 for m in movers for b in blockers if b[1] < m[1])
    else:
        count = sum(1 for m in movers for b in blockers if b[0] < m[0])
    return -1 if count % 2 else 1


def d_stat(cls: StripClassification) -> int:
    """The statistic ``d`` read off the word of x and y labels.

    Labels are read top to bottom; within a row the y label comes first.
    """
    entries = [(c[0], 0, "y", j) for j, c in cls.ylabels] + [(c[0], 1, "x", i) for i, c in cls.xlabels]
    entries.sort()
    return word_d([(kind, idx) for _, _, kind, idx in entries])


def word_d(word) -> int:
    """``sum_i d_i`` for a word of ``("x", i)`` / ``("y", j)`` letters."""
    pos = {letter: p for p, letter in enumerate(word)}
    total = 0
    for (kind, i), p in pos.items():
        if kind != "x":
            continue
        after = sum(1 for (k, j), q in pos.items() if k == "y" and q > p and j <= i)
        before = sum(1 for (k, j), q in pos.items() if k == "y" and q < p and j > i)
        total += after - before
    return total


# ---------------------------------------------------------------------------
# Pieri coefficients


@dataclass(frozen=True)
class PieriCoefficient:
    omega: SuperPartition
    sign: int
    psi: RatFunc
    det: RatFunc
    d: int
    total: RatFunc
    conjectural: bool = False

    def to_json(self) -> dict:
        return {
            "omega": str(self.omega),
            "sign": self.sign,
            "psi": str(self.psi),
            "det": str(self.det),
            "d": self.d,
            "total": str(self.total),
        }


def pieri(lam: SuperPartition, n: int, kind: str, field: str = "alpha") -> dict:
    """Coefficients of ``P_Omega`` in ``X_n * P_lam`` for ``X`` among e, e~, g, g~.

    In the ``qt`` field the record's ``d`` is the exponent of ``t`` actually
    applied, so ``total = sign * psi * det * t**d`` holds in both fields.
    """
    _check_field(field)
    if kind in ("e", "g") and n < 1 or n < 0:
        raise ValueError(f"n={n} out of range for kind {kind}")
    out = {}
    if kind in ("e", "etilde"):
        for omega, cls in strips(lam, n, kind):
            sign = strip_sign(cls)
            psi = psi_prime(cls, field)
            det = det_pieri(cls, field)
            d = 0
            total = psi * det
            if field == "qt":
                # the t-power that matches the Macdonald oracle is t^(-d_stat)
                d = -d_stat(cls)
                total = total * var("v") ** (2 * d)
            if sign < 0:
                total = -total
            if not total.is_zero():
                out[omega] = PieriCoefficient(omega, sign, psi, det, d, total, field == "qt")
        return out
    if kind in ("g", "gtilde"):
        if field != "alpha":
            raise ValueError("no dual Pieri rule is available for the Macdonald case")
        for omega, _ in strips(lam, n, kind):
            cls = classify_horizontal_strip(lam, omega)
            sign = strip_sign(cls, dual=True)
            psi = phi(cls)
            det = det_dual(cls)
            total = psi * det if sign > 0 else -(psi * det)
            if not total.is_zero():
                out[omega] = PieriCoefficient(omega, sign, psi, det, 0, total)
        return out
    raise ValueError(f"unknown kind {kind!r}")


def pieri_by_transport(lam: SuperPartition, n: int, kind: str, inverted: bool = False) -> dict:
    """Dual coefficients from ``v_{lam' Omega'}(1/alpha) ||P_lam||^2 / ||P_Omega||^2``.

    ``inverted=True`` uses the reciprocal norm ratio instead; that variant is
    kept only so the two orientations can be compared.
    """
    vkind = {"g": "e", "gtilde": "etilde"}[kind]
    a = _a()
    inv = {"a": 1 / a}
    nl = norm_squared(lam)
    out = {}
    for omega_c, coeff in pieri(conjugate(lam), n, vkind).items():
        omega = conjugate(omega_c)
        ratio = norm_squared(omega) / nl if inverted else nl / norm_squared(omega)
        out[omega] = substitute(coeff.total, inv) * ratio
    return out


# ---------------------------------------------------------------------------
# limits and identities


def _generic_matrix_det(cls, xs, ys, field):
    rows = []
    if cls.kind == "etilde":
        rows.append([ONE] * len(ys))
    gen = _generic_alpha if field == "alpha" else _generic_qt
    for x in xs:
        rows.append([gen(x, y) for y in ys])
    return determinant(rows) if rows else ONE


def generic_limit_det(cls: StripClassification, field: str = "alpha", generic=None) -> RatFunc:
    """The determinant recovered from the all-generic one by a limit.

    Labels are perturbed by ``eps`` so that no two coincide: ``x_i + 2i eps``
    and ``y_j + (2j+1) eps`` for Jack, ``x_i eps^(2i)`` and ``y_j eps^(2j+1)``
    for Macdonald.  Each same-row pair contributes ``(x - y)`` when the labels
    sit in one cell and ``(y - x - alpha)`` when adjacent (their q,t analogues
    ``(T - 1/T)/(t - 1)`` and ``(1/(qT) - qT)/(t - 1)`` with ``T = x/y``,
    ``qT`` meaning ``q^(1/2) T``).  The limit ``eps -> 0`` (resp. ``eps -> 1``)
    is taken after normalization.

    ``generic(cls, xs, ys)`` overrides the generic-label value; by default it
    is the determinant of generic brackets.
    """
    _check_field(field)
    eps = var("eps")
    if field == "alpha":
        a = _a()
        xs = [label_value(c) + eps * (2 * i) for i, c in cls.xlabels]
        ys = [label_value(c) + eps * (2 * j + 1) for j, c in cls.ylabels]
    else:
        u, v = _uv()
        xs = [label_value(c, field) * eps ** (2 * i) for i, c in cls.xlabels]
        ys = [label_value(c, field) * eps ** (2 * j + 1) for j, c in cls.ylabels]
    factor = ONE
    for i, xc in cls.xlabels:
        for j, yc in cls.ylabels:
            if xc[0] != yc[0]:
                continue
            x, y = xs[i - 1], ys[j - 1]
            if field == "alpha":
                factor = factor * ((x - y) if xc == yc else (y - x - a))
            else:
                T = x / y if xc == yc else u * x / y
                factor = factor * ((T - 1 / T) if xc == yc else (1 / T - T)) / (v ** 2 - 1)
    value = generic(cls, xs, ys) if generic is not None else _generic_matrix_det(cls, xs, ys, field)
    return substitute(factor * value, {"eps": 0 if field == "alpha" else 1})


def lemma_sides(n: int) -> tuple[RatFunc, RatFunc]:
    """Both sides of the rational identity in ``y, x1..xn, a`` used for e~."""
    a, y = _a(), var("y")
    xs = [var(f"x{i}") for i in range(1, n + 1)]
    c = (y + 1 - a) / a
    lhs = (1 - c) * product((x - y + a - 1) / (x - y + a) for x in xs) + c * product(
        (x - y - 1) / (x - y) for x in xs
    )
    rhs = ONE
    for i, xi in enumerate(xs):
        term = a / ((xi - y + a) * (xi - y)) * ((xi + 1 - a) / a)
        for k, xk in enumerate(xs):
            if k != i:
                term = term * (xk - xi - 1) / (xk - xi)
        rhs = rhs - term
    return lhs, rhs
