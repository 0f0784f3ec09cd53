"""Exact arithmetic in Q(v1, ..., vk).

Rational functions are quotients of integer multivariate polynomials over a
global, append-only registry of named indeterminates.  Polynomial
arithmetic and gcds are delegated to FLINT (``fmpz_mpoly``); everything on
top of that (normalization, substitution, determinants, parsing, rendering)
lives here.

The canonical form of a :class:`RatFunc` is ``num/den`` with
``gcd(num, den) = 1`` (content included) and the leading coefficient of
``den`` positive under the graded lexicographic order.  Two values are equal
iff their canonical forms are equal.
"""

from __future__ import annotations

import ast
import re
import threading
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

import flint

__all__ = [
    "RatFunc",
    "var",
    "const",
    "ZERO",
    "ONE",
    "determinant",
    "cofactor_determinant",
    "parse_ratfunc",
    "register",
    "substitute",
    "as_ratfunc",
    "product",
    "rsum",
]

_ORDER = "deglex"
_names: list[str] = []
_lock = threading.Lock()
_ctx_cache: dict[int, flint.fmpz_mpoly_ctx] = {}


def register(name: str) -> int:
    """Register ``name`` as an indeterminate (idempotent); return its index."""
    if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
        raise ValueError(f"invalid indeterminate name {name!r}")
    with _lock:
        if name not in _names:
            _names.append(name)
        return _names.index(name)


def _ctx(nvars: int | None = None) -> flint.fmpz_mpoly_ctx:
    n = len(_names) if nvars is None else nvars
    ctx = _ctx_cache.get(n)
    if ctx is None:
        ctx = flint.fmpz_mpoly_ctx.get(tuple(_names[:n]), _ORDER)
        _ctx_cache[n] = ctx
    return ctx


def _nvars(p: flint.fmpz_mpoly) -> int:
    return p.context().nvars()


def _lift(p: flint.fmpz_mpoly, ctx: flint.fmpz_mpoly_ctx) -> flint.fmpz_mpoly:
    # contexts are prefixes of one another, so projection by name is exact
    if p.context() is ctx:
        return p
    return p.project_to_context(ctx)


def _common(*polys: flint.fmpz_mpoly) -> tuple[flint.fmpz_mpoly, ...]:
    n = max(_nvars(p) for p in polys)
    ctx = _ctx(n)
    return tuple(_lift(p, ctx) for p in polys)


def _leading_coeff(p: flint.fmpz_mpoly) -> int:
    # flint keeps terms sorted descending in the context ordering
    return int(p.leading_coefficient())


class RatFunc:
    """An element of Q(v1, ..., vk) in canonical form.  Immutable."""

    __slots__ = ("num", "den", "_str")

    def __init__(self, num, den=None, *, _normalized: bool = False):
        if isinstance(num, RatFunc) and den is None:
            self.num, self.den, self._str = num.num, num.den, num._str
            return
        if not isinstance(num, flint.fmpz_mpoly):
            num = _from_scalar(num)
        if den is None:
            den = _ctx(_nvars(num)).constant(1)
        elif not isinstance(den, flint.fmpz_mpoly):
            den = _from_scalar(den)
        num, den = _common(num, den)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._str = None

    # -- construction helpers -------------------------------------------
    @classmethod
    def from_fraction(cls, x) -> "RatFunc":
        x = Fraction(x)
        ctx = _ctx(0)
        return cls(ctx.constant(x.numerator), ctx.constant(x.denominator), _normalized=True)

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(int(self.num.leading_coefficient()) if not self.num.is_zero() else 0,
                        int(self.den.leading_coefficient()))

    def variables(self) -> set[str]:
        used = set()
        for p in (self.num, self.den):
            pn = p.context().names()
            for mon in p.monoms():
                used.update(pn[i] for i, e in enumerate(mon) if e)
        return used

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b, c, d = _common(self.num, self.den, other.num, other.den)
        if b == d:
            return RatFunc(a + c, b)
        return RatFunc(a * d + c * b, b * d)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        a, b, c, d = _common(self.num, self.den, other.num, other.den)
        # cross-cancel before multiplying to keep the gcds small
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a / g1, d / g1
        if not g2.is_one():
            c, b = c / g2, b / g2
        num, den = a * c, b * d
        return RatFunc(*_sign_fix(num, den), _normalized=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero RatFunc")
        return RatFunc(*_sign_fix(self.den, self.num), _normalized=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k, _normalized=True)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        a, b, c, d = _common(self.num, self.den, other.num, other.den)
        return a == c and b == d

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(str(self))

    # -- evaluation -----------------------------------------------------
    def substitute(self, bindings: Mapping[str, object]) -> "RatFunc":
        return substitute(self, bindings)

    # -- rendering ------------------------------------------------------
    def __str__(self):
        if self._str is None:
            num = _poly_str(self.num)
            if self.den.is_one():
                s = num
            else:
                den = _poly_str(self.den)
                if not _is_atom(num):
                    num = f"({num})"
                if not _is_atom(den):
                    den = f"({den})"
                s = f"{num}/{den}"
            self._str = s
        return self._str

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def to_json(self) -> dict:
        return {"num": _poly_str(self.num), "den": _poly_str(self.den)}


def _poly_str(p: flint.fmpz_mpoly) -> str:
    return str(p).replace(" ", "")


def _is_atom(s: str) -> bool:
    return re.fullmatch(r"-?[A-Za-z0-9_]+", s) is not None and not re.search(r"\D-", s)


def _from_scalar(x) -> flint.fmpz_mpoly:
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, int):
        return _ctx(0).constant(x)
    raise TypeError(f"cannot build polynomial from {type(x).__name__}")


def _sign_fix(num, den):
    if _leading_coeff(den) < 0:
        return -num, -den
    return num, den


def _normalize(num, den):
    if num.is_zero():
        return num, den.context().constant(1)
    g = num.gcd(den)
    if not g.is_one():
        num = num / g
        den = den / g
    return _sign_fix(num, den)


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc.from_fraction(x)
    return NotImplemented


def const(x) -> RatFunc:
    """Rational constant as a RatFunc."""
    return RatFunc.from_fraction(x)


def var(name: str) -> RatFunc:
    """The indeterminate ``name`` (registered on first use)."""
    i = register(name)
    ctx = _ctx()
    return RatFunc(ctx.gen(i), ctx.constant(1), _normalized=True)


ZERO = const(0)
ONE = const(1)


def as_ratfunc(x) -> RatFunc:
    r = _coerce(x)
    if r is NotImplemented:
        raise TypeError(f"cannot convert {x!r} to RatFunc")
    return r


# ---------------------------------------------------------------------------
# substitution


def _poly_substitute(p: flint.fmpz_mpoly, bindings: Mapping[int, RatFunc]) -> RatFunc:
    """Evaluate ``p`` with the variables at the given indices bound."""
    n = _nvars(p)
    bound = [i for i in range(n) if i in bindings]
    if not bound or p.is_zero():
        return RatFunc(p, _ctx(n).constant(1), _normalized=True)
    # homogenize: multiply by prod den_i^deg_i so everything stays polynomial
    degs = p.degrees() if n else ()
    free_mask = [i not in bindings for i in range(n)]
    pieces = {i: (bindings[i].num, bindings[i].den) for i in bound}
    allp = [x for pair in pieces.values() for x in pair]
    ctx_n = max([n] + [_nvars(x) for x in allp])
    ctx = _ctx(ctx_n)
    pieces = {i: (_lift(a, ctx), _lift(b, ctx)) for i, (a, b) in pieces.items()}
    gens = ctx.gens()
    pow_cache: dict[tuple[int, int, int], flint.fmpz_mpoly] = {}

    def pw(i, which, e):
        key = (i, which, e)
        v = pow_cache.get(key)
        if v is None:
            v = pieces[i][which] ** e
            pow_cache[key] = v
        return v

    total = ctx.constant(0)
    for mon, c in zip(p.monoms(), p.coeffs()):
        term = ctx.constant(int(c))
        for i in range(n):
            e = mon[i]
            if free_mask[i]:
                if e:
                    term *= gens[i] ** e
            else:
                term *= pw(i, 0, e) * pw(i, 1, degs[i] - e)
        total += term
    den = ctx.constant(1)
    for i in bound:
        den *= pw(i, 1, degs[i])
    return RatFunc(total, den)


def substitute(x: RatFunc, bindings: Mapping[str, object]) -> RatFunc:
    """Exact substitution ``x[name -> value]``.

    Raises ``ZeroDivisionError`` when the substituted denominator vanishes.
    """
    idx = {}
    for name, val in bindings.items():
        if name not in _names:
            continue
        idx[_names.index(name)] = as_ratfunc(val)
    if not idx:
        return x
    num = _poly_substitute(x.num, idx)
    den = _poly_substitute(x.den, idx)
    if den.is_zero():
        raise ZeroDivisionError(f"substitution {dict(bindings)} makes the denominator of {x} vanish")
    return num / den


# ---------------------------------------------------------------------------
# determinants


def determinant(matrix: Sequence[Sequence[object]]) -> RatFunc:
    """Exact determinant of a square matrix of RatFunc (or rationals).

    Each row is cleared to a common denominator, then fraction-free
    (Bareiss) elimination runs on the integer-polynomial matrix.
    """
    n = len(matrix)
    if n == 0:
        return ONE
    rows = [[as_ratfunc(e) for e in row] for row in matrix]
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    polys = [e.num for r in rows for e in r] + [e.den for r in rows for e in r]
    ctx = _ctx(max(_nvars(p) for p in polys))
    scale_den = ctx.constant(1)
    M = []
    for r in rows:
        dens = [_lift(e.den, ctx) for e in r]
        lcm = dens[0]
        for d in dens[1:]:
            g = lcm.gcd(d)
            lcm = lcm * (d / g)
        M.append([_lift(e.num, ctx) * (lcm / d) for e, d in zip(r, dens)])
        scale_den *= lcm
    sign = 1
    prev = ctx.constant(1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            piv = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
            if piv is None:
                return ZERO
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev
            M[i][k] = ctx.constant(0)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    if sign < 0:
        det = -det
    return RatFunc(det, scale_den)


def cofactor_determinant(matrix: Sequence[Sequence[object]]) -> RatFunc:
    """Leibniz-formula determinant; an independent check for small sizes."""
    n = len(matrix)
    rows = [[as_ratfunc(e) for e in row] for row in matrix]
    total = ZERO
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ONE
        for i, j in enumerate(perm):
            term = term * rows[i][j]
            if term.is_zero():
                break
        total = total - term if inv % 2 else total + term
    return total


# ---------------------------------------------------------------------------
# parsing


_IMPLICIT = re.compile(r"(?<=[0-9)])\s*(?=[A-Za-z(])")


def parse_ratfunc(text: str, aliases: Mapping[str, str] | None = None) -> RatFunc:
    """Parse an arithmetic expression such as ``"7a-1"`` or ``"(a^2-1)/(a-1)"``.

    Implicit multiplication between a number and a name is accepted; ``^``
    means power.  ``aliases`` renames identifiers before lookup.
    """
    src = _IMPLICIT.sub("*", text.strip()).replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"malformed expression {text!r}") from exc
    aliases = aliases or {}

    def ev(node) -> RatFunc:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return const(node.value)
        if isinstance(node, ast.Name):
            return var(aliases.get(node.id, node.id))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                e = node.right
                if isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.USub) and isinstance(e.operand, ast.Constant):
                    return ev(node.left) ** (-int(e.operand.value))
                if isinstance(e, ast.Constant) and isinstance(e.value, int):
                    return ev(node.left) ** e.value
                raise ValueError(f"non-integer exponent in {text!r}")
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(tree)


def product(values: Iterable[object]) -> RatFunc:
    out = ONE
    for v in values:
        out = out * v
    return out


def rsum(values: Iterable[object]) -> RatFunc:
    out = ZERO
    for v in values:
        out = out + v
    return out
