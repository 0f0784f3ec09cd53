"""Partitions and superpartitions.

A superpartition is stored as the pair ``(circled, star)`` of partitions
(``circled`` contains ``star`` and the difference is a rook strip).  The
``(a1,...,am;s1,...,sk)`` notation is a derived view.  Cells are 1-indexed
``(row, col)`` with row 1 at the top.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator

Partition = tuple  # weakly decreasing tuple of positive ints
Cell = tuple  # (row, col), 1-indexed

PRE_SQUARE = "preexisting-square"
NEW_SQUARE = "new-square"
BUMPING = "bumping-square"
PRE_CIRCLE = "preexisting-circle"
NEW_CIRCLE = "new-circle"

CELL_KINDS = (PRE_SQUARE, NEW_SQUARE, BUMPING, PRE_CIRCLE, NEW_CIRCLE)


class StripError(ValueError):
    """Raised when Omega/Lambda is not a strip of the requested kind."""


# ---------------------------------------------------------------------------
# ordinary partitions


def canonical(parts) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def conjugate_partition(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(big: Partition, small: Partition) -> bool:
    if len(small) > len(big):
        return False
    return all(s <= b for s, b in zip(small, big))


def partition_dominates(lam: Partition, mu: Partition) -> bool:
    """True iff ``mu <= lam`` in dominance order (equal sizes required)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if b > a:
            return False
    return True


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` with parts at most ``max_part``, lex-descending."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            out.append((p,) + rest)
    return tuple(out)


def z_lambda(lam: Partition) -> int:
    """``prod_i i^{n_i} n_i!`` for the part multiplicities ``n_i``."""
    from collections import Counter
    from math import factorial

    z = 1
    for part, mult in Counter(lam).items():
        z *= part ** mult * factorial(mult)
    return z


def _cells(lam: Partition) -> set:
    return {(i + 1, j + 1) for i, p in enumerate(lam) for j in range(p)}


# ---------------------------------------------------------------------------
# superpartitions


@dataclass(frozen=True, order=False)
class SuperPartition:
    circled: Partition
    star: Partition

    def __post_init__(self):
        circled = canonical(self.circled)
        star = canonical(self.star)
        object.__setattr__(self, "circled", circled)
        object.__setattr__(self, "star", star)
        if not contains(circled, star):
            raise ValueError(f"star diagram {star} not contained in circled diagram {circled}")
        padded = star + (0,) * (len(circled) - len(star))
        diffs = [c - s for c, s in zip(circled, padded)]
        if any(d > 1 for d in diffs):
            raise ValueError(f"{circled}/{star} has two cells in one row")
        cols = [c for c, d in zip(circled, diffs) if d == 1]
        if len(set(cols)) != len(cols):
            raise ValueError(f"{circled}/{star} has two cells in one column")

    # -- alternative views ---------------------------------------------
    @classmethod
    def from_parts(cls, antisym, sym) -> "SuperPartition":
        a = tuple(int(x) for x in antisym)
        s = tuple(int(x) for x in sym)
        if len(set(a)) != len(a):
            raise ValueError(f"repeated fermionic part in {a}")
        if any(a[i] <= a[i + 1] for i in range(len(a) - 1)):
            raise ValueError(f"fermionic parts {a} must be strictly decreasing")
        if any(x < 0 for x in a + s):
            raise ValueError("negative part")
        s = canonical(s)
        star = tuple(sorted(a + s, reverse=True))
        circled = tuple(sorted(tuple(x + 1 for x in a) + s, reverse=True))
        return cls(circled, star)

    @property
    def m(self) -> int:
        return sum(self.circled) - sum(self.star)

    @property
    def n(self) -> int:
        return sum(self.star)

    @property
    def degree(self) -> tuple[int, int]:
        return (self.n, self.m)

    @property
    def fermionic_rows(self) -> tuple[int, ...]:
        """1-indexed rows carrying a circle."""
        padded = self.star + (0,) * (len(self.circled) - len(self.star))
        return tuple(i + 1 for i, (c, s) in enumerate(zip(self.circled, padded)) if c != s)

    @property
    def antisym(self) -> tuple[int, ...]:
        return tuple(self.circled[r - 1] - 1 for r in self.fermionic_rows)

    @property
    def sym(self) -> Partition:
        rows = set(self.fermionic_rows)
        return tuple(p for i, p in enumerate(self.star) if i + 1 not in rows)

    @property
    def parts(self) -> tuple[int, ...]:
        """``(Lambda_1, ..., Lambda_l)``: fermionic parts then bosonic parts."""
        return self.antisym + self.sym

    @property
    def length(self) -> int:
        """Length of the circled diagram, ``m + l(sym)``."""
        return len(self.circled)

    def circles(self) -> tuple[Cell, ...]:
        return tuple((r, self.circled[r - 1]) for r in self.fermionic_rows)

    def cells(self, diagram: str = "star") -> set:
        return _cells(self.circled if diagram == "circled" else self.star)

    def __str__(self):
        return "(" + ",".join(map(str, self.antisym)) + ";" + ",".join(map(str, self.sym)) + ")"

    def __repr__(self):
        return f"SuperPartition{str(self)}"

    def to_json(self) -> dict:
        return {"a": list(self.antisym), "s": list(self.sym)}

    @classmethod
    def from_json(cls, obj) -> "SuperPartition":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls.from_parts(obj["a"], obj["s"])

    def sort_key(self):
        return (self.star, self.circled)


EMPTY = SuperPartition((), ())

_PARSE = re.compile(r"^\(\s*([0-9,\s]*)\s*;\s*([0-9,\s]*)\s*\)$")


def parse(text: str) -> SuperPartition:
    """Parse the ``(a1,...,am;s1,...,sk)`` notation; ``(;)`` is empty."""
    mt = _PARSE.match(text.strip().replace("∅", ""))
    if not mt:
        raise ValueError(f"malformed superpartition {text!r}")

    def ints(chunk):
        chunk = chunk.strip()
        if not chunk:
            return ()
        items = [c.strip() for c in chunk.split(",")]
        if any(not c.isdigit() for c in items):
            raise ValueError(f"malformed superpartition {text!r}")
        return tuple(int(c) for c in items)

    a, s = ints(mt.group(1)), ints(mt.group(2))
    if len(set(a)) != len(a):
        raise ValueError(f"repeated fermionic part in {text!r}")
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"fermionic parts not decreasing in {text!r}")
    if any(s[i] < s[i + 1] for i in range(len(s) - 1)):
        raise ValueError(f"bosonic parts not weakly decreasing in {text!r}")
    return SuperPartition.from_parts(a, s)


def conjugate(sp: SuperPartition) -> SuperPartition:
    return SuperPartition(conjugate_partition(sp.circled), conjugate_partition(sp.star))


def dominance_leq(omega: SuperPartition, lam: SuperPartition) -> bool:
    """``omega <= lam``: equal degrees and both diagrams dominated."""
    if omega.degree != lam.degree:
        return False
    return partition_dominates(lam.star, omega.star) and partition_dominates(lam.circled, omega.circled)


@lru_cache(maxsize=None)
def enumerate_superpartitions(n: int, m: int) -> tuple[SuperPartition, ...]:
    """All superpartitions of degree ``(n|m)``, most dominant first.

    The order is reverse lexicographic on ``(star, circled)``, which is a
    linear extension of dominance.
    """
    if n < 0 or m < 0:
        return ()
    out = []
    for k in range(0, n + 1):
        for a in combinations(range(k, -1, -1), m):
            if sum(a) != k:
                continue
            for s in partitions(n - k):
                out.append(SuperPartition.from_parts(a, s))
    out.sort(key=SuperPartition.sort_key, reverse=True)
    return tuple(out)


def arm_leg(sp: SuperPartition, cell: Cell, diagram: str) -> tuple[int, int]:
    """Arm and leg of ``cell`` in the ``star`` or ``circled`` diagram."""
    lam = sp.circled if diagram == "circled" else sp.star
    if diagram not in ("star", "circled"):
        raise ValueError(f"unknown diagram {diagram!r}")
    r, c = cell
    if r < 1 or c < 1 or r > len(lam) or lam[r - 1] < c:
        raise ValueError(f"cell {cell} lies outside the {diagram} diagram {lam}")
    return lam[r - 1] - c, conjugate_partition(lam)[c - 1] - r


def arm(lam: Partition, cell: Cell) -> int:
    r, c = cell
    return (lam[r - 1] if r <= len(lam) else 0) - c


def leg(lam: Partition, cell: Cell) -> int:
    r, c = cell
    return sum(1 for p in lam if p >= c) - r


# ---------------------------------------------------------------------------
# strips


@dataclass(frozen=True)
class StripClassification:
    """Cell taxonomy of a vertical strip ``Omega/Lambda``.

    ``xlabels`` enumerate bumping and new squares top to bottom, ``ylabels``
    new circles and new squares top to bottom.  Labels are ``(index, cell)``
    with 1-based indices.
    """

    kind: str  # "e" or "etilde"
    n: int
    lam: SuperPartition
    omega: SuperPartition
    cells: dict = field(hash=False, compare=False)
    xlabels: tuple = ()
    ylabels: tuple = ()

    def of_kind(self, kind: str) -> tuple[Cell, ...]:
        return tuple(sorted(c for c, k in self.cells.items() if k == kind))

    def count(self, kind: str) -> int:
        return sum(1 for k in self.cells.values() if k == kind)

    def x_values(self, alpha):
        return [alpha * c[1] - c[0] for _, c in self.xlabels]

    def y_values(self, alpha):
        return [alpha * c[1] - c[0] for _, c in self.ylabels]

    def row_relation(self, i: int, j: int) -> str:
        """Relation between x_i and y_j: ``same``, ``other`` or ``none``."""
        row = self.xlabels[i - 1][1][0]
        ys = [k for k, c in self.ylabels if c[0] == row]
        if not ys:
            return "none"
        return "same" if j in ys else "other"


def _vertical_strip(big: Partition, small: Partition) -> bool:
    if not contains(big, small):
        return False
    padded = small + (0,) * (len(big) - len(small))
    return all(b - s <= 1 for b, s in zip(big, padded))


def _horizontal_strip(big: Partition, small: Partition) -> bool:
    return _vertical_strip(conjugate_partition(big), conjugate_partition(small))


def classify_strip(lam: SuperPartition, omega: SuperPartition) -> StripClassification:
    """Classify the cells of a vertical ``n``- or ``n~``-strip ``omega/lam``."""
    n = omega.n - lam.n
    dn = sum(omega.circled) - sum(lam.circled)
    if not contains(omega.star, lam.star):
        raise StripError(f"star diagram of {lam} is not contained in that of {omega}")
    if not contains(omega.circled, lam.circled):
        raise StripError(f"circled diagram of {lam} is not contained in that of {omega}")
    if not _vertical_strip(omega.star, lam.star):
        raise StripError(f"{omega.star}/{lam.star} is not a vertical strip")
    if not _vertical_strip(omega.circled, lam.circled):
        raise StripError(f"{omega.circled}/{lam.circled} is not a vertical strip")
    if dn == n:
        kind = "e"
        if n < 1:
            raise StripError("an e-strip must add at least one square")
    elif dn == n + 1:
        kind = "etilde"
    else:
        raise StripError(f"circled diagram grows by {dn} cells, star diagram by {n}: neither an n- nor an n~-strip")

    lam_star, lam_circ = lam.cells("star"), lam.cells("circled")
    om_star, om_circ = omega.cells("star"), omega.cells("circled")
    lam_circles = lam_circ - lam_star
    cells = {}
    for c in om_circ:
        if c in lam_star:
            cells[c] = PRE_SQUARE
        elif c in om_star:
            cells[c] = BUMPING if c in lam_circles else NEW_SQUARE
        elif c in lam_circles:
            cells[c] = PRE_CIRCLE
        else:
            cells[c] = NEW_CIRCLE
    order = sorted(cells)  # top to bottom; rows hold at most one labelled cell of each type
    xs = [c for c in order if cells[c] in (BUMPING, NEW_SQUARE)]
    ys = [c for c in order if cells[c] in (NEW_CIRCLE, NEW_SQUARE)]
    xs.sort()
    ys.sort()
    return StripClassification(
        kind=kind,
        n=n,
        lam=lam,
        omega=omega,
        cells=cells,
        xlabels=tuple((i + 1, c) for i, c in enumerate(xs)),
        ylabels=tuple((j + 1, c) for j, c in enumerate(ys)),
    )


def _vertical_additions(lam: Partition, k: int) -> Iterator[Partition]:
    """Partitions obtained from ``lam`` by adding a vertical k-strip."""
    rows = len(lam) + k
    padded = lam + (0,) * k
    for chosen in combinations(range(rows), k):
        new = list(padded)
        for r in chosen:
            new[r] += 1
        if all(new[i] >= new[i + 1] for i in range(rows - 1)):
            yield canonical(new)


def _rook_additions(lam: Partition, k: int) -> Iterator[Partition]:
    """Partitions obtained from ``lam`` by adding ``k`` cells, no two in a row or column."""
    rows = len(lam) + k
    padded = lam + (0,) * k
    for chosen in combinations(range(rows), k):
        cols = [padded[r] + 1 for r in chosen]
        if len(set(cols)) != k:
            continue
        new = list(padded)
        for r in chosen:
            new[r] += 1
        if all(new[i] >= new[i + 1] for i in range(rows - 1)):
            yield canonical(new)


@lru_cache(maxsize=None)
def _vertical_strips(lam: SuperPartition, n: int, tilde: bool) -> tuple:
    out = []
    m_new = lam.m + (1 if tilde else 0)
    target = n + (1 if tilde else 0)
    for star in _vertical_additions(lam.star, n):
        for circled in _rook_additions(star, m_new):
            if not contains(circled, lam.circled):
                continue
            if sum(circled) - sum(lam.circled) != target:
                continue
            if not _vertical_strip(circled, lam.circled):
                continue
            omega = SuperPartition(circled, star)
            out.append((omega, classify_strip(lam, omega)))
    out.sort(key=lambda pair: pair[0].sort_key(), reverse=True)
    return tuple(out)


def strips(lam: SuperPartition, n: int, kind: str) -> list:
    """All ``(Omega, classification)`` with ``Omega/lam`` a strip of ``kind``.

    Vertical kinds ``e``/``etilde`` carry their classification; horizontal
    kinds ``g``/``gtilde`` are obtained by conjugating the vertical strips
    of the conjugate and carry the classification of ``Omega'/lam'``.
    """
    if kind in ("e", "g") and n < 1:
        return []
    if n < 0:
        return []
    if kind in ("e", "etilde"):
        return list(_vertical_strips(lam, n, kind == "etilde"))
    if kind in ("g", "gtilde"):
        conj = _vertical_strips(conjugate(lam), n, kind == "gtilde")
        out = [(conjugate(om), cls) for om, cls in conj]
        out.sort(key=lambda pair: pair[0].sort_key(), reverse=True)
        return out
    raise ValueError(f"unknown strip kind {kind!r}")


def is_horizontal_strip(lam: SuperPartition, omega: SuperPartition, tilde: bool) -> bool:
    n = omega.n - lam.n
    dn = sum(omega.circled) - sum(lam.circled)
    return (
        contains(omega.star, lam.star)
        and contains(omega.circled, lam.circled)
        and _horizontal_strip(omega.star, lam.star)
        and _horizontal_strip(omega.circled, lam.circled)
        and dn == n + (1 if tilde else 0)
    )


def classify_horizontal_strip(lam: SuperPartition, omega: SuperPartition) -> StripClassification:
    """Classify a horizontal strip ``omega/lam`` directly on its own diagrams.

    Cell kinds are those of the conjugate vertical strip, transposed back.
    Labels are read bottom to top, that is by increasing column; each column
    holds at most one x label and at most one y label.
    """
    conj = classify_strip(conjugate(lam), conjugate(omega))
    cells = {(c, r): k for (r, c), k in conj.cells.items()}
    return StripClassification(
        kind="g" if conj.kind == "e" else "gtilde",
        n=conj.n,
        lam=lam,
        omega=omega,
        cells=cells,
        xlabels=tuple((i, (c, r)) for i, (r, c) in conj.xlabels),
        ylabels=tuple((j, (c, r)) for j, (r, c) in conj.ylabels),
    )


def column_relation(cls: StripClassification, i: int, j: int) -> str:
    """Column analogue of :meth:`StripClassification.row_relation`."""
    col = cls.xlabels[i - 1][1][1]
    ys = [k for k, c in cls.ylabels if c[1] == col]
    if not ys:
        return "none"
    return "same" if j in ys else "other"
