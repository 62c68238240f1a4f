"""Orthogonal polynomials from moment sequences over Q(q).

Three independent constructions live here:

* ``stieltjes`` walks the classical bootstrap: norms L(p_k^2) give the
  three-term coefficients s_k and t_k, which give the next polynomial.
* ``orthopoly_det`` builds p_n as a bordered Hankel determinant, run
  through fraction-free (Bareiss) elimination on exact integer images.
* Closed formulas for specific families are in :mod:`qortho.closedforms`.

Hankel determinants come in two flavors for cross-checking: a direct
fraction-free determinant and the product formula over the recurrence
coefficients t_j.

Determinant internals: each matrix row over Q(q) is scaled to integer
polynomial entries (clearing denominators and integer content, with the
scale remembered), every entry is then evaluated at q = 2^w for a width
w chosen from an a-priori bound on all minors, and Bareiss elimination
runs on plain Python integers.  Because the bound makes every minor's
coefficient vector recoverable from its image, the final values unpack
to exact polynomials.  This keeps the inner loop in fast bigint
arithmetic instead of rational-function arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import _intkernel as _k
from .exactalg import QPolynomial, QRational, _poly_gcd
from .xpoly import MomentSequence, XPolynomial, apply_functional, even_part_compress

__all__ = [
    "QuasiDefinitenessError",
    "RecurrenceTable",
    "ExpansionTriangle",
    "stieltjes",
    "orthopoly_recur",
    "orthopoly_det",
    "hankel_direct",
    "hankel_product",
    "expansion_triangle",
    "deaerate",
    "aerated_recurrence",
    "aerated_orthopoly",
]


class QuasiDefinitenessError(ArithmeticError):
    """Some leading Hankel determinant vanishes, so the construction stops.

    ``level`` is the smallest k with det(a(i+j))_{0 <= i,j < k} = 0.
    """

    def __init__(self, level: int, name: str = ""):
        self.level = level
        self.name = name
        where = f" of {name!r}" if name else ""
        super().__init__(f"Hankel determinant{where} of order {level} vanishes")


@dataclass(frozen=True)
class RecurrenceTable:
    """Three-term recurrence data: p_{k+1} = (x - s_k) p_k - t_{k-1} p_{k-1}.

    For depth N: s has N entries, t has N - 1, and norms[k] = L(p_k^2).
    """

    s: tuple[QRational, ...]
    t: tuple[QRational, ...]
    norms: tuple[QRational, ...]

    @property
    def depth(self) -> int:
        return len(self.s)

    @classmethod
    def from_st(cls, s: Sequence[QRational], t: Sequence[QRational]) -> "RecurrenceTable":
        """Table from coefficients alone; norms follow since L(1) = 1."""
        norms = [QRational.one()]
        for tv in t:
            norms.append(norms[-1] * tv)
        return cls(tuple(s), tuple(t), tuple(norms[: len(s)]))


class ExpansionTriangle:
    """Coefficients a(n, k) of x^n = sum_k a(n, k) p_k(x)."""

    def __init__(self, rows: Sequence[Sequence[QRational]], name: str = ""):
        self.name = name
        self._rows = tuple(tuple(r) for r in rows)

    @property
    def max_row(self) -> int:
        return len(self._rows) - 1

    def row(self, n: int) -> tuple[QRational, ...]:
        return self._rows[n]

    def entry(self, n: int, k: int) -> QRational:
        if k < 0 or k > n:
            return QRational.zero()
        return self._rows[n][k]

    def __iter__(self):
        return iter(self._rows)

    def __len__(self):
        return len(self._rows)


# -- Stieltjes bootstrap -------------------------------------------------------


def stieltjes(moments: MomentSequence, depth: int) -> RecurrenceTable:
    """Recurrence table to the given depth, built from norms.

    Work is cached on the moment sequence, so deepening is incremental.
    Raises QuasiDefinitenessError as soon as some L(p_k^2) vanishes.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    state = moments.scratch.setdefault(
        "stieltjes", {"p": [XPolynomial.one()], "s": [], "t": [], "norms": []}
    )
    p, s, t, norms = state["p"], state["s"], state["t"], state["norms"]
    while len(s) < depth:
        k = len(s)
        pk = p[k]
        square = pk * pk
        norm_k = apply_functional(moments, square)
        if norm_k.is_zero:
            raise QuasiDefinitenessError(k + 1, moments.name)
        s_k = apply_functional(moments, square.shift_x(1)) / norm_k
        norms.append(norm_k)
        s.append(s_k)
        succ = pk.shift_x(1) - pk.scale(s_k)
        if k > 0:
            t_k = norm_k / norms[k - 1]
            t.append(t_k)
            succ = succ - p[k - 1].scale(t_k)
        p.append(succ)
    return RecurrenceTable(
        tuple(s[:depth]), tuple(t[: max(depth - 1, 0)]), tuple(norms[:depth])
    )


def orthopoly_recur(moments: MomentSequence, n: int) -> XPolynomial:
    """The monic orthogonal polynomial p_n via the three-term recurrence."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    stieltjes(moments, n)
    return moments.scratch["stieltjes"]["p"][n]


# -- exact integer elimination -------------------------------------------------


def _poly_lcm_monic(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    if a.is_one:
        return b
    if b.is_one:
        return a
    return a.divexact(_poly_gcd(a, b)) * b


def _clear_rows(
    qrows: Sequence[Sequence[QRational]],
) -> tuple[list[list[list[int]]], list[QRational], list[int]]:
    """Scale each row to integer polynomial entries.

    Returns (integer rows, per-row scales, per-row max L1 norms), where
    cleared_row_i = scale_i * original_row_i entrywise.
    """
    int_rows: list[list[list[int]]] = []
    scales: list[QRational] = []
    maxima: list[int] = []
    for row in qrows:
        den_lcm = QPolynomial.one()
        for entry in row:
            d = entry.denominator
            if not d.is_one:
                den_lcm = _poly_lcm_monic(den_lcm, d)
        cleared: list[QPolynomial] = []
        for entry in row:
            num = entry.numerator
            if not den_lcm.is_one:
                num = num * den_lcm.divexact(entry.denominator)
            cleared.append(num)
        parts = [p.int_parts() for p in cleared]
        shared = 1
        for _, d in parts:
            shared = shared * d // math.gcd(shared, d)
        ints = [_k.mul_scalar(cs, shared // d) if shared != d else cs for cs, d in parts]
        g = 0
        for cs in ints:
            g = math.gcd(g, _k.content(cs))
            if g == 1:
                break
        if g > 1:
            ints = [[c // g for c in cs] for cs in ints]
        else:
            g = max(g, 1)
        int_rows.append(ints)
        scales.append(QRational.of(den_lcm * Fraction(shared, g)))
        maxima.append(max((_k.l1(cs) for cs in ints), default=0) or 1)
    return int_rows, scales, maxima


def _minor_width(nrows_total: int, maxima: Sequence[int]) -> int:
    """Packing width so every minor's coefficients unpack unambiguously.

    A k x k minor is a signed sum of at most k! products of entries, so
    its L1 norm is at most k! times the product of per-row maxima (rows
    not listed in ``maxima``, like the symbolic border row, count as 1).
    """
    bound = math.factorial(nrows_total)
    for m in maxima:
        bound *= m
    return _k._width_for(bound)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return q


def _moment_rows(moments: MomentSequence, nrows: int, ncols: int) -> list[list[QRational]]:
    return [[moments.moment(i + j) for j in range(ncols)] for i in range(nrows)]


def orthopoly_det(moments: MomentSequence, n: int) -> XPolynomial:
    """The monic orthogonal polynomial p_n as a bordered Hankel determinant.

    The determinantal form puts the moments a(i+j) in rows 0..n-1 and
    the powers 1, x, ..., x^n in the last row; dividing the determinant
    by the order-n Hankel determinant makes the result monic.  The
    whole matrix is eliminated in one Bareiss sweep, with the symbolic
    x-row carried per power of x, so the n leading Hankel minors fall
    out as pivots and quasi-definiteness is checked on the way.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n == 0:
        return XPolynomial.one()
    int_rows, _, maxima = _clear_rows(_moment_rows(moments, n, n + 1))
    w = _minor_width(n + 1, maxima)
    rows = [[_k.pack(cs, w) for cs in row] for row in int_rows]
    # Column-major border: xcols[j][e] is the x^e coefficient of the
    # bottom-row entry in column j (initially exactly x^j).
    xcols = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        xcols[j][j] = 1
    prev = 1
    for k in range(n):
        pivot = rows[k][k]
        if pivot == 0:
            raise QuasiDefinitenessError(k + 1, moments.name)
        row_k = rows[k]
        for i in range(k + 1, n):
            row_i = rows[i]
            factor = row_i[k]
            for j in range(k + 1, n + 1):
                row_i[j] = _exact_div(pivot * row_i[j] - factor * row_k[j], prev)
            row_i[k] = 0
        xk = xcols[k]
        for j in range(k + 1, n + 1):
            col = xcols[j]
            rkj = row_k[j]
            for e in range(n + 1):
                col[e] = _exact_div(pivot * col[e] - xk[e] * rkj, prev)
        prev = pivot
    # prev is now the cleared order-n Hankel determinant; the border
    # column holds the cleared full determinant, so the row scales
    # cancel in the ratio and the quotient is the monic polynomial.
    den = QPolynomial(_k.unpack(prev, w))
    return XPolynomial(
        [QRational.of(QPolynomial(_k.unpack(c, w)), den) for c in xcols[n]]
    )


def hankel_direct(moments: MomentSequence, n: int) -> QRational:
    """det(a(i+j))_{0 <= i,j < n} by fraction-free elimination.

    Row swaps keep the elimination going past zero pivots, so singular
    matrices come back as an honest 0 rather than an error.
    """
    if n < 0:
        raise ValueError("order must be >= 0")
    if n == 0:
        return QRational.one()
    int_rows, scales, maxima = _clear_rows(_moment_rows(moments, n, n))
    w = _minor_width(n, maxima)
    rows = [[_k.pack(cs, w) for cs in row] for row in int_rows]
    sign = 1
    prev = 1
    for k in range(n):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return QRational.zero()
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, n):
            row_i = rows[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(pivot * row_i[j] - factor * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    det = QRational.of(QPolynomial(_k.unpack(sign * prev, w)))
    for s in scales:
        det = det / s
    return det


def hankel_product(moments: MomentSequence, n: int) -> QRational:
    """det(a(i+j))_{0 <= i,j < n} as the product of recurrence t-powers.

    d_n = prod_{j=0}^{n-2} t_j^{n-1-j}; this needs the sequence to be
    quasi-definite through depth n, unlike the direct determinant.
    """
    if n < 0:
        raise ValueError("order must be >= 0")
    if n <= 1:
        return QRational.one()
    table = stieltjes(moments, n)
    out = QRational.one()
    for j in range(n - 1):
        out = out * table.t[j] ** (n - 1 - j)
    return out


# -- expansions ----------------------------------------------------------------


def expansion_triangle(moments: MomentSequence, rows: int) -> ExpansionTriangle:
    """Triangle of coefficients a(n, k) of x^n in the p_k basis, n <= rows.

    Built by the inverse recurrence a(n, k) = a(n-1, k-1)
    + s_k a(n-1, k) + t_k a(n-1, k+1); column 0 recovers the moments.
    """
    if rows < 0:
        raise ValueError("rows must be >= 0")
    table = stieltjes(moments, rows)
    zero = QRational.zero()
    out: list[list[QRational]] = [[QRational.one()]]
    for n in range(1, rows + 1):
        prev = out[-1]

        def at(j: int) -> QRational:
            return prev[j] if 0 <= j < n else zero

        row = []
        for k in range(n + 1):
            acc = at(k - 1)
            if k < n:
                acc = acc + table.s[k] * at(k)
            if k + 1 < n:
                acc = acc + table.t[k] * at(k + 1)
            row.append(acc)
        out.append(row)
    return ExpansionTriangle(out, name=moments.name)


# -- aeration ------------------------------------------------------------------


def deaerate(T, depth: int) -> RecurrenceTable:
    """Recurrence of the original sequence from aerated coefficients T_j.

    If the aerated (symmetric) sequence satisfies
    P_k = x P_{k-1} - T_{k-2} P_{k-2}, the base sequence satisfies the
    three-term recurrence with s_n = T_{2n-1} + T_{2n} (taking T_{-1}
    = 0) and t_n = T_{2n} T_{2n+1}.  ``T`` may be a sequence or a
    callable index -> value; depth N consumes T_0 .. T_{2N-2}.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    get: Callable[[int], QRational] = T.__getitem__ if hasattr(T, "__getitem__") else T
    lift = QRational.of
    s = [lift(get(0))]
    for i in range(1, depth):
        s.append(lift(get(2 * i - 1)) + lift(get(2 * i)))
    t = [lift(get(2 * i)) * lift(get(2 * i + 1)) for i in range(depth - 1)]
    return RecurrenceTable.from_st(s, t)


def aerated_recurrence(symmetric_moments: MomentSequence, depth: int) -> tuple[QRational, ...]:
    """Coefficients T_0 .. T_{depth-1} with P_k = x P_{k-1} - T_{k-2} P_{k-2}.

    The input must be symmetric (odd moments zero), which makes every
    s_k vanish; anything else is rejected.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    table = stieltjes(symmetric_moments, depth + 1)
    if any(not v.is_zero for v in table.s):
        raise ValueError(
            f"moment sequence {symmetric_moments.name!r} is not symmetric"
        )
    return table.t[:depth]


def aerated_orthopoly(symmetric_moments: MomentSequence, n: int) -> XPolynomial:
    """p_n of the base sequence, read off the aerated sequence.

    The degree-2n polynomial of a symmetric sequence is even, and
    substituting x^2 -> x in it gives exactly the degree-n polynomial
    of the sequence before aeration.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n == 0:
        return XPolynomial.one()
    big = orthopoly_recur(symmetric_moments, 2 * n)
    table = stieltjes(symmetric_moments, 2 * n)
    if any(not v.is_zero for v in table.s):
        raise ValueError(
            f"moment sequence {symmetric_moments.name!r} is not symmetric"
        )
    return even_part_compress(big)
