"""The built-in moment families and their closed recurrence data.

A family is a named moment sequence a(n) in Q(q) with a(0) = 1, plus
whatever closed-form extras it supports: three-term recurrence
coefficients s_n/t_n, aerated recurrence coefficients T_n, and (via the
closedforms module) explicit orthogonal polynomials.

Families are addressed by a tag plus small integer parameters, written
``tag`` or ``tag:key=value,key=value`` on the command line:

    geometric-q               a(n) = q^(n(n-1)/2)
    q-factorial:m=M           a(n) = [n+M]!/[M]!
    multifactorial:r=R,m=M    a(n) = mf(Rn+M)/mf(M), mf stepping by R
    q-double-factorial        a(n) = [1][3]...[2n-1]
    andrews-q-catalan         a(n) = [2]*[2n-1]!!/[2n+2]!!
    q-central-binomial        a(n) = [2n-1]!!/[2n]!!
    fibonacci-functional      moments of the functional killing the
                              q-Fibonacci basis above degree 0
    lucas-functional          same for the q-Lucas basis

The geometric-q family is perfectly regular over Q(q) but degenerates
at q = 1 (its Hankel determinants pick up factors of q - 1), so
specializing it there raises a quasi-definiteness error downstream.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable

from .exactalg import QPolynomial, QRational
from .qcombinatorics import (
    q_bracket,
    q_double_factorial,
    q_factorial,
    q_multifactorial,
    q_power_binom2,
)
from .xpoly import MomentSequence, XPolynomial

__all__ = [
    "FamilyId",
    "MomentFamily",
    "family",
    "family_moment",
    "aerated_moment",
    "closed_T",
    "closed_st",
    "functional_from_basis",
    "registry_family_ids",
    "DEFAULT_DEPTH_CAP",
    "HARD_DEPTH_CAP",
]

# User-facing depth limits, enforced at the CLI / verification entry
# points.  Library internals go deeper freely (an order-n Hankel
# determinant needs moments out to index 2n - 2).
DEFAULT_DEPTH_CAP = 12
HARD_DEPTH_CAP = 20

_TAGS_WITH_M = {"q-factorial", "multifactorial"}
_TAGS_WITH_R = {"multifactorial"}
_ALL_TAGS = (
    "geometric-q",
    "q-factorial",
    "multifactorial",
    "q-double-factorial",
    "andrews-q-catalan",
    "q-central-binomial",
    "fibonacci-functional",
    "lucas-functional",
)
# Families whose aerated recurrence the machinery exposes.
_AERATED_TAGS = {
    "q-factorial",
    "multifactorial",
    "q-double-factorial",
    "andrews-q-catalan",
    "q-central-binomial",
}
_CLOSED_T_TAGS = {"q-factorial", "multifactorial", "andrews-q-catalan", "q-central-binomial"}
_CLOSED_ST_TAGS = {"q-factorial", "multifactorial"}


@dataclass(frozen=True)
class FamilyId:
    """A family tag plus its integer parameters."""

    tag: str
    m: int | None = None
    r: int | None = None

    def __post_init__(self):
        if self.tag not in _ALL_TAGS:
            raise ValueError(f"unknown family {self.tag!r}")
        if self.tag in _TAGS_WITH_M:
            m = 0 if self.m is None else self.m
            if not isinstance(m, int) or m < 0:
                raise ValueError(f"family {self.tag} needs integer m >= 0")
            object.__setattr__(self, "m", m)
        elif self.m is not None:
            raise ValueError(f"family {self.tag} takes no parameter m")
        if self.tag in _TAGS_WITH_R:
            r = 1 if self.r is None else self.r
            if not isinstance(r, int) or r < 1:
                raise ValueError(f"family {self.tag} needs integer r >= 1")
            object.__setattr__(self, "r", r)
        elif self.r is not None:
            raise ValueError(f"family {self.tag} takes no parameter r")

    @classmethod
    def parse(cls, spec: str) -> "FamilyId":
        """Parse 'tag' or 'tag:key=value,key=value'."""
        name, _, params = spec.partition(":")
        name = name.strip()
        kwargs: dict[str, int] = {}
        if params:
            for item in params.split(","):
                key, eq, value = item.partition("=")
                key = key.strip()
                if not eq or key not in ("m", "r"):
                    raise ValueError(f"bad family parameter {item!r} in {spec!r}")
                try:
                    kwargs[key] = int(value.strip())
                except ValueError:
                    raise ValueError(f"bad family parameter {item!r} in {spec!r}") from None
        return cls(name, **kwargs)

    def __str__(self):
        parts = []
        if self.r is not None:
            parts.append(f"r={self.r}")
        if self.m is not None:
            parts.append(f"m={self.m}")
        return self.tag if not parts else f"{self.tag}:{','.join(parts)}"


def _qr(num, den=None) -> QRational:
    return QRational.of(num) if den is None else QRational.of(num, den)


def _moment_rule(fid: FamilyId) -> Callable[[int], QRational]:
    tag = fid.tag
    if tag == "geometric-q":
        return lambda n: _qr(q_power_binom2(n))
    if tag == "q-factorial":
        m = fid.m
        return lambda n: _qr(q_factorial(n + m).divexact(q_factorial(m)))
    if tag == "multifactorial":
        r, m = fid.r, fid.m
        return lambda n: _qr(q_multifactorial(r * n + m, r).divexact(q_multifactorial(m, r)))
    if tag == "q-double-factorial":
        return lambda n: _qr(q_double_factorial(n, "odd"))
    if tag == "andrews-q-catalan":
        return lambda n: _qr(
            q_bracket(2) * q_double_factorial(n, "odd"), q_double_factorial(n + 1, "even")
        )
    if tag == "q-central-binomial":
        return lambda n: _qr(q_double_factorial(n, "odd"), q_double_factorial(n, "even"))
    if tag == "fibonacci-functional":
        def fib_rule(n: int) -> QRational:
            from . import closedforms  # deferred; closedforms imports this module

            return functional_from_basis(closedforms.cf_qfibonacci, n)

        return fib_rule
    if tag == "lucas-functional":
        def lucas_rule(n: int) -> QRational:
            from . import closedforms

            return functional_from_basis(closedforms.cf_qlucas, n)

        return lucas_rule
    raise ValueError(f"unknown family {tag!r}")


def closed_T(fid: "FamilyId | str", j: int) -> QRational:
    """Closed-form aerated recurrence coefficient T_j, where available."""
    fid = _as_fid(fid)
    if j < 0:
        raise ValueError("T index must be >= 0")
    tag = fid.tag
    if tag == "q-factorial":
        m = fid.m
        i, odd = divmod(j, 2)
        if odd:
            return _qr(QPolynomial.monomial(i + m + 1) * q_bracket(i + 1))
        return _qr(QPolynomial.monomial(i) * q_bracket(i + 1 + m))
    if tag == "multifactorial":
        r, m = fid.r, fid.m
        i, odd = divmod(j, 2)
        if odd:
            return _qr(QPolynomial.monomial(r * (i + 1) + m) * q_bracket(r * (i + 1)))
        return _qr(QPolynomial.monomial(r * i) * q_bracket(r * (i + 1) + m))
    if tag == "andrews-q-catalan":
        den = (QPolynomial.one() + QPolynomial.monomial(j + 1)) * (
            QPolynomial.one() + QPolynomial.monomial(j + 2)
        )
        return _qr(QPolynomial.monomial(j), den)
    if tag == "q-central-binomial":
        if j == 0:
            return _qr(QPolynomial.one(), QPolynomial.one() + QPolynomial.variable())
        den = (QPolynomial.one() + QPolynomial.monomial(j)) * (
            QPolynomial.one() + QPolynomial.monomial(j + 1)
        )
        return _qr(QPolynomial.monomial(j), den)
    raise ValueError(f"no closed aerated recurrence for family {fid}")


def closed_st(fid: "FamilyId | str", i: int) -> tuple[QRational, QRational]:
    """Closed-form three-term coefficients (s_i, t_i), where available."""
    fid = _as_fid(fid)
    if i < 0:
        raise ValueError("recurrence index must be >= 0")
    tag = fid.tag
    if tag == "q-factorial":
        m = fid.m
        s = QPolynomial.monomial(i) * (q_bracket(i + m + 1) + QPolynomial.monomial(m) * q_bracket(i))
        t = QPolynomial.monomial(2 * i + m + 1) * q_bracket(i + 1) * q_bracket(i + 1 + m)
        return _qr(s), _qr(t)
    if tag == "multifactorial":
        r, m = fid.r, fid.m
        s = QPolynomial.monomial(r * i) * (
            q_bracket(r * (i + 1) + m) + QPolynomial.monomial(m) * q_bracket(r * i)
        )
        t = QPolynomial.monomial(r * (2 * i + 1) + m) * q_bracket(r * (i + 1)) * q_bracket(
            r * (i + 1) + m
        )
        return _qr(s), _qr(t)
    raise ValueError(f"no closed three-term coefficients for family {fid}")


class MomentFamily:
    """A registered family: identity, moments, and closed-form hooks."""

    def __init__(self, fid: FamilyId):
        self.fid = fid
        self.moments = MomentSequence(_moment_rule(fid), name=str(fid))
        self._aerated: MomentSequence | None = None
        self._specialized: dict = {}
        self._lock = threading.Lock()

    @property
    def tag(self) -> str:
        return self.fid.tag

    @property
    def aerated_capable(self) -> bool:
        return self.fid.tag in _AERATED_TAGS

    @property
    def has_closed_T(self) -> bool:
        return self.fid.tag in _CLOSED_T_TAGS

    @property
    def has_closed_st(self) -> bool:
        return self.fid.tag in _CLOSED_ST_TAGS

    @property
    def aerated_moments(self) -> MomentSequence:
        with self._lock:
            if self._aerated is None:
                self._aerated = self.moments.aerated()
            return self._aerated

    def specialized_moments(self, point) -> MomentSequence:
        from fractions import Fraction

        p = Fraction(point)
        with self._lock:
            if p not in self._specialized:
                self._specialized[p] = self.moments.specialized(p)
            return self._specialized[p]

    def closed_T(self, j: int) -> QRational:
        return closed_T(self.fid, j)

    def closed_st(self, i: int) -> tuple[QRational, QRational]:
        return closed_st(self.fid, i)

    def closed_poly(self, n: int) -> XPolynomial | None:
        """Closed-form monic orthogonal polynomial, when one exists."""
        from . import closedforms  # deferred; closedforms imports this module

        return closedforms.closed_polynomial(self.fid, n)

    def __repr__(self):
        return f"MomentFamily({self.fid})"


_registry: dict[FamilyId, MomentFamily] = {}
_registry_lock = threading.Lock()


def _as_fid(spec: "FamilyId | str") -> FamilyId:
    if isinstance(spec, FamilyId):
        return spec
    if isinstance(spec, str):
        return FamilyId.parse(spec)
    raise TypeError(f"family spec must be FamilyId or str, got {type(spec).__name__}")


def family(spec: "FamilyId | str") -> MomentFamily:
    """The interned MomentFamily for a spec string or FamilyId."""
    fid = _as_fid(spec)
    with _registry_lock:
        fam = _registry.get(fid)
        if fam is None:
            fam = MomentFamily(fid)
            _registry[fid] = fam
        return fam


def family_moment(spec: "FamilyId | str", n: int) -> QRational:
    """a(n) for the family."""
    return family(spec).moments.moment(n)


def aerated_moment(spec: "FamilyId | str", n: int) -> QRational:
    """A(2k) = a(k), A(2k+1) = 0."""
    return family(spec).aerated_moments.moment(n)


def functional_from_basis(basis: Callable[[int], XPolynomial], n: int) -> QRational:
    """Coefficient of the degree-0 element when x^n is expanded in the basis.

    ``basis(k)`` must be monic of degree exactly k; anything else raises
    ValueError.  This defines the moments of the linear functional that
    sends basis(0) to 1 and every higher basis element to 0.
    """
    if n < 0:
        raise ValueError("moment index must be >= 0")
    residual: list[QRational] = [QRational.zero()] * (n + 1)
    residual[n] = QRational.one()
    for k in range(n, 0, -1):
        ck = residual[k]
        if ck.is_zero:
            continue
        b = basis(k)
        if b.degree != k or not b.is_monic:
            raise ValueError(f"basis element {k} is not monic of degree {k}")
        for j, bc in enumerate(b.coefficients):
            if not bc.is_zero:
                residual[j] = residual[j] - ck * bc
        residual[k] = QRational.zero()
    b0 = basis(0)
    if b0.degree != 0 or not b0.is_monic:
        raise ValueError("basis element 0 is not monic of degree 0")
    return residual[0]


def registry_family_ids(include_functionals: bool = True) -> list[FamilyId]:
    """The standard sweep of family instances used by verification."""
    ids: list[FamilyId] = [FamilyId("geometric-q")]
    ids += [FamilyId("q-factorial", m=m) for m in range(4)]
    ids += [FamilyId("multifactorial", m=m, r=r) for r in (1, 2, 3) for m in (0, 1, 2)]
    ids.append(FamilyId("q-double-factorial"))
    ids.append(FamilyId("andrews-q-catalan"))
    ids.append(FamilyId("q-central-binomial"))
    if include_functionals:
        ids.append(FamilyId("fibonacci-functional"))
        ids.append(FamilyId("lucas-functional"))
    return ids
