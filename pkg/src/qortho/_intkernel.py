"""Dense integer-polynomial kernel.

Polynomials here are plain lists of Python ints, ascending by exponent,
with no guarantee about trailing zeros unless stated.  Everything in the
package that needs to be fast (multiplication, gcd, fraction-free
determinants) bottoms out in these helpers, because CPython bigint
arithmetic is the only genuinely quick exact arithmetic available.

Large multiplications use Kronecker substitution: evaluate both factors
at q = 2**w for a width w that provably bounds every coefficient of the
product, multiply once as integers, and read the coefficients back off
as balanced base-2**w digits.  Packing and unpacking are linear in the
bit length because they go through ``int.to_bytes``/``from_bytes``.
"""

from __future__ import annotations

import math
from functools import reduce

# Below this many coefficients on the shorter side, schoolbook wins.
_SCHOOLBOOK_CUTOFF = 24


def strip(cs: list[int]) -> list[int]:
    """Drop trailing zero coefficients (in place is fine, return the list)."""
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def content(cs: list[int]) -> int:
    """gcd of all coefficients, >= 0.  Zero polynomial has content 0."""
    return reduce(math.gcd, cs, 0)


def primitive(cs: list[int]) -> tuple[int, list[int]]:
    """Split into (content-with-sign, primitive part with positive lead).

    primitive([]) is (1, []).  The returned content carries the sign of
    the leading coefficient so content * part == input.
    """
    cs = strip(list(cs))
    if not cs:
        return 1, []
    c = content(cs)
    if cs[-1] < 0:
        c = -c
    return c, [a // c for a in cs]


def add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return strip(out)


def neg(a: list[int]) -> list[int]:
    return [-v for v in a]


def mul_scalar(a: list[int], k: int) -> list[int]:
    if k == 0:
        return []
    return [v * k for v in a]


def _mul_schoolbook(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _pack_nonneg(cs: list[int], wbytes: int) -> int:
    """Pack nonnegative coefficients as little-endian fixed-width digits."""
    buf = b"".join(c.to_bytes(wbytes, "little") for c in cs)
    return int.from_bytes(buf, "little")


def pack(cs: list[int], w: int) -> int:
    """Evaluate the integer polynomial at q = 2**w.  w must be a multiple of 8."""
    wbytes = w // 8
    pos = [c if c > 0 else 0 for c in cs]
    negs = [-c if c < 0 else 0 for c in cs]
    return _pack_nonneg(pos, wbytes) - _pack_nonneg(negs, wbytes)


def unpack(x: int, w: int) -> list[int]:
    """Inverse of pack for results whose coefficients satisfy |c| < 2**(w-1).

    Reads balanced base-2**w digits.  w must be a multiple of 8.
    """
    if x == 0:
        return []
    sign = 1
    if x < 0:
        sign, x = -1, -x
    wbytes = w // 8
    nbytes = (x.bit_length() + 7) // 8
    nbytes = ((nbytes + wbytes - 1) // wbytes) * wbytes
    data = x.to_bytes(nbytes, "little")
    half = 1 << (w - 1)
    full = 1 << w
    out: list[int] = []
    carry = 0
    for i in range(0, nbytes, wbytes):
        d = int.from_bytes(data[i : i + wbytes], "little") + carry
        carry = 0
        if d >= half:
            d -= full
            carry = 1
        out.append(sign * d)
    if carry:
        out.append(sign)
    return strip(out)


def _width_for(bound: int) -> int:
    """Digit width (multiple of 8) so |c| <= bound fits a balanced digit."""
    w = bound.bit_length() + 2
    return ((w + 7) // 8) * 8


def l1(cs: list[int]) -> int:
    return sum(abs(c) for c in cs)


def mul(a: list[int], b: list[int]) -> list[int]:
    """Exact product of two integer polynomials."""
    a = strip(list(a))
    b = strip(list(b))
    if not a or not b:
        return []
    if min(len(a), len(b)) <= _SCHOOLBOOK_CUTOFF:
        return strip(_mul_schoolbook(a, b))
    bound = min(len(a), len(b)) * max(abs(c) for c in a) * max(abs(c) for c in b)
    w = _width_for(bound)
    return unpack(pack(a, w) * pack(b, w), w)


def eval_int(cs: list[int], x: int) -> int:
    """Horner evaluation at an integer point."""
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def divexact(f: list[int], g: list[int]) -> list[int]:
    """Quotient f // g when g divides f exactly over the integers.

    Raises ValueError when any division step leaves a remainder; callers
    rely on that as an internal consistency check.
    """
    f = strip(list(f))
    g = strip(list(g))
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return []
    if len(f) < len(g):
        raise ValueError("inexact polynomial division")
    lg = g[-1]
    q = [0] * (len(f) - len(g) + 1)
    r = list(f)
    for k in range(len(q) - 1, -1, -1):
        top = r[k + len(g) - 1]
        if top % lg:
            raise ValueError("inexact polynomial division")
        c = top // lg
        q[k] = c
        if c:
            for i, gc in enumerate(g):
                r[k + i] -= c * gc
    if any(r):
        raise ValueError("inexact polynomial division")
    return strip(q)


def _prem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder: repeatedly scale by lead(g) and cancel the top term."""
    dg = len(g) - 1
    lg = g[-1]
    r = list(f)
    while len(r) - 1 >= dg and r:
        c = r[-1]
        k = len(r) - 1 - dg
        r = [lg * a for a in r]
        for i, gc in enumerate(g):
            r[k + i] -= c * gc
        r.pop()
        strip(r)
    return r


def gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    _, f = primitive(a)
    _, g = primitive(b)
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _prem(f, g)
        f, g = g, primitive(r)[1]
    return f


def lcm(a: list[int], b: list[int]) -> list[int]:
    """Primitive lcm with positive leading coefficient."""
    if not a or not b:
        return []
    g = gcd(a, b)
    _, pa = primitive(a)
    _, pb = primitive(b)
    return mul(pa, divexact(pb, g))
