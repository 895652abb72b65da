"""Denominator-free bookkeeping for the Poincare engines.

A quantity attached to the exponent e (a coefficient of t^e) is stored as a
Laurent polynomial numerator L over the fixed denominator

    den(e) = prod_i prod_{j=1..e_i} (q^j - 1).

Gauge ratios, the functions P_e and all coefficients of the twisted series
fit this shape.  Since den(e + f) / (den(e) den(f)) is a product of Gaussian
binomials, twisted products stay in polynomial arithmetic; the only division
happens when a final answer is read off.

Laurent numerators are pairs ``(low, coeffs)`` meaning sum coeffs[k] q^(low+k).
"""

from __future__ import annotations

import functools

from .errors import ConsistencyError
from .qpoly import (
    DivisibilityError,
    PolyQ,
    RationalFunctionQ,
    _q_factorial_part,
    _trim,
    exact_divide,
    q_binomial,
)

Laurent = tuple[int, tuple[int, ...]]

ZERO: Laurent = (0, ())
ONE: Laurent = (0, (1,))


def norm(low: int, c) -> Laurent:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    k = 0
    while k < len(c) and c[k] == 0:
        k += 1
    if k == len(c):
        return ZERO
    return (low + k, tuple(c[k:]))


def mul(a: Laurent, b: Laurent) -> Laurent:
    ca, cb = a[1], b[1]
    if not ca or not cb:
        return ZERO
    if len(ca) < len(cb):
        ca, cb = cb, ca
    c = [0] * (len(ca) + len(cb) - 1)
    for j, y in enumerate(cb):
        if y:
            for i, x in enumerate(ca):
                c[i + j] += x * y
    return (a[0] + b[0], tuple(c))


def add_into(acc: dict, key, term: Laurent) -> None:
    """acc[key] += term, keeping a dense list buffer per key."""
    if not term[1]:
        return
    cur = acc.get(key)
    if cur is None:
        acc[key] = [term[0], list(term[1])]
        return
    low, buf = cur
    tl, tc = term
    if tl < low:
        buf[:0] = [0] * (low - tl)
        low = tl
        cur[0] = low
    off = tl - low
    need = off + len(tc)
    if need > len(buf):
        buf.extend([0] * (need - len(buf)))
    for k, v in enumerate(tc):
        buf[off + k] += v


def freeze(buf) -> Laurent:
    if buf is None:
        return ZERO
    return norm(buf[0], buf[1])


def add(a: Laurent, b: Laurent) -> Laurent:
    acc: dict = {}
    add_into(acc, 0, a)
    add_into(acc, 0, b)
    return freeze(acc.get(0))


def neg(a: Laurent) -> Laurent:
    return (a[0], tuple(-v for v in a[1]))


def shift(a: Laurent, k: int) -> Laurent:
    return (a[0] + k, a[1]) if a[1] else ZERO


def monomial(k: int, coeff: int = 1) -> Laurent:
    return (k, (coeff,)) if coeff else ZERO


def from_poly(p: PolyQ) -> Laurent:
    return norm(0, p.coeffs)


@functools.lru_cache(maxsize=None)
def den(e: tuple[int, ...]) -> PolyQ:
    p = PolyQ._raw((1,))
    for x in e:
        if x:
            p = p * _q_factorial_part(x)
    return p


@functools.lru_cache(maxsize=None)
def binom_factor(a: tuple[int, ...], b: tuple[int, ...]) -> Laurent:
    """den(a + b) / (den(a) den(b)) = prod_i [a_i + b_i choose a_i]_q."""
    p = PolyQ._raw((1,))
    for x, y in zip(a, b):
        if x and y:
            p = p * q_binomial(x + y, x)
    return from_poly(p)


def to_rational(L: Laurent, e: tuple[int, ...]) -> RationalFunctionQ:
    """The value L / den(e) as a reduced rational function."""
    low, c = L
    if not c:
        return RationalFunctionQ(0)
    num = PolyQ._raw(_trim(c))
    d = den(e)
    if low >= 0:
        num = num.shift(low)
    else:
        d = d.shift(-low)
    return RationalFunctionQ(num, d)


def to_polynomial(L: Laurent, e: tuple[int, ...], what: str = "value") -> PolyQ:
    """L / den(e), which must be an honest polynomial in q."""
    low, c = L
    if not c:
        return PolyQ._raw(())
    try:
        quo = exact_divide(PolyQ._raw(_trim(c)), den(e))
    except DivisibilityError as exc:
        raise ConsistencyError(f"{what} at {e} is not a polynomial") from exc
    if low < 0:
        if quo.valuation < -low:
            raise ConsistencyError(f"{what} at {e} has a pole at q = 0")
        return PolyQ._raw(quo.coeffs[-low:])
    return quo.shift(low)


def from_rational(f: RationalFunctionQ, e: tuple[int, ...]) -> Laurent:
    """Numerator of f over den(e); f's denominator must divide q^k den(e)."""
    if f.is_zero():
        return ZERO
    d = f.den
    v = d.valuation
    core = PolyQ._raw(d.coeffs[v:])
    try:
        cof = exact_divide(den(e), core)
    except DivisibilityError:
        raise ValueError(f"{f} is not representable over den({e})") from None
    return norm(-v, (f.num * cof).coeffs)


__all__ = [
    "Laurent",
    "ZERO",
    "ONE",
    "mul",
    "add",
    "add_into",
    "freeze",
    "neg",
    "shift",
    "monomial",
    "from_poly",
    "den",
    "binom_factor",
    "to_rational",
    "to_polynomial",
    "from_rational",
]
