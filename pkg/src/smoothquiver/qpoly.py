"""Exact arithmetic in one variable q.

``PolyQ`` is an integer polynomial, ``RationalFunctionQ`` a reduced ratio of
two of them.  Everything is exact: coefficients are Python integers and
rationals only show up transiently inside gcd computations and series
expansions.  Negative powers of q are carried by ``RationalFunctionQ`` (a
monomial denominator), there is no separate Laurent type in the public API.

The module also hosts the q-analogues used throughout the package:
``gl_order``, ``q_binomial``, ``r_points``, ``gauge_ratio`` and the bounded
partition machinery behind ``partition_series``.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "PolyQ",
    "RationalFunctionQ",
    "DivisibilityError",
    "Q",
    "exact_divide",
    "poly_gcd",
    "gl_order",
    "q_binomial",
    "q_multinomial",
    "r_points",
    "gauge_ratio",
    "partitions",
    "multipartitions_bounded",
    "partition_series",
    "expand_at_infinity",
]


class DivisibilityError(ArithmeticError):
    """Raised when a division that should be exact leaves a remainder."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class PolyQ:
    """Polynomial in q with arbitrary-precision integer coefficients.

    Stored densely: ``coeffs[k]`` is the coefficient of ``q**k``.  The zero
    polynomial has an empty coefficient tuple and degree ``-math.inf``.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Iterable[int], Mapping[int, int], int] = ()):
        if isinstance(coeffs, int):
            c = (coeffs,)
        elif isinstance(coeffs, Mapping):
            if coeffs and min(coeffs) < 0:
                raise ValueError("PolyQ exponents must be non-negative")
            top = max(coeffs, default=-1)
            dense = [0] * (top + 1)
            for k, v in coeffs.items():
                dense[k] += int(v)
            c = dense
        else:
            c = coeffs
        self._c = _trim(int(x) for x in c)
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "PolyQ":
        if k < 0:
            raise ValueError("negative exponent; use RationalFunctionQ.monomial")
        return cls._raw((0,) * k + (coeff,)) if coeff else cls._raw(())

    @classmethod
    def _raw(cls, c: tuple[int, ...]) -> "PolyQ":
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    # basic queries
    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def coefficients(self) -> dict[int, int]:
        """Sparse view: exponent -> non-zero coefficient."""
        return {k: v for k, v in enumerate(self._c) if v}

    @property
    def degree(self) -> Union[int, float]:
        return len(self._c) - 1 if self._c else -math.inf

    @property
    def valuation(self) -> Union[int, float]:
        for k, v in enumerate(self._c):
            if v:
                return k
        return math.inf

    @property
    def leading_coefficient(self) -> int:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __getitem__(self, k: int) -> int:
        return self._c[k] if 0 <= k < len(self._c) else 0

    def content(self) -> int:
        g = 0
        for v in self._c:
            g = math.gcd(g, v)
        return g

    def __call__(self, x):
        acc = 0
        for v in reversed(self._c):
            acc = acc * x + v
        return acc

    def has_nonnegative_coefficients(self) -> bool:
        return all(v >= 0 for v in self._c)

    # arithmetic
    @staticmethod
    def _coerce(other) -> "PolyQ":
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, int):
            return PolyQ._raw((other,) if other else ())
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for k, v in enumerate(b):
            c[k] += v
        return PolyQ._raw(_trim(c))

    __radd__ = __add__

    def __neg__(self):
        return PolyQ._raw(tuple(-v for v in self._c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PolyQ._raw(_mul(self._c, o._c))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = PolyQ._raw((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "PolyQ":
        """Multiply by q**k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        return PolyQ._raw((0,) * k + self._c) if self._c else self

    def __truediv__(self, other):
        return RationalFunctionQ(self, other)

    def __rtruediv__(self, other):
        return RationalFunctionQ(other, self)

    def __eq__(self, other):
        if isinstance(other, RationalFunctionQ):
            return other == self
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("PolyQ", self._c))
        return self._hash

    def __repr__(self):
        return f"PolyQ({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    c = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                c[i + j] += x * y
    return _trim(c)


def format_poly(p: PolyQ, var: str = "q") -> str:
    """Descending-exponent rendering, e.g. ``q^8 + 2*q^7 - q + 1``."""
    if p.is_zero():
        return "0"
    out = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        v = p.coeffs[k]
        if not v:
            continue
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        out.append((sign, body))
    first_sign, first_body = out[0]
    s = ("-" if first_sign == "-" else "") + first_body
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


# ---------------------------------------------------------------------------
# division and gcd


def exact_divide(a: PolyQ, b: PolyQ) -> PolyQ:
    """Quotient of ``a`` by ``b``; raises ``DivisibilityError`` unless exact."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    if len(b.coeffs) == 1 and b.coeffs[0] in (1, -1):
        return a if b.coeffs[0] == 1 else -a
    r = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    lc = bc[-1]
    if len(r) - 1 < db:
        raise DivisibilityError(f"{b} does not divide {a}")
    quo = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        v = r[k]
        if v == 0:
            continue
        t, rem = divmod(v, lc)
        if rem:
            raise DivisibilityError(f"{b} does not divide {a}")
        quo[k - db] = t
        off = k - db
        for j in range(db + 1):
            r[off + j] -= t * bc[j]
    if any(r[:db]):
        raise DivisibilityError(f"{b} does not divide {a}")
    return PolyQ._raw(_trim(quo))


def _primitive(c: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for v in c:
        g = math.gcd(g, v)
    if g == 0:
        return ()
    if c[-1] < 0:
        g = -g
    return tuple(v // g for v in c)


def _prem(a: list[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder of a by b (both dense, non-zero, deg a >= deg b)."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    while len(r) - 1 >= db and r:
        t = r[-1]
        off = len(r) - 1 - db
        r = [lc * v for v in r]
        for j in range(db + 1):
            r[off + j] -= t * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Primitive gcd over Q[q], normalised to a positive leading coefficient."""
    if a.is_zero():
        return PolyQ._raw(_primitive(b.coeffs))
    if b.is_zero():
        return PolyQ._raw(_primitive(a.coeffs))
    va, vb = a.valuation, b.valuation
    v = min(va, vb)
    x = list(_primitive(a.coeffs[va:]))
    y = list(_primitive(b.coeffs[vb:]))
    if len(x) < len(y):
        x, y = y, x
    while len(y) > 1:
        r = _prem(x, y)
        x, y = y, list(_primitive(r)) if r else []
        if not y:
            break
    if not y:
        g = tuple(x)
    else:  # a non-zero constant remainder: coprime
        g = (1,)
    return PolyQ._raw((0,) * v + _primitive(g))


# ---------------------------------------------------------------------------
# rational functions


class RationalFunctionQ:
    """Reduced element of Q(q).

    The pair (numerator, denominator) is canonical: coprime over Q, integer
    coefficients with no common integer factor, denominator with positive
    leading coefficient.  Equality is therefore structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, RationalFunctionQ) or isinstance(den, RationalFunctionQ):
            r = _as_rf(num) / _as_rf(den)
            self.num, self.den = r.num, r.den
            return
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def _unchecked(cls, num: PolyQ, den: PolyQ) -> "RationalFunctionQ":
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "RationalFunctionQ":
        """``coeff * q**k`` for any integer k."""
        if k >= 0:
            return cls._unchecked(PolyQ.monomial(k, coeff), PolyQ._raw((1,)))
        return cls(PolyQ._raw((coeff,)), PolyQ.monomial(-k))

    def is_polynomial(self) -> bool:
        return self.den.coeffs == (1,)

    def to_poly(self) -> PolyQ:
        if not self.is_polynomial():
            raise DivisibilityError(f"{self} is not a polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return RationalFunctionQ(self.num + o.num, self.den)
        return RationalFunctionQ(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionQ._unchecked(-self.num, self.den)

    def __sub__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        # cross-cancel first to keep operands small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n = exact_divide(self.num, g1) * exact_divide(o.num, g2)
        d = exact_divide(self.den, g2) * exact_divide(o.den, g1)
        return RationalFunctionQ(n, d)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunctionQ":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunctionQ(self.den, self.num)

    def __truediv__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunctionQ._unchecked(self.num**e, self.den**e)

    def __call__(self, x):
        """Evaluate at a number; integer and Fraction inputs stay exact."""
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return Fraction(self.num(x)) / d if isinstance(d, (int, Fraction)) else self.num(x) / d

    def __eq__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_polynomial():
            return hash(self.num)
        return hash(("RF", self.num, self.den))

    def __repr__(self):
        return f"RationalFunctionQ({self})"

    def __str__(self):
        if self.is_polynomial():
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"


def _as_poly(x) -> PolyQ:
    if isinstance(x, PolyQ):
        return x
    if isinstance(x, int):
        return PolyQ(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


def _as_rf(x):
    if isinstance(x, RationalFunctionQ):
        return x
    if isinstance(x, PolyQ):
        return RationalFunctionQ._unchecked(x, PolyQ._raw((1,)))
    if isinstance(x, int):
        return RationalFunctionQ._unchecked(PolyQ(x), PolyQ._raw((1,)))
    if isinstance(x, Fraction):
        return RationalFunctionQ(PolyQ(x.numerator), PolyQ(x.denominator))
    return NotImplemented


def _reduce(num: PolyQ, den: PolyQ) -> tuple[PolyQ, PolyQ]:
    one = PolyQ._raw((1,))
    if num.is_zero():
        return num, one
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = exact_divide(num, g)
            den = exact_divide(den, g)
    c = math.gcd(num.content(), den.content())
    if den.leading_coefficient < 0:
        c = -c
    if c != 1:
        num = PolyQ._raw(tuple(v // c for v in num.coeffs))
        den = PolyQ._raw(tuple(v // c for v in den.coeffs))
    return num, den


#: the variable itself, handy for building expressions
Q = PolyQ((0, 1))


def expand_at_infinity(f: RationalFunctionQ, terms: int) -> dict[int, Fraction]:
    """Expand ``f`` as a Laurent series in ``q**-1``.

    Returns the first ``terms`` coefficients as ``{exponent of q: coeff}``,
    starting at ``deg(num) - deg(den)`` and descending.
    """
    if f.is_zero():
        return {}
    top = f.num.degree - f.den.degree
    nrev = list(reversed(f.num.coeffs))
    drev = list(reversed(f.den.coeffs))
    d0 = Fraction(drev[0])
    out: list[Fraction] = []
    for k in range(terms):
        acc = Fraction(nrev[k]) if k < len(nrev) else Fraction(0)
        for j in range(1, min(k, len(drev) - 1) + 1):
            acc -= drev[j] * out[k - j]
        out.append(acc / d0)
    return {top - k: c for k, c in enumerate(out)}


# ---------------------------------------------------------------------------
# q-analogues


@functools.lru_cache(maxsize=None)
def gl_order(m: int) -> PolyQ:
    """``|GL_m(F_q)| = prod_{k<m} (q^m - q^k)``."""
    if m < 0:
        raise ValueError("negative size")
    p = PolyQ._raw((1,))
    for k in range(m):
        p = p * (PolyQ.monomial(m) - PolyQ.monomial(k))
    return p


@functools.lru_cache(maxsize=None)
def _q_factorial_part(m: int) -> PolyQ:
    """prod_{j=1..m} (q^j - 1)."""
    p = PolyQ._raw((1,))
    for j in range(1, m + 1):
        p = p * (PolyQ.monomial(j) - 1)
    return p


@functools.lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> PolyQ:
    """Gaussian binomial coefficient [n choose k]_q."""
    if k < 0 or k > n or n < 0:
        return PolyQ._raw(())
    k = min(k, n - k)
    num = PolyQ._raw((1,))
    den = PolyQ._raw((1,))
    for j in range(k):
        num = num * (PolyQ.monomial(n - j) - 1)
        den = den * (PolyQ.monomial(j + 1) - 1)
    return exact_divide(num, den)


def q_multinomial(parts: Sequence[int]) -> PolyQ:
    """[a_1 + ... + a_s ; a_1, ..., a_s]_q as a product of binomials."""
    p = PolyQ._raw((1,))
    total = 0
    for a in parts:
        total += a
        p = p * q_binomial(total, a)
    return p


def r_points(quiver, d) -> PolyQ:
    """Number of F_q-points of the representation space: ``q^{sum_{i->j} d_i d_j}``."""
    d = quiver.dimvec(d)
    return PolyQ.monomial(quiver.arrow_form(d, d))


def gauge_ratio(quiver, d) -> RationalFunctionQ:
    """``|R_d(F_q)| / |G_d(F_q)|`` in reduced form."""
    d = quiver.dimvec(d)
    den = PolyQ._raw((1,))
    for x in d:
        den = den * gl_order(x)
    return RationalFunctionQ(r_points(quiver, d), den)


# ---------------------------------------------------------------------------
# partitions


def partitions(length: int, max_part: int | None = None, max_weight: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of exactly ``length`` non-negative integers.

    Zeros pad the tail.  At least one of ``max_part`` / ``max_weight`` must be
    given unless ``length`` is 0.  Output is in lexicographically increasing
    order.
    """
    if length < 0:
        raise ValueError("negative length")
    if length == 0:
        yield ()
        return
    if max_part is None and max_weight is None:
        raise ValueError("unbounded partition enumeration")
    cap = max_part if max_part is not None else max_weight
    if max_weight is not None:
        cap = min(cap, max_weight)

    def rec(k: int, hi: int, budget) -> Iterator[tuple[int, ...]]:
        for first in range(0, hi + 1):
            if budget is not None and first > budget:
                break
            nb = None if budget is None else budget - first
            if k == 1:
                yield (first,)
            else:
                yield from ((first,) + rest for rest in rec(k - 1, first if nb is None else min(first, nb), nb))

    yield from rec(length, cap, max_weight)


def multipartitions_bounded(d: Sequence[int], max_weight: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All tuples of partitions with ``d[i]`` parts at vertex i and weight <= max_weight."""

    def rec(i: int, budget: int):
        if i == len(d):
            yield ()
            return
        for lam in partitions(d[i], max_weight=budget):
            for rest in rec(i + 1, budget - sum(lam)):
                yield (lam,) + rest

    yield from rec(0, max_weight)


def partition_series(d: Sequence[int], weight_cutoff: int) -> PolyQ:
    """Truncated ``sum_{lambda in Lambda_d} u^{|lambda|}`` with ``u = q**-1``.

    The returned polynomial is in the inverse variable: coefficient k counts
    multipartitions of weight k.  Counted by explicit enumeration.
    """
    counts = [0] * (weight_cutoff + 1)
    for lam in multipartitions_bounded(tuple(d), weight_cutoff):
        counts[sum(map(sum, lam))] += 1
    return PolyQ(counts)
