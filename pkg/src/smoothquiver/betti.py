"""Poincare polynomials of smooth models of quiver moduli.

Three independent engines compute the Poincare polynomial of the smooth
model M^Theta_{d,n}(Q):

* ``smooth_model_poincare_recursion`` -- recursion over sub-dimension vectors
  of the same slope, carried out in reduced rational-function arithmetic;
* ``smooth_model_poincare_summation`` -- a single signed sum over
  semi-admissible decompositions;
* ``series_engine`` -- inversion of a generating function in the q-twisted
  series ring, one slope class at a time.

The admissible and semi-admissible sums are evaluated by dynamic programming
over partial sums (a decomposition is a path 0 -> d through sub-vectors), so
the cost is polynomial in the number of sub-vectors.  The explicit
decomposition streams are exported as well and serve as brute-force oracles.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterator, Mapping, Optional, Sequence, Union

from . import _graded as G
from .errors import ConsistencyError, PreconditionError, QuiverInputError
from .qpoly import PolyQ, RationalFunctionQ
from .quiver import (
    DimVec,
    Quiver,
    Stability,
    VectorLike,
    dot,
    frame,
    is_coprime,
    sub_vectors,
    vadd,
    vsub,
)

__all__ = [
    "PdCache",
    "TwistedSeries",
    "admissible_decompositions",
    "semi_admissible_decompositions",
    "p_d",
    "stable_poincare",
    "smooth_model_poincare_recursion",
    "smooth_model_poincare_summation",
    "series_engine",
    "smooth_model_poincare_series",
    "sst_nonempty",
    "smooth_model_nonempty",
]


def _le(e: Sequence[int], d: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(e, d))


def _nonzero_sub_vectors(d: DimVec) -> list[DimVec]:
    return [e for e in sub_vectors(d) if any(e)]


class _SlopeOrder:
    """sign(mu(e) - mu(d)) for sub-vectors e of a fixed d, without division."""

    def __init__(self, theta: Stability, d: DimVec):
        self.theta = theta
        self.td = theta(d)
        self.nd = sum(d)

    def cmp(self, e: Sequence[int]) -> int:
        v = self.theta(e) * self.nd - self.td * sum(e)
        return (v > 0) - (v < 0)


# ---------------------------------------------------------------------------
# decomposition streams


def admissible_decompositions(quiver: Quiver, theta: Stability, d: VectorLike) -> Iterator[tuple[DimVec, ...]]:
    """Ordered decompositions d = d^1 + ... + d^s whose proper partial sums
    all have slope strictly bigger than mu(d).

    Depth-first; parts are tried in lexicographic order.
    """
    d = quiver.dimvec(d)
    if not any(d):
        raise QuiverInputError("d must be non-zero")
    order = _SlopeOrder(theta, d)
    parts = _nonzero_sub_vectors(d)

    def rec(rest: DimVec, acc: tuple[DimVec, ...]):
        for e in parts:
            if not _le(e, rest):
                continue
            r = vsub(rest, e)
            if not any(r):
                yield acc + (e,)
                continue
            if order.cmp(vsub(d, r)) > 0:
                yield from rec(r, acc + (e,))

    yield from rec(d, ())


def semi_admissible_decompositions(
    quiver: Quiver, theta: Stability, d: VectorLike
) -> Iterator[tuple[tuple[DimVec, ...], int]]:
    """Decompositions with every partial sum of slope >= mu(d), paired with
    k0, the (1-based) first index where the partial sum has slope mu(d)."""
    d = quiver.dimvec(d)
    if not any(d):
        raise QuiverInputError("d must be non-zero")
    order = _SlopeOrder(theta, d)
    parts = _nonzero_sub_vectors(d)

    def rec(rest: DimVec, acc: tuple[DimVec, ...], k0: Optional[int]):
        for e in parts:
            if not _le(e, rest):
                continue
            r = vsub(rest, e)
            c = order.cmp(vsub(d, r))
            if c < 0:
                continue
            k = k0 if k0 is not None else (len(acc) + 1 if c == 0 else None)
            if not any(r):
                yield acc + (e,), k
            else:
                yield from rec(r, acc + (e,), k)

    yield from rec(d, (), None)


# ---------------------------------------------------------------------------
# P_d


class PdCache:
    """Memo table for P_e, keyed by (quiver, stability, e, slope of e).

    Inserts are idempotent, so sharing one cache between threads is safe.
    """

    def __init__(self):
        self._table: dict = {}
        self._lock = threading.Lock()

    @staticmethod
    def key(quiver: Quiver, theta: Stability, e: DimVec):
        s = theta.slope(e) if any(e) else None
        return (quiver, theta, e, s)

    def get(self, key):
        return self._table.get(key)

    def put(self, key, value):
        with self._lock:
            return self._table.setdefault(key, value)

    def __len__(self):
        return len(self._table)


_default_cache = PdCache()


def _gauge_exponent(quiver: Quiver, e: DimVec) -> int:
    # |R_e| / |G_e| = q^this / den(e)
    return quiver.arrow_form(e, e) - sum(x * (x - 1) // 2 for x in e)


def _p_d_graded(quiver: Quiver, theta: Stability, d: DimVec, cache: PdCache) -> G.Laurent:
    """Numerator of P_d over den(d)."""
    if not any(d):
        return G.ONE
    key = PdCache.key(quiver, theta, d)
    hit = cache.get(key)
    if hit is not None:
        return hit
    order = _SlopeOrder(theta, d)
    # states: 0, d, and proper partial sums with slope > mu(d)
    states = [s for s in sub_vectors(d) if not any(s) or s == d or order.cmp(s) > 0]
    acc: dict = {}
    G.add_into(acc, states[0], G.ONE)
    for idx, s in enumerate(states):
        fs = G.freeze(acc.pop(s, None))
        if s == d:
            result = G.neg(fs)
            break
        if not fs[1]:
            continue
        for t in states[idx + 1 :]:
            if not _le(s, t):
                continue
            e = vsub(t, s)
            k = _gauge_exponent(quiver, e) - quiver.euler_form(e, s)
            term = G.mul(G.mul(fs, G.binom_factor(s, e)), G.monomial(k, -1))
            G.add_into(acc, t, term)
    else:  # pragma: no cover - d is the last state in the product order
        raise ConsistencyError("state d never visited")
    return cache.put(key, result)


def p_d(quiver: Quiver, theta: Stability, d: VectorLike, cache: Optional[PdCache] = None) -> RationalFunctionQ:
    """The rational function P_d(q): signed sum over mu-admissible decompositions
    of ``q^{-sum_{k<l} <d^l, d^k>} prod_k |R_{d^k}| / |G_{d^k}|``.  P_0 = 1."""
    d = quiver.dimvec(d)
    cache = _default_cache if cache is None else cache
    return G.to_rational(_p_d_graded(quiver, theta, d, cache), d)


def stable_poincare(quiver: Quiver, theta: Stability, d: VectorLike, cache: Optional[PdCache] = None) -> PolyQ:
    """Poincare polynomial (q - 1) P_d of the stable moduli, d coprime."""
    d = quiver.dimvec(d)
    if not any(d) or not is_coprime(quiver, theta, d):
        raise PreconditionError(f"{d} is not coprime for {theta.weights}")
    cache = _default_cache if cache is None else cache
    L = G.mul(_p_d_graded(quiver, theta, d, cache), G.from_poly(PolyQ((-1, 1))))
    p = G.to_polynomial(L, d, "(q-1) P_d")
    if not p.has_nonnegative_coefficients():
        raise ConsistencyError(f"negative Betti number in {p}")
    return p


def _check_output(p: PolyQ, what: str) -> PolyQ:
    if not p.has_nonnegative_coefficients():
        raise ConsistencyError(f"{what} has a negative coefficient: {p}")
    return p


def _check_framing(quiver: Quiver, n: VectorLike) -> DimVec:
    n = quiver.dimvec(n)
    if not any(n):
        raise QuiverInputError("framing vector n must be non-zero")
    return n


# ---------------------------------------------------------------------------
# engine 1: recursion


def smooth_model_poincare_recursion(
    quiver: Quiver, theta: Stability, d: VectorLike, n: VectorLike, cache: Optional[PdCache] = None
) -> PolyQ:
    """P(d) = (q^{n.d} - 1) P_d - sum_{0<e<d, mu(e)=mu(d)} q^{-<d-e,e>} P_{d-e} P(e).

    Evaluated with reduced rational functions throughout.  d = 0 gives 1.
    """
    d = quiver.dimvec(d)
    n = _check_framing(quiver, n)
    if not any(d):
        return PolyQ(1)
    cache = _default_cache if cache is None else cache
    order = _SlopeOrder(theta, d)
    chain = sorted((e for e in _nonzero_sub_vectors(d) if order.cmp(e) == 0), key=sum)

    def pd(e):
        return p_d(quiver, theta, e, cache)

    done: dict[DimVec, RationalFunctionQ] = {}
    for e in chain:
        val = (RationalFunctionQ.monomial(dot(n, e)) - 1) * pd(e)
        for f, hf in done.items():
            if f != e and _le(f, e) and hf:
                g = vsub(e, f)
                val = val - RationalFunctionQ.monomial(-quiver.euler_form(g, f)) * pd(g) * hf
        if not val.is_polynomial():
            raise ConsistencyError(f"recursion value at {e} is not a polynomial: {val}")
        done[e] = val
    return _check_output(done[d].to_poly(), f"recursion output at {d}")


# ---------------------------------------------------------------------------
# engine 2: semi-admissible summation


def smooth_model_poincare_summation(
    quiver: Quiver, theta: Stability, d: VectorLike, n: VectorLike
) -> PolyQ:
    """Sum over semi-admissible d^* of
    (-1)^{s-1} (q^{n.(d^1+...+d^{k0})} - 1) q^{-sum_{k<l}<d^l,d^k>} prod_k |R|/|G|.

    There is no leading 1/(q - 1): the gauge factor of the framing vertex and
    the (q - 1) relating point counts of stable moduli to P_d cancel.  The sum
    is still checked to be a polynomial with non-negative coefficients.
    """
    d = quiver.dimvec(d)
    n = _check_framing(quiver, n)
    if not any(d):
        raise QuiverInputError("summation formula needs d != 0")
    order = _SlopeOrder(theta, d)
    states = [s for s in sub_vectors(d) if not any(s) or order.cmp(s) >= 0]
    # DP over (partial sum, has the slope of d been hit yet)
    acc: dict = {}
    G.add_into(acc, (states[0], False), G.ONE)
    final = G.ZERO
    for idx, s in enumerate(states):
        for reached in (False, True):
            fs = G.freeze(acc.pop((s, reached), None))
            if not fs[1]:
                continue
            if s == d:
                final = G.add(final, fs)
                continue
            for t in states[idx + 1 :]:
                if not _le(s, t):
                    continue
                e = vsub(t, s)
                k = _gauge_exponent(quiver, e) - quiver.euler_form(e, s)
                term = G.mul(G.mul(fs, G.binom_factor(s, e)), G.monomial(k, -1))
                hit = reached
                if not reached and order.cmp(t) == 0:
                    term = G.mul(term, G.add(G.monomial(dot(n, t)), G.monomial(0, -1)))
                    hit = True
                G.add_into(acc, (t, hit), term)
    p = G.to_polynomial(G.neg(final), d, "semi-admissible sum")
    return _check_output(p, f"summation output at {d}")


# ---------------------------------------------------------------------------
# engine 3: generating functions


class TwistedSeries:
    """Truncated series sum_e c_e t^e with t^a t^b = q^{-<a,b>} t^{a+b}.

    Exponents range over {0 <= e <= cap, e = 0 or mu(e) = slope_class}; with
    slope_class ``"all"`` every e <= cap is allowed (the Theta = 0 case).
    Coefficients are rational functions whose denominators divide
    q^k prod_i prod_{j<=e_i} (q^j - 1); they are stored as numerators over
    that denominator.
    """

    __slots__ = ("quiver", "cap", "theta", "slope_class", "_c")

    def __init__(self, quiver: Quiver, cap: VectorLike, theta: Optional[Stability] = None,
                 slope_class: Union[Fraction, str] = "all", _coeffs: Optional[dict] = None):
        self.quiver = quiver
        self.cap = quiver.dimvec(cap)
        if slope_class != "all" and theta is None:
            raise QuiverInputError("a slope class needs a stability")
        self.theta = theta
        self.slope_class = slope_class if slope_class == "all" else Fraction(slope_class)
        self._c: dict[DimVec, G.Laurent] = {}
        for e, L in (_coeffs or {}).items():
            if L[1]:
                self._check_index(e)
                self._c[e] = L

    def index_set(self) -> list[DimVec]:
        return [e for e in sub_vectors(self.cap) if self.admits(e)]

    def admits(self, e: DimVec) -> bool:
        if not _le(e, self.cap):
            return False
        if self.slope_class == "all" or not any(e):
            return True
        return self.theta.slope(e) == self.slope_class

    def _check_index(self, e):
        if not self.admits(e):
            raise QuiverInputError(f"exponent {e} outside the series' index set")

    @classmethod
    def from_coefficients(cls, quiver: Quiver, cap: VectorLike, coeffs: Mapping,
                          theta: Optional[Stability] = None, slope_class="all") -> "TwistedSeries":
        cap = quiver.dimvec(cap)
        raw = {}
        for e, f in coeffs.items():
            e = quiver.dimvec(e)
            if _le(e, cap):
                raw[e] = G.from_rational(RationalFunctionQ(f) if not isinstance(f, RationalFunctionQ) else f, e)
        return cls(quiver, cap, theta, slope_class, raw)

    def _like(self, coeffs) -> "TwistedSeries":
        return TwistedSeries(self.quiver, self.cap, self.theta, self.slope_class, coeffs)

    def coefficient(self, e: VectorLike) -> RationalFunctionQ:
        e = self.quiver.dimvec(e)
        return G.to_rational(self._c.get(e, G.ZERO), e)

    def polynomial_coefficient(self, e: VectorLike) -> PolyQ:
        e = self.quiver.dimvec(e)
        return G.to_polynomial(self._c.get(e, G.ZERO), e, "series coefficient")

    def support(self) -> list[DimVec]:
        return sorted(self._c)

    def _twist(self, a: DimVec, b: DimVec) -> G.Laurent:
        return G.mul(G.monomial(-self.quiver.euler_form(a, b)), G.binom_factor(a, b))

    def _compatible(self, other: "TwistedSeries"):
        if (self.quiver, self.cap, self.slope_class) != (other.quiver, other.cap, other.slope_class):
            raise QuiverInputError("series live in different rings")

    def __add__(self, other: "TwistedSeries") -> "TwistedSeries":
        self._compatible(other)
        out = dict(self._c)
        for e, L in other._c.items():
            out[e] = G.add(out.get(e, G.ZERO), L)
        return self._like(out)

    def __mul__(self, other: "TwistedSeries") -> "TwistedSeries":
        self._compatible(other)
        acc: dict = {}
        for a, La in self._c.items():
            for b, Lb in other._c.items():
                s = vadd(a, b)
                if _le(s, self.cap):
                    G.add_into(acc, s, G.mul(G.mul(La, Lb), self._twist(a, b)))
        return self._like({e: G.freeze(buf) for e, buf in acc.items()})

    def is_invertible(self) -> bool:
        zero = tuple(0 for _ in self.cap)
        return bool(self._c.get(zero, G.ZERO)[1])

    def inverse(self) -> "TwistedSeries":
        zero = tuple(0 for _ in self.cap)
        c0 = self._c.get(zero, G.ZERO)
        if not c0[1]:
            raise ZeroDivisionError("constant term is zero")
        if len(c0[1]) != 1 or c0[1][0] not in (1, -1):
            raise ValueError("inverse implemented for monomial constant terms only")
        inv0 = (-c0[0], c0[1])
        out: dict[DimVec, G.Laurent] = {zero: inv0}
        for e in sorted(self.index_set(), key=sum):
            if not any(e):
                continue
            acc: dict = {}
            for f, Lf in self._c.items():
                if any(f) and _le(f, e):
                    g = vsub(e, f)
                    Lg = out.get(g)
                    if Lg and Lg[1]:
                        G.add_into(acc, 0, G.mul(G.mul(Lf, Lg), self._twist(f, g)))
            s = G.freeze(acc.get(0))
            if s[1]:
                out[e] = G.neg(G.mul(inv0, s))
        return self._like(out)


def _slope_class_of(theta: Stability, d: DimVec):
    if theta.is_zero():
        return "all"
    return theta.slope(d)


def series_engine(
    quiver: Quiver,
    theta: Stability,
    slope_class: Union[Fraction, str],
    cap: VectorLike,
    n: VectorLike,
    cache: Optional[PdCache] = None,
) -> dict[DimVec, PolyQ]:
    """Coefficients of (sum P_d t^d)^{-1} (sum q^{n.d} P_d t^d) over one slope class.

    Returns ``{d: Poincare polynomial of the smooth model}`` for every d <= cap
    in the class (d = 0 included, value 1).
    """
    n = _check_framing(quiver, n)
    cap = quiver.dimvec(cap)
    if slope_class == "all" and not theta.is_zero():
        raise QuiverInputError("slope class 'all' requires the zero stability")
    cache = _default_cache if cache is None else cache
    A = TwistedSeries(quiver, cap, theta, slope_class)
    idx = A.index_set()
    pa = {e: _p_d_graded(quiver, theta, e, cache) for e in idx}
    A = TwistedSeries(quiver, cap, theta, slope_class, pa)
    B = TwistedSeries(quiver, cap, theta, slope_class,
                      {e: G.shift(L, dot(n, e)) for e, L in pa.items()})
    H = A.inverse() * B
    out = {}
    for e in idx:
        p = H.polynomial_coefficient(e)
        out[e] = _check_output(p, f"series coefficient at {e}")
    return out


def smooth_model_poincare_series(
    quiver: Quiver, theta: Stability, d: VectorLike, n: VectorLike, cache: Optional[PdCache] = None
) -> PolyQ:
    """Series engine with cap d, reading off the coefficient at d."""
    d = quiver.dimvec(d)
    if not any(d):
        return PolyQ(1)
    return series_engine(quiver, theta, _slope_class_of(theta, d), d, n, cache)[d]


# ---------------------------------------------------------------------------
# non-emptiness


def sst_nonempty(quiver: Quiver, theta: Stability, d: VectorLike, memo: Optional[dict] = None) -> bool:
    """Recursive criterion for the semistable moduli to be non-empty.

    Non-empty iff there is no decomposition into s >= 2 parts with non-empty
    moduli each, strictly decreasing slopes, and <d^k, d^l> = 0 for k < l.
    """
    d = quiver.dimvec(d)
    if not any(d):
        raise QuiverInputError("d must be non-zero")
    memo = {} if memo is None else memo
    return _sst(quiver, theta, d, memo)


def _sst(quiver: Quiver, theta: Stability, d: DimVec, memo: dict) -> bool:
    key = (quiver, theta, d)
    if key in memo:
        return memo[key]
    candidates = [e for e in _nonzero_sub_vectors(d)]
    slopes = {e: theta.slope(e) for e in candidates}

    def witness(rest: DimVec, prev: tuple[DimVec, ...]) -> bool:
        last = slopes[prev[-1]]
        for e in candidates:
            if slopes[e] >= last or not _le(e, rest):
                continue
            if any(quiver.euler_form(p, e) != 0 for p in prev):
                continue
            if not _sst(quiver, theta, e, memo):
                continue
            r = vsub(rest, e)
            if not any(r):
                return True
            if witness(r, prev + (e,)):
                return True
        return False

    found = False
    for e in candidates:
        if e == d or not _sst(quiver, theta, e, memo):
            continue
        if witness(vsub(d, e), (e,)):
            found = True
            break
    memo[key] = not found
    return not found


def smooth_model_nonempty(quiver: Quiver, theta: Stability, d: VectorLike, n: VectorLike) -> bool:
    """Non-emptiness of M^Theta_{d,n}: the recursive criterion on the framed datum."""
    d = quiver.dimvec(d)
    n = _check_framing(quiver, n)
    if not any(d):
        return True
    fr = frame(quiver, d, theta, n)
    return sst_nonempty(fr.extended, fr.explicit_stability(), fr.d_hat)
