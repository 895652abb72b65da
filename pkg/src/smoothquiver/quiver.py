"""Quivers, dimension vectors, stability conditions and the framing construction.

Dimension vectors are plain tuples of non-negative integers listed in the
quiver's vertex order.  ``Quiver.dimvec`` converts mappings keyed by vertex
name into that form.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, NamedTuple, Sequence, Union

from .errors import InfeasibleTypeError, QuiverInputError, UndefinedSlopeError

DimVec = tuple[int, ...]
VectorLike = Union[Sequence[int], Mapping[str, int]]

INFINITY_VERTEX = "inf"


class Arrow(NamedTuple):
    source: int
    target: int
    index: int  # 1-based position among the parallel arrows source -> target
    name: str


class Quiver:
    """Finite quiver with an ordered vertex set.

    ``arrows`` is a sequence of ``(source, target)`` or ``(source, target,
    name)``.  Input order fixes the enumeration of parallel arrows; the total
    order on all arrows (``arrow_order``) sorts by source position, then
    target position, then that enumeration.
    """

    __slots__ = ("vertices", "arrows", "adjacency", "_pos", "_order", "_hash")

    def __init__(self, vertices: Sequence[str], arrows: Sequence[Sequence] = ()):
        vertices = tuple(str(v) for v in vertices)
        if len(set(vertices)) != len(vertices):
            raise QuiverInputError(f"duplicate vertex names in {vertices}")
        pos = {v: k for k, v in enumerate(vertices)}
        n = len(vertices)
        adj = [[0] * n for _ in range(n)]
        built = []
        for k, a in enumerate(arrows):
            if len(a) not in (2, 3):
                raise QuiverInputError(f"bad arrow specification {a!r}")
            s, t = (self._locate(pos, x) for x in a[:2])
            adj[s][t] += 1
            name = str(a[2]) if len(a) == 3 else f"x{k + 1}"
            built.append(Arrow(s, t, adj[s][t], name))
        self.vertices = vertices
        self.arrows = tuple(built)
        self.adjacency = tuple(tuple(r) for r in adj)
        self._pos = pos
        self._order = tuple(sorted(range(len(built)), key=lambda k: built[k][:3]))
        self._hash = hash((vertices, self.arrows))

    @staticmethod
    def _locate(pos, x) -> int:
        if isinstance(x, int) and not isinstance(x, bool):
            if not 0 <= x < len(pos):
                raise QuiverInputError(f"vertex index {x} out of range")
            return x
        try:
            return pos[str(x)]
        except KeyError:
            raise QuiverInputError(f"unknown vertex {x!r}") from None

    # -- small constructors -------------------------------------------------
    @classmethod
    def loops(cls, m: int, name: str = "1") -> "Quiver":
        return cls([name], [(name, name)] * m)

    @classmethod
    def kronecker(cls, m: int) -> "Quiver":
        return cls(["i", "j"], [("i", "j")] * m)

    @classmethod
    def subspace(cls, r: int) -> "Quiver":
        """r-subspace quiver: vertices 0..r, one arrow k -> 0 for k >= 1."""
        names = [str(k) for k in range(r + 1)]
        return cls(names, [(str(k), "0") for k in range(1, r + 1)])

    # -- basic data ----------------------------------------------------------
    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def index(self, v) -> int:
        return self._locate(self._pos, v)

    @property
    def arrow_order(self) -> tuple[int, ...]:
        """Arrow indices listed in increasing total order."""
        return self._order

    def dimvec(self, d: VectorLike) -> DimVec:
        if isinstance(d, Mapping):
            unknown = set(map(str, d)) - set(self.vertices)
            if unknown:
                raise QuiverInputError(f"unknown vertices {sorted(unknown)}")
            d = [d.get(v, 0) for v in self.vertices]
        d = tuple(int(x) for x in d)
        if len(d) != self.num_vertices:
            raise QuiverInputError(
                f"vector of length {len(d)} for a quiver with {self.num_vertices} vertices"
            )
        if any(x < 0 for x in d):
            raise QuiverInputError(f"negative entry in dimension vector {d}")
        return d

    def arrow_form(self, d: DimVec, e: DimVec) -> int:
        """sum over arrows i -> j of d_i e_j."""
        a = self.adjacency
        n = len(d)
        return sum(a[i][j] * d[i] * e[j] for i in range(n) if d[i] for j in range(n) if a[i][j])

    def euler_form(self, d: DimVec, e: DimVec) -> int:
        return sum(x * y for x, y in zip(d, e)) - self.arrow_form(d, e)

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        arr = ", ".join(f"{self.vertices[a.source]}->{self.vertices[a.target]}" for a in self.arrows)
        return f"Quiver({list(self.vertices)}, [{arr}])"


def euler_form(quiver: Quiver, d: VectorLike, e: VectorLike) -> int:
    """``<d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j``."""
    return quiver.euler_form(quiver.dimvec(d), quiver.dimvec(e))


def total(d: Sequence[int]) -> int:
    return sum(d)


def unit(n: int, i: int) -> DimVec:
    return tuple(1 if k == i else 0 for k in range(n))


def sub_vectors(d: Sequence[int]) -> Iterator[DimVec]:
    """All e with 0 <= e <= d componentwise, lexicographically increasing."""
    return itertools.product(*(range(x + 1) for x in d))


def vsub(d: Sequence[int], e: Sequence[int]) -> DimVec:
    return tuple(x - y for x, y in zip(d, e))


def vadd(d: Sequence[int], e: Sequence[int]) -> DimVec:
    return tuple(x + y for x, y in zip(d, e))


def dot(n: Sequence[int], d: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(n, d))


# ---------------------------------------------------------------------------
# stability


@dataclass(frozen=True)
class Stability:
    """Linear form on dimension vectors, stored as one exact weight per vertex."""

    weights: tuple[Fraction, ...]

    def __init__(self, weights: Sequence):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in weights))

    @classmethod
    def zero(cls, n: int) -> "Stability":
        return cls([0] * n)

    def __call__(self, d: Sequence[int]) -> Fraction:
        return sum((w * x for w, x in zip(self.weights, d)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.weights)

    def slope(self, d: Sequence[int]) -> Fraction:
        s = sum(d)
        if s == 0:
            raise UndefinedSlopeError("slope of the zero dimension vector")
        return self(d) / s

    def __len__(self):
        return len(self.weights)


def slope(theta: Stability, d: Sequence[int]) -> Fraction:
    """``Theta(d) / dim d`` as a reduced Fraction."""
    return theta.slope(d)


def normalize_stability(theta: Stability, d: Sequence[int]) -> Stability:
    """Equivalent integral stability vanishing on d.

    Subtracts ``mu(d) * dim`` and rescales by the least positive rational that
    makes every weight an integer.
    """
    mu = theta.slope(d)
    shifted = [w - mu for w in theta.weights]
    if not any(shifted):
        return Stability([0] * len(shifted))
    lcm_den = math.lcm(*(w.denominator for w in shifted))
    ints = [int(w * lcm_den) for w in shifted]
    g = math.gcd(*ints)
    return Stability([x // g for x in ints])


def is_coprime(quiver: Quiver, theta: Stability, d: VectorLike) -> bool:
    """True iff no 0 < e < d has the same slope as d."""
    d = quiver.dimvec(d)
    mu = theta.slope(d)
    for e in sub_vectors(d):
        if 0 < sum(e) < sum(d) and theta.slope(e) == mu:
            return False
    return True


# ---------------------------------------------------------------------------
# framing


@dataclass(frozen=True)
class FramedDatum:
    """The extended datum: quiver plus a vertex ``inf`` with n_i arrows inf -> i.

    Slope comparisons for the extended stability are answered symbolically
    from comparisons in the base datum; see ``hat_le`` / ``hat_le_framed``.
    The numeric stability, if needed, comes from ``explicit_stability``.
    """

    base: Quiver
    d: DimVec
    n: DimVec
    theta: Stability
    extended: Quiver = field(repr=False)
    d_hat: DimVec = field(repr=False)
    _normalized: Stability = field(repr=False)

    @property
    def infinity(self) -> int:
        return self.base.num_vertices

    def hat(self, e: Sequence[int]) -> DimVec:
        """``e`` with a 1 appended at the vertex ``inf``."""
        return tuple(e) + (1,)

    def _cmp_base(self, e: Sequence[int]) -> int:
        # sign(mu(e) - mu(d)); the normalised form has Theta(d) = 0
        v = self._normalized(e)
        return (v > 0) - (v < 0)

    def _check_sub(self, e: Sequence[int], strict: bool) -> DimVec:
        e = tuple(e)
        if len(e) != len(self.d) or any(x < 0 or x > y for x, y in zip(e, self.d)):
            raise QuiverInputError(f"{e} is not a sub-vector of {self.d}")
        if strict and e == self.d:
            raise QuiverInputError("expected e < d")
        return e

    def hat_le(self, e: Sequence[int]) -> bool:
        """``mu_hat(e) <= mu_hat(d_hat)`` for 0 != e <= d (e on base vertices)."""
        e = self._check_sub(e, strict=False)
        if not any(e):
            raise UndefinedSlopeError("slope of the zero dimension vector")
        return self._cmp_base(e) <= 0

    # strict and non-strict agree for these comparisons
    hat_lt = hat_le

    def hat_le_framed(self, e: Sequence[int]) -> bool:
        """``mu_hat(e_hat) <= mu_hat(d_hat)`` for e < d."""
        e = self._check_sub(e, strict=True)
        if not any(e):
            # e_hat is the vertex inf alone, whose slope exceeds that of d_hat
            return False
        return self._cmp_base(e) < 0

    hat_lt_framed = hat_le_framed

    def hat_compare(self, x: Sequence[int]) -> int:
        """sign(mu_hat(x) - mu_hat(d_hat)) for 0 < x < d_hat on the extended quiver."""
        x = tuple(x)
        base, at_inf = x[:-1], x[-1]
        if at_inf == 0:
            return -1 if self.hat_le(base) else 1
        return -1 if self.hat_le_framed(base) else 1

    def explicit_stability(self, epsilon: Fraction = Fraction(1, 2)) -> Stability:
        """Numeric extended stability: normalised weights, inf-weight epsilon.

        Any 0 < epsilon <= 1 reproduces the symbolic comparisons.
        """
        return Stability(self._normalized.weights + (Fraction(epsilon),))

    def is_coprime(self) -> bool:
        """d_hat coprime for the extended stability, checked numerically."""
        return is_coprime(self.extended, self.explicit_stability(), self.d_hat)


def frame(quiver: Quiver, d: VectorLike, theta: Stability, n: VectorLike) -> FramedDatum:
    d = quiver.dimvec(d)
    n = quiver.dimvec(n)
    if not any(n):
        raise QuiverInputError("framing vector n must be non-zero")
    if not any(d):
        raise UndefinedSlopeError("framing needs d != 0 to fix the slope")
    if len(theta) != quiver.num_vertices:
        raise QuiverInputError("stability has the wrong number of weights")
    names = quiver.vertices + (INFINITY_VERTEX,)
    if INFINITY_VERTEX in quiver.vertices:
        raise QuiverInputError(f"vertex name {INFINITY_VERTEX!r} is reserved")
    arrows = [(a.source, a.target, a.name) for a in quiver.arrows]
    inf = quiver.num_vertices
    for i, ni in enumerate(n):
        arrows.extend((inf, i, f"f{quiver.vertices[i]}{k + 1}") for k in range(ni))
    extended = Quiver(names, arrows)
    return FramedDatum(
        base=quiver,
        d=d,
        n=n,
        theta=theta,
        extended=extended,
        d_hat=d + (1,),
        _normalized=normalize_stability(theta, d),
    )


# ---------------------------------------------------------------------------
# local quiver of a polystable type


@dataclass(frozen=True)
class PolystableType:
    parts: tuple[DimVec, ...]
    multiplicities: tuple[int, ...]

    def __init__(self, parts: Sequence[Sequence[int]], multiplicities: Sequence[int]):
        if len(parts) != len(multiplicities):
            raise QuiverInputError("parts and multiplicities differ in length")
        if any(z <= 0 for z in multiplicities):
            raise QuiverInputError("multiplicities must be positive")
        if any(not any(p) for p in parts):
            raise QuiverInputError("parts must be non-zero")
        object.__setattr__(self, "parts", tuple(tuple(p) for p in parts))
        object.__setattr__(self, "multiplicities", tuple(multiplicities))

    def total(self) -> DimVec:
        acc = [0] * len(self.parts[0]) if self.parts else []
        for p, z in zip(self.parts, self.multiplicities):
            for k, x in enumerate(p):
                acc[k] += z * x
        return tuple(acc)


def local_quiver(quiver: Quiver, n: VectorLike, xi: PolystableType) -> tuple[Quiver, DimVec, DimVec]:
    """Local quiver datum (Q_xi, d_xi, n_xi) of a polystable type.

    Q_xi has one vertex per part and ``delta_kl - <d^k, d^l>`` arrows k -> l.
    """
    n = quiver.dimvec(n)
    parts = [quiver.dimvec(p) for p in xi.parts]
    s = len(parts)
    names = [str(k + 1) for k in range(s)]
    arrows = []
    for k in range(s):
        for l in range(s):
            count = (k == l) - quiver.euler_form(parts[k], parts[l])
            if count < 0:
                raise InfeasibleTypeError(
                    f"<d^{k + 1}, d^{l + 1}> = {quiver.euler_form(parts[k], parts[l])} "
                    "gives a negative arrow count"
                )
            arrows.extend((names[k], names[l]) for _ in range(count))
    return Quiver(names, arrows), tuple(xi.multiplicities), tuple(dot(n, p) for p in parts)


def support_reachable(quiver: Quiver, d: VectorLike, n: VectorLike) -> dict[str, bool]:
    """For each vertex in supp(d): is it reached from a framed vertex inside supp(d)?

    A vertex i with n_i != 0 reaches itself by the empty path.  Vertices
    outside the support are not reported.
    """
    d = quiver.dimvec(d)
    n = quiver.dimvec(n)
    supp = [i for i, x in enumerate(d) if x]
    in_supp = set(supp)
    seen = {i for i in supp if n[i]}
    todo = deque(seen)
    a = quiver.adjacency
    while todo:
        i = todo.popleft()
        for j in supp:
            if a[i][j] and j not in seen:
                seen.add(j)
                todo.append(j)
    return {quiver.vertices[i]: i in seen for i in supp if i in in_supp}
