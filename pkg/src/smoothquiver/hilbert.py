"""The Theta = 0 case: Hilbert schemes of path algebras.

Non-emptiness is decided by an explicit criterion, and the Poincare
polynomial is a generating function over the multipartitions S_{d,n}:

    P(q) = q^{n.d - <d,d>} sum_{lambda in S_{d,n}} q^{-|lambda|}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import ConsistencyError
from .qpoly import PolyQ
from .quiver import DimVec, Quiver, VectorLike, dot, sub_vectors, support_reachable, unit

__all__ = [
    "Multipartition",
    "hilb_nonempty",
    "part_bound",
    "multipartitions",
    "hilb_poincare_multipartitions",
]


@dataclass(frozen=True, order=True)
class Multipartition:
    """One weakly decreasing tuple of d_i non-negative parts per vertex.

    ``part(i, 0)`` is the virtual part lambda^i_0, which is larger than any
    bound it is ever compared with; use ``below`` rather than arithmetic.
    """

    parts: tuple[tuple[int, ...], ...]
    weight: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(tuple(int(x) for x in p) for p in self.parts)
        for p in parts:
            if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
                raise ValueError(f"not a partition: {p}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(map(sum, parts)))

    @classmethod
    def zero(cls, d: Sequence[int]) -> "Multipartition":
        return cls(tuple((0,) * x for x in d))

    @property
    def shape(self) -> DimVec:
        return tuple(len(p) for p in self.parts)

    def part(self, i: int, m: int) -> Optional[int]:
        """lambda^i_m for 1 <= m <= d_i; None stands for the virtual part m = 0."""
        return None if m == 0 else self.parts[i][m - 1]

    def below(self, i: int, m: int, bound: int) -> bool:
        """Is lambda^i_m < bound?  Always false for m = 0."""
        return m != 0 and self.parts[i][m - 1] < bound

    def __str__(self):
        return "(" + " | ".join(",".join(map(str, p)) for p in self.parts) + ")"


def hilb_nonempty(quiver: Quiver, d: VectorLike, n: VectorLike) -> bool:
    """n_i >= <d, i> everywhere, and every vertex of supp(d) is reached from a
    framed vertex by a path inside supp(d)."""
    d, n = quiver.dimvec(d), quiver.dimvec(n)
    k = quiver.num_vertices
    if any(n[i] - quiver.euler_form(d, unit(k, i)) < 0 for i in range(k)):
        return False
    return all(support_reachable(quiver, d, n).values())


def part_bound(quiver: Quiver, d: VectorLike, n: VectorLike, i: int) -> int:
    """Upper bound n_i - <d, i> - a_ii for the largest part at i (d_i > 0)."""
    d, n = quiver.dimvec(d), quiver.dimvec(n)
    k = quiver.num_vertices
    ei = unit(k, i)
    return n[i] - quiver.euler_form(d, ei) - quiver.arrow_form(ei, ei)


def multipartitions(quiver: Quiver, d: VectorLike, n: VectorLike) -> list[Multipartition]:
    """S_{d,n}, sorted canonically (vertex order, then parts).

    lambda is in S_{d,n} iff for every 0 <= e < d some i has
    lambda^i_{d_i - e_i} < n_i - <e, i>.  Enumerated by backtracking over the
    parts, checking each constraint as soon as all parts it mentions are set.
    """
    d, n = quiver.dimvec(d), quiver.dimvec(n)
    k = quiver.num_vertices
    bounds = [part_bound(quiver, d, n, i) if d[i] else 0 for i in range(k)]
    if any(d[i] and bounds[i] < 0 for i in range(k)):
        return []
    # variables in assignment order: vertex by vertex, smallest part first
    var_of: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []
    for i in range(k):
        for m in range(d[i], 0, -1):
            var_of[(i, m)] = len(order)
            order.append((i, m))
    # each e < d gives the clause OR_i [x(i, d_i - e_i) < c_i]
    checks: list[list[tuple[tuple[int, int], ...]]] = [[] for _ in order]
    for e in sub_vectors(d):
        if e == d:
            continue
        lits = tuple(
            (var_of[(i, d[i] - e[i])], n[i] - quiver.euler_form(e, unit(k, i)))
            for i in range(k)
            if e[i] < d[i]
        )
        if not lits:  # pragma: no cover - e < d has a vertex with e_i < d_i
            continue
        checks[max(v for v, _ in lits)].append(lits)

    vals = [0] * len(order)
    out: list[Multipartition] = []

    def rec(pos: int):
        if pos == len(order):
            out.append(_assemble(vals, d, var_of))
            return
        i, m = order[pos]
        lo = vals[pos - 1] if m < d[i] else 0
        for x in range(lo, bounds[i] + 1):
            vals[pos] = x
            if all(any(vals[v] < c for v, c in lits) for lits in checks[pos]):
                rec(pos + 1)

    rec(0)
    out.sort()
    for lam in out:
        for i in range(k):
            if d[i] and lam.parts[i][0] > bounds[i]:  # pragma: no cover
                raise ConsistencyError(f"{lam} violates the part bound at vertex {i}")
    return out


def _assemble(vals, d, var_of) -> Multipartition:
    return Multipartition(
        tuple(tuple(vals[var_of[(i, m)]] for m in range(1, d[i] + 1)) for i in range(len(d)))
    )


def hilb_poincare_multipartitions(quiver: Quiver, d: VectorLike, n: VectorLike) -> PolyQ:
    """q^{n.d - <d,d>} sum_{lambda in S_{d,n}} q^{-|lambda|}; zero when S_{d,n} is empty."""
    d, n = quiver.dimvec(d), quiver.dimvec(n)
    top = dot(n, d) - quiver.euler_form(d, d)
    coeffs: dict[int, int] = {}
    for lam in multipartitions(quiver, d, n):
        if lam.weight > top:
            raise ConsistencyError(f"{lam} has weight {lam.weight} above the dimension {top}")
        coeffs[top - lam.weight] = coeffs.get(top - lam.weight, 0) + 1
    return PolyQ(coeffs)
