"""Cell decompositions of Hilbert schemes via subforests of covering trees.

For each vertex q and copy 1 <= i <= n_q there is a covering tree T_{q,i}
whose vertices are the paths starting at q.  A forest vertex is a triple
``(q, i, w)`` with ``w`` a word of arrow ids; arrow ids are ranks in the
quiver's fixed arrow order, so plain tuple comparison is the required total
order (vertex, then copy, then word with proper prefixes first).

A subforest S is a prefix-closed finite set of forest vertices.  Its corona
consists of the children outside S together with the roots of empty trees.
Each corona vertex c must lie in the span of the forest vertices of its type
below c; the number of such vertices summed over the corona is the dimension
of the cell attached to S.
"""

from __future__ import annotations

import bisect
import functools
import heapq
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import ConsistencyError, QuiverInputError
from .hilbert import Multipartition, multipartitions
from .qpoly import PolyQ
from .quiver import DimVec, Quiver, VectorLike

__all__ = [
    "ForestVertex",
    "Subforest",
    "Relation",
    "CellDescriptor",
    "vertex_compare",
    "corona",
    "enumerate_forests",
    "type_correct_subforests",
    "phi",
    "psi",
    "cell_dimension",
    "cell_relations",
    "cell_descriptors",
    "hilb_poincare_cells",
    "format_cell_table",
]


class ForestVertex(NamedTuple):
    q: int
    i: int
    w: tuple[int, ...]


class _Ambient:
    """Arrow data of (Q, n) in the form the forest code needs."""

    def __init__(self, quiver: Quiver, n: DimVec):
        self.quiver = quiver
        self.n = n
        self.arrows = [quiver.arrows[k] for k in quiver.arrow_order]
        self.target = [a.target for a in self.arrows]
        self.names = [a.name for a in self.arrows]
        self.out = [[r for r, a in enumerate(self.arrows) if a.source == v] for v in range(quiver.num_vertices)]
        self.roots = [ForestVertex(q, i, ()) for q in range(len(n)) for i in range(1, n[q] + 1)]

    def type(self, v: ForestVertex) -> int:
        return self.target[v.w[-1]] if v.w else v.q

    def word(self, w: Sequence[int]) -> str:
        return "".join(self.names[r] for r in w) if w else "()"

    def vertex(self, v: ForestVertex) -> str:
        return f"({self.quiver.vertices[v.q]},{v.i},{self.word(v.w)})"


@functools.lru_cache(maxsize=64)
def _ambient(quiver: Quiver, n: DimVec) -> _Ambient:
    return _Ambient(quiver, n)


def vertex_compare(v: ForestVertex, w: ForestVertex) -> int:
    """-1, 0 or 1 according to the total order on forest vertices."""
    return (v > w) - (v < w)


@dataclass(frozen=True)
class Subforest:
    """A prefix-closed finite set of forest vertices of F_n(Q)."""

    quiver: Quiver
    n: DimVec
    vertices: frozenset
    type_counts: DimVec = field(init=False, compare=False)

    def __post_init__(self):
        n = self.quiver.dimvec(self.n)
        object.__setattr__(self, "n", n)
        verts = frozenset(ForestVertex(v[0], v[1], tuple(v[2])) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        amb = _ambient(self.quiver, n)
        counts = [0] * self.quiver.num_vertices
        for v in verts:
            if not (0 <= v.q < len(n) and 1 <= v.i <= n[v.q]):
                raise QuiverInputError(f"{v} is not a vertex of the framed forest")
            src = v.q
            for r in v.w:
                if not 0 <= r < len(amb.arrows) or amb.arrows[r].source != src:
                    raise QuiverInputError(f"{v} is not a path")
                src = amb.target[r]
            if v.w and ForestVertex(v.q, v.i, v.w[:-1]) not in verts:
                raise QuiverInputError(f"not closed under predecessors: {amb.vertex(v)}")
            counts[amb.type(v)] += 1
        object.__setattr__(self, "type_counts", tuple(counts))

    @property
    def _amb(self) -> _Ambient:
        return _ambient(self.quiver, self.n)

    @classmethod
    def empty(cls, quiver: Quiver, n: VectorLike) -> "Subforest":
        return cls(quiver, quiver.dimvec(n), frozenset())

    @classmethod
    def from_notation(cls, quiver: Quiver, n: VectorLike, text: str) -> "Subforest":
        """Parse the listing notation, e.g. ``(∅,(α,αβ),∅,())``.

        One entry per tree in (vertex, copy) order: ``∅`` for an empty tree,
        ``()`` for a lone root, otherwise the non-root words; roots of
        non-empty trees are implicit.  Words are arrow names run together.
        """
        n = quiver.dimvec(n)
        amb = _ambient(quiver, n)
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise QuiverInputError(f"forest must be parenthesised: {text!r}")
        entries = _split_top(body[1:-1])
        if len(entries) != len(amb.roots):
            raise QuiverInputError(f"expected {len(amb.roots)} trees, got {len(entries)}")
        verts = set()
        for root, entry in zip(amb.roots, entries):
            entry = entry.strip()
            if entry in ("∅", "{}", "-"):
                continue
            if not (entry.startswith("(") and entry.endswith(")")):
                raise QuiverInputError(f"bad tree {entry!r}")
            verts.add(root)
            for tok in filter(None, (t.strip() for t in entry[1:-1].split(","))):
                w = _parse_word(amb, root.q, tok)
                verts.update(ForestVertex(root.q, root.i, w[:k]) for k in range(len(w) + 1))
        return cls(quiver, n, frozenset(verts))

    def sorted_vertices(self) -> list[ForestVertex]:
        return sorted(self.vertices)

    def trees(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """Sorted words of each tree, in (vertex, copy) order."""
        by_root: dict = {(r.q, r.i): [] for r in self._amb.roots}
        for v in self.vertices:
            by_root[(v.q, v.i)].append(v.w)
        return tuple(tuple(sorted(ws)) for ws in by_root.values())

    def sort_key(self):
        """Forest order: tree by tree, bigger trees first, then by words."""
        return tuple((-len(t), t) for t in self.trees())

    def notation(self) -> str:
        amb = self._amb
        parts = []
        for t in self.trees():
            if not t:
                parts.append("∅")
            elif len(t) == 1:
                parts.append("()")
            else:
                parts.append("(" + ",".join(amb.word(w) for w in t[1:]) + ")")
        return "(" + ",".join(parts) + ")"

    def __str__(self):
        return self.notation()


def _split_top(s: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in s:
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
            continue
        depth += (ch == "(") - (ch == ")")
        cur.append(ch)
    out.append("".join(cur))
    return out


def _parse_word(amb: _Ambient, start: int, tok: str) -> tuple[int, ...]:
    w, pos, at = [], 0, start
    while pos < len(tok):
        hits = [r for r in amb.out[at] if tok.startswith(amb.names[r], pos)]
        if not hits:
            raise QuiverInputError(f"cannot read word {tok!r} from vertex {amb.quiver.vertices[start]}")
        r = max(hits, key=lambda r: len(amb.names[r]))
        w.append(r)
        pos += len(amb.names[r])
        at = amb.target[r]
    return tuple(w)


# ---------------------------------------------------------------------------
# corona, dimension, relations


def _corona(amb: _Ambient, verts) -> list[ForestVertex]:
    out = [r for r in amb.roots if r not in verts]
    for v in verts:
        for r in amb.out[amb.type(v)]:
            c = ForestVertex(v.q, v.i, v.w + (r,))
            if c not in verts:
                out.append(c)
    out.sort()
    return out


def corona(S: Subforest) -> list[ForestVertex]:
    """Children of S outside S plus roots of empty trees, in increasing order."""
    return _corona(S._amb, S.vertices)


def _by_type(amb: _Ambient, verts) -> dict[int, list[ForestVertex]]:
    out: dict[int, list[ForestVertex]] = {}
    for v in sorted(verts):
        out.setdefault(amb.type(v), []).append(v)
    return out


class Relation(NamedTuple):
    corona_vertex: ForestVertex
    span: tuple[ForestVertex, ...]
    vacuous: bool


def cell_relations(S: Subforest) -> list[Relation]:
    """For each corona vertex c: the forest vertices of type t(c) below c.

    A relation is vacuous when the span already contains all d_{t(c)}
    vertices of that type.
    """
    amb = S._amb
    typed = _by_type(amb, S.vertices)
    out = []
    for c in corona(S):
        same = typed.get(amb.type(c), [])
        span = tuple(same[: bisect.bisect_left(same, c)])
        out.append(Relation(c, span, len(span) == len(same)))
    return out


def cell_dimension(S: Subforest) -> int:
    """Number of free coefficients in the cell's relations."""
    return sum(len(r.span) for r in cell_relations(S))


def format_relation(S: Subforest, rel: Relation) -> str:
    amb = S._amb
    span = ",".join(amb.vertex(v) for v in rel.span)
    tail = " = 0" if not rel.span else ""
    return f"{amb.vertex(rel.corona_vertex)} ∈ <{span}>{tail}"


# ---------------------------------------------------------------------------
# the bijection with multipartitions


def phi(S: Subforest) -> Multipartition:
    """lambda^j_m = number of corona j-vertices with at least m larger forest j-vertices."""
    amb = S._amb
    typed = _by_type(amb, S.vertices)
    d = S.type_counts
    larger: list[list[int]] = [[] for _ in d]
    for c in corona(S):
        j = amb.type(c)
        same = typed.get(j, [])
        larger[j].append(len(same) - bisect.bisect_right(same, c))
    parts = tuple(
        tuple(sum(1 for x in larger[j] if x >= m) for m in range(1, d[j] + 1)) for j in range(len(d))
    )
    return Multipartition(parts)


def psi(lam: Multipartition, quiver: Quiver, d: VectorLike, n: VectorLike) -> Subforest:
    """Inverse of phi.

    Put mu^i_0 = lambda^i_{d_i} and mu^i_m = lambda^i_{d_i-m} - lambda^i_{d_i-m+1};
    then mu^i_m is the number of corona i-vertices lying between the m-th and
    (m+1)-th forest i-vertex.  The forest is built by sweeping candidate
    vertices in increasing order: once the sweep passes a corona vertex it
    stays in the corona, so an i-vertex is taken exactly when its gap already
    holds mu^i_m corona vertices, and left in the corona otherwise.
    """
    d, n = quiver.dimvec(d), quiver.dimvec(n)
    if lam.shape != d:
        raise QuiverInputError(f"{lam} does not have shape {d}")
    amb = _ambient(quiver, n)
    mu = [
        [p[d[i] - 1]] + [p[d[i] - m - 1] - p[d[i] - m] for m in range(1, d[i])] if d[i] else []
        for i, p in enumerate(lam.parts)
    ]
    placed = [0] * len(d)
    gap = [0] * len(d)
    verts: set[ForestVertex] = set()
    heap = list(amb.roots)
    heapq.heapify(heap)
    while placed != list(d):
        if not heap:
            raise ConsistencyError(f"ran out of candidates while placing {lam}")
        c = heapq.heappop(heap)
        j = amb.type(c)
        if placed[j] == d[j]:
            continue
        if gap[j] < mu[j][placed[j]]:
            gap[j] += 1
            continue
        verts.add(c)
        placed[j] += 1
        gap[j] = 0
        for r in amb.out[j]:
            heapq.heappush(heap, ForestVertex(c.q, c.i, c.w + (r,)))
    S = Subforest(quiver, n, frozenset(verts))
    back = phi(S)
    if back != lam:
        raise ConsistencyError(f"phi(psi({lam})) = {back}")
    return S


# ---------------------------------------------------------------------------
# enumeration


def type_correct_subforests(quiver: Quiver, d: VectorLike, n: VectorLike) -> list[Subforest]:
    """All subforests with exactly d_j vertices of type j, by direct search.

    The vertex order extends the prefix order, so every subforest is built
    exactly once by adding corona vertices in increasing order.
    """
    d, n = quiver.dimvec(d), quiver.dimvec(n)
    amb = _ambient(quiver, n)
    counts = [0] * len(d)
    verts: set[ForestVertex] = set()
    out: list[Subforest] = []
    need = sum(d)

    def rec(last: Optional[ForestVertex], size: int):
        if size == need:
            out.append(Subforest(quiver, n, frozenset(verts)))
            return
        for c in _corona(amb, verts):
            if last is not None and c < last:
                continue
            j = amb.type(c)
            if counts[j] == d[j]:
                continue
            verts.add(c)
            counts[j] += 1
            rec(c, size + 1)
            counts[j] -= 1
            verts.discard(c)

    rec(None, 0)
    return out


def enumerate_forests(quiver: Quiver, d: VectorLike, n: VectorLike, cross_check: bool = True) -> list[Subforest]:
    """The forests indexing the cells: psi of every lambda in S_{d,n}.

    With ``cross_check`` the result is compared with the set of all
    type-correct subforests; any difference raises ConsistencyError.
    Sorted in forest order.
    """
    d, n = quiver.dimvec(d), quiver.dimvec(n)
    image = {psi(lam, quiver, d, n) for lam in multipartitions(quiver, d, n)}
    if cross_check:
        direct = set(type_correct_subforests(quiver, d, n))
        if direct != image:
            extra = sorted(str(S) for S in direct - image)
            missing = sorted(str(S) for S in image - direct)
            raise ConsistencyError(
                f"type-correct subforests differ from psi(S_d,n): extra {extra[:5]}, missing {missing[:5]}"
            )
    return sorted(image, key=Subforest.sort_key)


@dataclass(frozen=True)
class CellDescriptor:
    forest: Subforest
    relations: tuple[Relation, ...]
    dimension: int
    multipartition: Multipartition

    def conditions(self) -> list[str]:
        return [format_relation(self.forest, r) for r in self.relations if not r.vacuous]


def cell_descriptors(quiver: Quiver, d: VectorLike, n: VectorLike, cross_check: bool = True) -> list[CellDescriptor]:
    out = []
    for S in enumerate_forests(quiver, d, n, cross_check):
        rels = tuple(cell_relations(S))
        out.append(CellDescriptor(S, rels, sum(len(r.span) for r in rels), phi(S)))
    return out


def hilb_poincare_cells(quiver: Quiver, d: VectorLike, n: VectorLike, cross_check: bool = True) -> PolyQ:
    """Sum of q^{dim} over the cells."""
    coeffs: dict[int, int] = {}
    for S in enumerate_forests(quiver, d, n, cross_check):
        k = cell_dimension(S)
        coeffs[k] = coeffs.get(k, 0) + 1
    return PolyQ(coeffs)


def format_cell_table(cells: Iterable[CellDescriptor]) -> str:
    """One row per cell: index, forest, non-vacuous conditions, multipartition, dimension."""
    rows = []
    for k, c in enumerate(cells, 1):
        cond = ", ".join(c.conditions()) or "-"
        rows.append(f"{k:>3}  {c.forest.notation()}  {cond}  {c.multipartition}  dim={c.dimension}")
    return "\n".join(rows)
