"""Randomized cross-validation of all engines on small instances.

Used by ``smoothquiver selftest`` and by the test suite.  Every check
compares independently computed quantities; a failing check is recorded
with enough context to reproduce it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import betti, cells, hilbert
from .qpoly import PolyQ
from .quiver import DimVec, Quiver, Stability, dot, is_coprime, unit

__all__ = [
    "Instance",
    "CheckResult",
    "random_instance",
    "random_instances",
    "check_instance",
    "run_suite",
]


@dataclass(frozen=True)
class Instance:
    quiver: Quiver
    d: DimVec
    n: DimVec
    theta: Stability

    def describe(self) -> str:
        arrows = " ".join(f"{self.quiver.vertices[a.source]}->{self.quiver.vertices[a.target]}"
                          for a in self.quiver.arrows)
        w = ",".join(str(x) for x in self.theta.weights)
        return f"Q=[{arrows}] d={self.d} n={self.n} theta=({w})"


@dataclass
class CheckResult:
    instance: Instance
    poincare: Optional[PolyQ] = None
    coprime: bool = False
    checks: dict[str, bool] = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors and all(self.checks.values())

    def record(self, name: str, value: bool, detail: str = ""):
        self.checks[name] = self.checks.get(name, True) and bool(value)
        if not value:
            self.errors.append(f"{name}: {detail}" if detail else name)


def random_instance(rng: random.Random, theta_zero: Optional[bool] = None, max_entry: int = 3) -> Instance:
    """At most 3 vertices, at most 4 arrows, entries of d and n at most max_entry."""
    k = rng.randint(1, 3)
    names = ["a", "b", "c"][:k]
    arrows = [(rng.randrange(k), rng.randrange(k)) for _ in range(rng.randint(0, 4))]
    q = Quiver(names, arrows)
    d = tuple(rng.randint(0, max_entry) for _ in range(k))
    if not any(d):
        d = unit(k, rng.randrange(k))
    n = tuple(rng.randint(0, max_entry) for _ in range(k))
    if not any(n):
        n = unit(k, rng.randrange(k))
    if theta_zero is None:
        theta_zero = rng.random() < 0.4
    theta = Stability.zero(k) if theta_zero else Stability([rng.randint(-2, 2) for _ in range(k)])
    return Instance(q, d, n, theta)


def random_instances(count: int, seed: int = 0, **kw) -> list[Instance]:
    rng = random.Random(seed)
    return [random_instance(rng, **kw) for _ in range(count)]


def _guard(res: CheckResult, name: str, fn: Callable):
    try:
        return fn()
    except Exception as exc:  # surfaced as a failed check, never swallowed silently
        res.record(name, False, f"{type(exc).__name__}: {exc}")
        return None


def check_instance(inst: Instance, cells_limit: int = 5000) -> CheckResult:
    """Run every engine on ``inst`` and compare.

    Cell enumeration is skipped (recorded as not run) when S_{d,n} has more
    than ``cells_limit`` elements.
    """
    Q, d, n, th = inst.quiver, inst.d, inst.n, inst.theta
    res = CheckResult(inst)
    cache = betti.PdCache()
    rec = _guard(res, "recursion", lambda: betti.smooth_model_poincare_recursion(Q, th, d, n, cache))
    summ = _guard(res, "summation", lambda: betti.smooth_model_poincare_summation(Q, th, d, n))
    ser = _guard(res, "series", lambda: betti.smooth_model_poincare_series(Q, th, d, n, cache))
    if None in (rec, summ, ser):
        return res
    res.poincare = rec
    res.record("engine_agreement", rec == summ == ser, f"{rec} | {summ} | {ser}")
    dim = dot(n, d) - Q.euler_form(d, d)
    res.record("positivity", rec.has_nonnegative_coefficients(), str(rec))
    if not rec.is_zero():
        res.record("degree", rec.degree == dim, f"degree {rec.degree} != {dim}")

    res.coprime = is_coprime(Q, th, d)
    if res.coprime:
        pd = betti.p_d(Q, th, d, cache)
        nd = dot(n, d)
        bundle = (PolyQ.monomial(nd) - 1) * pd
        stable = betti.stable_poincare(Q, th, d, cache)
        geometric = PolyQ((1,) * nd) * stable
        res.record("coprime_bundle", bundle == rec and geometric == rec, f"{rec} vs {bundle} vs {geometric}")

    nonempty = _guard(res, "nonempty", lambda: betti.smooth_model_nonempty(Q, th, d, n))
    if nonempty is not None:
        res.record("emptiness_consistency", nonempty == (not rec.is_zero()), f"criterion {nonempty}, P={rec}")

    if th.is_zero():
        _theta_zero_checks(res, dim, cells_limit)
    return res


def _theta_zero_checks(res: CheckResult, dim: int, cells_limit: int):
    inst = res.instance
    Q, d, n = inst.quiver, inst.d, inst.n
    k = Q.num_vertices
    S = hilbert.multipartitions(Q, d, n)
    mp = hilbert.hilb_poincare_multipartitions(Q, d, n)
    res.record("multipartitions_agree", mp == res.poincare, f"{mp} vs {res.poincare}")
    crit = hilbert.hilb_nonempty(Q, d, n)
    res.record("hilb_nonempty_iff", crit == bool(S), f"criterion {crit}, |S|={len(S)}")
    for i in range(k):
        if d[i]:
            b = hilbert.part_bound(Q, d, n, i)
            res.record("part_bound", all(lam.parts[i][0] <= b for lam in S), f"vertex {i} bound {b}")
    if S:
        res.record("zero_multipartition", S[0] == hilbert.Multipartition.zero(d), f"min is {S[0]}")
    if len(S) > cells_limit:
        res.checks["cells_skipped"] = True
        return
    forests = _guard(res, "cells", lambda: cells.enumerate_forests(Q, d, n, cross_check=True))
    if forests is None:
        return
    res.record("count_law", len(forests) == len(S), f"{len(forests)} forests, {len(S)} multipartitions")
    images = [cells.phi(F) for F in forests]
    res.record("phi_bijective", sorted(images) == S, "phi(Phi) != S")
    for lam in S:
        res.record("phi_psi_identity", cells.phi(cells.psi(lam, Q, d, n)) == lam, str(lam))
    coeffs: dict[int, int] = {}
    for F, lam in zip(forests, images):
        dimF = cells.cell_dimension(F)
        coeffs[dimF] = coeffs.get(dimF, 0) + 1
        res.record("dimension_weight", dimF == dim - lam.weight, f"{F}: {dimF} vs {dim} - {lam.weight}")
        cor = cells.corona(F)
        for j in range(k):
            want = n[j] - d[j] + sum(Q.adjacency[i][j] * d[i] for i in range(k))
            got = sum(1 for c in cor if cells._ambient(Q, n).type(c) == j)
            res.record("corona_count", got == want, f"{F}: type {j} has {got}, expected {want}")
    res.record("cells_agree", PolyQ(coeffs) == res.poincare, f"{PolyQ(coeffs)} vs {res.poincare}")


def run_suite(instances: Iterable[Instance], progress: Optional[Callable[[int, CheckResult], None]] = None,
              cells_limit: int = 5000) -> list[CheckResult]:
    out = []
    for k, inst in enumerate(instances):
        r = check_instance(inst, cells_limit=cells_limit)
        out.append(r)
        if progress:
            progress(k, r)
    return out
