#!/usr/bin/env python3
"""Kronecker moduli and the generating-function engine.

For the m-Kronecker quiver with stability (1,0), the vectors (k, k), (2k, 2k),
... share slope 1/2.  The series engine inverts sum P_e t^e in the twisted
ring of that slope class and reads off every smooth model below a cap at
once.  The coprime vectors give projective bundles over the stable moduli.

Run:  python3 demos/03_kronecker_slope_class.py
"""

from fractions import Fraction

from smoothquiver import (
    Quiver,
    Stability,
    is_coprime,
    p_d,
    series_engine,
    smooth_model_poincare_summation,
    stable_poincare,
)

theta = Stability([1, 0])
for m in (2, 3):
    Q = Quiver.kronecker(m)
    print(f"{m}-Kronecker quiver")
    for d in [(1, 1), (1, 2), (2, 3)]:
        if is_coprime(Q, theta, d):
            print(f"  d={d}: coprime, stable moduli {stable_poincare(Q, theta, d)}")
    print(f"  d=(2,2): P_d = {p_d(Q, theta, (2, 2))}")
    for n in [(1, 0), (1, 1)]:
        table = series_engine(Q, theta, Fraction(1, 2), (3, 3), n)
        for e, poly in sorted(table.items()):
            if any(e):
                check = smooth_model_poincare_summation(Q, theta, e, n)
                print(f"  n={n} d={e}: {poly}" + ("" if poly == check else "   MISMATCH"))
    print()
