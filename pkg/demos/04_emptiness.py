#!/usr/bin/env python3
"""When is a smooth model empty?

At zero stability the smooth model is non-empty exactly when
n_i >= <d, i> for all i and every vertex of supp(d) is reached from a
framed vertex by a path inside supp(d).  The second condition matters: a
loop at i plus an arrow i -> j, framed only at j, satisfies the inequalities
for d = (1,0) but has no points.  For general stability the recursive
criterion on the framed datum decides the question.

Run:  python3 demos/04_emptiness.py
"""

from smoothquiver import (
    Quiver,
    Stability,
    hilb_nonempty,
    smooth_model_nonempty,
    smooth_model_poincare_recursion,
    sst_nonempty,
    support_reachable,
)
from smoothquiver.quiver import unit

Q = Quiver(["i", "j"], [("i", "i"), ("i", "j")])
d, n = (1, 0), (0, 1)
print("loop at i, arrow i -> j, d=(1,0), n=(0,1)")
print("  n_i - <d,i>:", [n[k] - Q.euler_form(d, unit(2, k)) for k in range(2)])
print("  reachable:  ", support_reachable(Q, d, n))
print("  criterion:  ", hilb_nonempty(Q, d, n))
print("  Poincare:   ", smooth_model_poincare_recursion(Q, Stability.zero(2), d, n))
print("  framed n=(1,0):", hilb_nonempty(Q, d, (1, 0)),
      smooth_model_poincare_recursion(Q, Stability.zero(2), d, (1, 0)))

print("\nsemistable moduli of the 2-Kronecker quiver, stability (1,0)")
K = Quiver.kronecker(2)
theta = Stability([1, 0])
for d in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 3), (3, 1)]:
    print(f"  d={d}: semistable {'non-empty' if sst_nonempty(K, theta, d) else 'empty'},"
          f" smooth model (n=(1,0)) {'non-empty' if smooth_model_nonempty(K, theta, d, (1, 0)) else 'empty'}")
