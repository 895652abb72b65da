#!/usr/bin/env python3
"""Configurations of r points on the projective line.

The r-subspace quiver with d = (2;1,...,1) and stability (-1;0,...,0)
parametrises r points on P^1 up to PGL_2.  For odd r every semistable
configuration is stable and (q-1)P_d is the Poincare polynomial of the
moduli space.  For even r the polystable points where two clusters of r/2
points meet need a smooth model; framing at the central vertex adds one
extra point v_0 that avoids both clusters.

Run:  python3 demos/02_points_on_the_line.py
"""

from math import comb

from smoothquiver import (
    PolystableType,
    Quiver,
    RationalFunctionQ,
    Stability,
    is_coprime,
    local_quiver,
    p_d,
    smooth_model_poincare_recursion,
    stable_poincare,
)

q = RationalFunctionQ.monomial(1)

for r in range(3, 9):
    Q = Quiver.subspace(r)
    theta = Stability([-1] + [0] * r)
    d, n = (2,) + (1,) * r, (1,) + (0,) * r
    print(f"r = {r}: P_d = {p_d(Q, theta, d)}")
    if is_coprime(Q, theta, d):
        print(f"        stable moduli: {stable_poincare(Q, theta, d)}")
        continue
    smooth = smooth_model_poincare_recursion(Q, theta, d, n)
    h = r // 2
    low = sum((RationalFunctionQ(comb(r, l)) * q ** l for l in range(h)), RationalFunctionQ(0))
    closed = ((q + 1) ** r - (q + 1) * low - q ** h * comb(r, h)) / (q * (q - 1))
    print(f"        smooth model:  {smooth}   closed form agrees: {RationalFunctionQ(smooth) == closed}")

    # The stratum of two clusters: the local quiver has two vertices.
    first = (1,) + (1,) * h + (0,) * h
    second = (1,) + (0,) * h + (1,) * h
    Qx, dx, nx = local_quiver(Q, n, PolystableType([first, second], [1, 1]))
    print(f"        local quiver at a two-cluster point: {Qx.adjacency}, d={dx}, n={nx}")
