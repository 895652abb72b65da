#!/usr/bin/env python3
"""Cells of a Hilbert scheme, and five ways to count them.

The quiver has two vertices a, b and one arrow each way (α: a -> b,
β: b -> a).  With d = n = (2,2) and zero stability the smooth model is a
Hilbert scheme of the path algebra.  It has an affine paving indexed by
subforests of the covering trees, and each forest matches a multipartition.

Run:  python3 demos/01_two_cycle_cells.py
"""

from pathlib import Path

from smoothquiver import (
    PdCache,
    cell_descriptors,
    hilb_poincare_cells,
    hilb_poincare_multipartitions,
    multipartitions,
    read_quiver_file,
    smooth_model_poincare_recursion,
    smooth_model_poincare_series,
    smooth_model_poincare_summation,
)
from smoothquiver.cells import format_cell_table

qf = read_quiver_file(str(Path(__file__).parent / "data" / "two_cycle.quiver"))
Q, d, n, theta = qf.quiver, qf.d, qf.n, qf.stability
print(f"quiver {Q}, d={d}, n={n}")
print(f"dimension n.d - <d,d> = {sum(a * b for a, b in zip(n, d)) - Q.euler_form(d, d)}\n")

# Three engines that work for any stability.
cache = PdCache()
engines = {
    "recursion": smooth_model_poincare_recursion(Q, theta, d, n, cache),
    "summation": smooth_model_poincare_summation(Q, theta, d, n),
    "series": smooth_model_poincare_series(Q, theta, d, n, cache),
    # and two that only exist at zero stability
    "multipartitions": hilb_poincare_multipartitions(Q, d, n),
    "cells": hilb_poincare_cells(Q, d, n),
}
for name, p in engines.items():
    print(f"{name:>16}: {p}")
assert len(set(engines.values())) == 1

S = multipartitions(Q, d, n)
print(f"\n{len(S)} multipartitions, weights {sorted(lam.weight for lam in S)}\n")

# Each row: forest (roots of non-empty trees implicit), the relations that
# cut out the cell, the multipartition phi(forest), and the cell dimension.
print(format_cell_table(cell_descriptors(Q, d, n)))
