"""Exact Poincare polynomials of smooth models of quiver moduli.

The main entry points:

* ``Quiver``, ``Stability``, ``frame``, ``local_quiver`` -- quiver data;
* ``PolyQ``, ``RationalFunctionQ``, ``q_binomial`` -- exact q-arithmetic;
* ``smooth_model_poincare_recursion`` / ``_summation`` / ``series_engine``
  -- three independent engines for the Poincare polynomial;
* ``multipartitions``, ``hilb_poincare_multipartitions`` and the ``cells``
  module -- the Theta = 0 case (Hilbert schemes of path algebras).
"""

from .errors import (
    ConsistencyError,
    InfeasibleTypeError,
    PreconditionError,
    QuiverInputError,
    UndefinedSlopeError,
)
from .qpoly import (
    PolyQ,
    RationalFunctionQ,
    exact_divide,
    gauge_ratio,
    gl_order,
    partition_series,
    q_binomial,
    r_points,
)
from .quiver import (
    FramedDatum,
    PolystableType,
    Quiver,
    Stability,
    euler_form,
    frame,
    is_coprime,
    local_quiver,
    normalize_stability,
    slope,
    support_reachable,
)
from .betti import (
    PdCache,
    TwistedSeries,
    admissible_decompositions,
    p_d,
    semi_admissible_decompositions,
    series_engine,
    smooth_model_nonempty,
    smooth_model_poincare_recursion,
    smooth_model_poincare_series,
    smooth_model_poincare_summation,
    sst_nonempty,
    stable_poincare,
)
from .hilbert import Multipartition, hilb_nonempty, hilb_poincare_multipartitions, multipartitions
from .cells import (
    ForestVertex,
    Subforest,
    cell_descriptors,
    cell_dimension,
    cell_relations,
    corona,
    enumerate_forests,
    hilb_poincare_cells,
    phi,
    psi,
    vertex_compare,
)
from .qfile import parse_quiver_text, read_quiver_file

__version__ = "0.1.0"
