"""Exact rewriting and numerics for the deformed Lobachevsky half-plane.

Layers:

* exact engine — scalars (Laurent polynomials in h over Gaussian rationals),
  rewrite (normal-ordering engine), plane, hopf, crossprod, calculus, series;
* numeric layer — state (the invariant functional and sector inner
  products), bessel (imaginary-order K), spectral (modes and sector
  propagators);
* report / cli — machine-readable verification reports.
"""

from .scalars import Scalar
from .rewrite import Algebra, Element
from .plane import PlaneAlgebra, distance_invariant, parse_element
from .hopf import UhAlgebra, FunAlgebra, coproduct, counit, antipode, rmatrix
from .crossprod import CrossAlgebra, act
from .calculus import e1, e2, laplacian_h, Form, d, hodge, codifferential
from .series import FormalSeries, exp_ikx, lplus_series, lminus_series
from .state import TestFunction, inner_product
from .bessel import bessel_K_imag
from .spectral import (ModeParams, PropagatorQuery, PropagatorResult, mode,
                       propagator, propagator_all)

__version__ = "1.0.0"

__all__ = [
    "Scalar", "Algebra", "Element", "PlaneAlgebra", "distance_invariant",
    "parse_element", "UhAlgebra", "FunAlgebra", "coproduct", "counit",
    "antipode", "rmatrix", "CrossAlgebra", "act", "e1", "e2", "laplacian_h",
    "Form", "d", "hodge", "codifferential", "FormalSeries", "exp_ikx",
    "lplus_series", "lminus_series", "TestFunction",
    "inner_product", "bessel_K_imag", "ModeParams", "PropagatorQuery",
    "PropagatorResult", "mode", "propagator", "propagator_all",
]
