"""Exact intersection cycles of projective plane curves over Q."""

from .cycles import Cycle, GaloisCycle
from .factor import Factorization, factor_binary_form, factor_nf, factor_q, squarefree_decomposition
from .intersect import (
    CommonComponentError,
    CycleInvariantError,
    EuclidStep,
    Line,
    RatPoint,
    euclid_step,
    intersect_with_lines,
    intersection_cycle,
    line_point,
    point_cycle,
)
from .mpoly import (
    HPoly,
    MPoly,
    clear_denominators,
    ff_divide,
    gcd_homogeneous,
    homogenize,
    resultant_x,
    substitute_line,
    x_content,
)
from .numberfield import NFElem, NumberField, QQ
from .parsing import ParseError, parse_poly
from .unpack import ApproxPoint, complex_roots, unpack
from .upoly import UPoly
from .verify import bezout_holds, on_curve, property_harness, resultant_oracle

__version__ = "0.1.0"

__all__ = [
    "ApproxPoint",
    "CommonComponentError",
    "Cycle",
    "CycleInvariantError",
    "EuclidStep",
    "Factorization",
    "GaloisCycle",
    "HPoly",
    "Line",
    "MPoly",
    "NFElem",
    "NumberField",
    "ParseError",
    "QQ",
    "RatPoint",
    "UPoly",
    "bezout_holds",
    "clear_denominators",
    "complex_roots",
    "euclid_step",
    "factor_binary_form",
    "factor_nf",
    "factor_q",
    "ff_divide",
    "gcd_homogeneous",
    "homogenize",
    "intersect_with_lines",
    "intersection_cycle",
    "line_point",
    "on_curve",
    "parse_poly",
    "point_cycle",
    "property_harness",
    "resultant_oracle",
    "resultant_x",
    "squarefree_decomposition",
    "substitute_line",
    "unpack",
    "x_content",
]
