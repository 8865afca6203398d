"""Exact arithmetic, ratios and theorem checks in the Desargues affine plane over a skew field."""

from .construct import ConstructionTrace, geo_add, geo_left_div, geo_mul, geo_sub
from .dyckgroup import DyckPolygon, GroupWord, present, reach, validate_polygon, word_op
from .errors import GeometryError
from .plane import Point, check_desargues, intersect, line_through, parallel_through
from .ratio import INFINITY, midpoint_solve, ratio2, ratio3
from .skewfield import FieldSpec, field_arith

__all__ = [
    "ConstructionTrace", "DyckPolygon", "FieldSpec", "GeometryError", "GroupWord", "INFINITY", "Point",
    "check_desargues", "field_arith", "geo_add", "geo_left_div", "geo_mul", "geo_sub", "intersect",
    "line_through", "midpoint_solve", "parallel_through", "present", "ratio2", "ratio3", "reach",
    "validate_polygon", "word_op",
]
