"""Scrolls, the bundle-map construction, secant lines and projections."""
from .bundle import (BINARY, BundleMapAlpha, ScrollSpec, cokernel_map, compose, random_alpha,
                     splitting_type)
from .construct import ConstructionReport, ambient_ring, construct, parametrization, vertex_line
from .schemes import (EmbeddedScheme, Line, cone_over, cone_scroll_ideal,
                      jacobian_smooth_at_secant, project_from_line, scroll_ideal,
                      secant_divisor, secant_point_report, secant_scheme_length, veronese)

__all__ = [
    "BINARY", "BundleMapAlpha", "ScrollSpec", "random_alpha", "splitting_type", "cokernel_map",
    "compose", "construct", "ConstructionReport", "ambient_ring", "parametrization",
    "vertex_line", "EmbeddedScheme", "Line", "scroll_ideal", "cone_scroll_ideal", "cone_over",
    "veronese", "secant_divisor", "secant_scheme_length", "project_from_line",
    "secant_point_report", "jacobian_smooth_at_secant",
]
