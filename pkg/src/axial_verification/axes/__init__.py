"""Axis axioms, component splits, Jordan types and Miyamoto involutions."""

from ._checks import (
    SideCheck,
    check_axis,
    check_left_axis,
    check_side,
    detect_axis_type,
    detect_side_type,
    joint_part,
    jordan_type,
    resolve_type,
    respects_grading,
)
from ._components import component_split
from ._globals import ANY, ANY_PLACEHOLDER, AnyType
from ._miyamoto import is_automorphism, miyamoto
from ._report import AxisReport, AxisType, ComponentSplit
from ._search import find_axes_ff

__all__ = [
    "ANY",
    "ANY_PLACEHOLDER",
    "AnyType",
    "AxisReport",
    "AxisType",
    "ComponentSplit",
    "SideCheck",
    "check_axis",
    "check_left_axis",
    "check_side",
    "component_split",
    "detect_axis_type",
    "detect_side_type",
    "find_axes_ff",
    "is_automorphism",
    "joint_part",
    "jordan_type",
    "miyamoto",
    "resolve_type",
    "respects_grading",
]
