"""Schubert structure constants of G/P and their two-parameter deformation."""

from .rootsys import CartanType, RootSystem, build
from .weyl import ParabolicData, WeylElement, parse_element, format_element
from .schubert import StructureConstantTable, full_table, structure_constants_pair
from .deform import classify, star_ts_coefficient

__version__ = "0.1.0"

__all__ = [
    "CartanType",
    "RootSystem",
    "build",
    "ParabolicData",
    "WeylElement",
    "parse_element",
    "format_element",
    "StructureConstantTable",
    "full_table",
    "structure_constants_pair",
    "classify",
    "star_ts_coefficient",
]
