"""Constructors for the standard example families: matroids, cell
complexes, and Boolean-formula classes."""

from .cells import CellComplexInput, cube_complex, cube_faces, face_poset, simplex_input
from .formulas import FormulaClassSpec, formula_class
from .matroids import (
    DirectSumMatroid,
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    MinorMatroid,
    UniformMatroid,
    lattice_of_flats,
    matroid_minor,
)

__all__ = [
    "CellComplexInput",
    "DirectSumMatroid",
    "FormulaClassSpec",
    "GraphicMatroid",
    "LinearMatroid",
    "Matroid",
    "MinorMatroid",
    "UniformMatroid",
    "cube_complex",
    "cube_faces",
    "face_poset",
    "formula_class",
    "lattice_of_flats",
    "matroid_minor",
    "simplex_input",
]
