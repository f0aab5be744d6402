"""Domain models: Hopf algebras, corepresentations, bundles and their derived objects."""

from hopfgalois.models.algebra import AlgebraStructure
from hopfgalois.models.hopf import Comodule, Corep, HopfAlgebra
from hopfgalois.models.bundle import (
    Bundle,
    CanonicalMap,
    DualBases,
    FixedSubalgebra,
    IntertwinerSpace,
    IsotypicComponent,
    PeterWeylDecomposition,
    TensorOverBase,
    TranslationTable,
)
from hopfgalois.models.differential import UniversalFODC, VerticalSplit
from hopfgalois.models.group import GroupTable, GSetAction

__all__ = [
    "AlgebraStructure",
    "Bundle",
    "CanonicalMap",
    "Comodule",
    "Corep",
    "DualBases",
    "FixedSubalgebra",
    "GroupTable",
    "GSetAction",
    "HopfAlgebra",
    "IntertwinerSpace",
    "IsotypicComponent",
    "PeterWeylDecomposition",
    "TensorOverBase",
    "TranslationTable",
    "UniversalFODC",
    "VerticalSplit",
]
