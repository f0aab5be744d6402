"""Schemas package for input files and reports."""

from hopfgalois.schemas.file_format import (
    BundleBlock,
    CorepBlock,
    CorepListBlock,
    FieldSpec,
    HopfBlock,
    InputFile,
)
from hopfgalois.schemas.reports import (
    AxiomViolation,
    BmMdReport,
    BundleReport,
    CommandReport,
    CorepReport,
    CrossCheckReport,
    EngineReport,
    FODCReport,
    FreenessReport,
    GaloisReport,
    HopfReport,
    PeterWeylComponent,
    PeterWeylReport,
    InverseReport,
    TranslationReport,
    VerticalSplitReport,
)

__all__ = [
    "AxiomViolation",
    "BmMdReport",
    "BundleBlock",
    "BundleReport",
    "CommandReport",
    "CorepBlock",
    "CorepListBlock",
    "CorepReport",
    "CrossCheckReport",
    "EngineReport",
    "FieldSpec",
    "FODCReport",
    "FreenessReport",
    "GaloisReport",
    "HopfBlock",
    "HopfReport",
    "InputFile",
    "PeterWeylComponent",
    "PeterWeylReport",
    "InverseReport",
    "TranslationReport",
    "VerticalSplitReport",
]
