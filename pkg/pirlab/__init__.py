__title__ = "pirlab"

__author__ = "darkstussy"

__copyright__ = f"Copyright (c) 2025 {__author__}"

from .field import FieldElement, FieldSpec, validate_field
from .matrix import FpMatrix
from .reference import build_reference_table, reference_decoder
from .scheme import MessageVector, SchemeParams, SchemeTable, capacity_formula, rate_exact
from .verifier import full_report, render_report

__all__ = (
    "FieldElement",
    "FieldSpec",
    "FpMatrix",
    "MessageVector",
    "SchemeParams",
    "SchemeTable",
    "build_reference_table",
    "capacity_formula",
    "full_report",
    "rate_exact",
    "reference_decoder",
    "render_report",
    "validate_field",
)
