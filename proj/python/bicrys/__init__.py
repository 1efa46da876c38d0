"""Bicrystal structure of determinantal-type ideals."""

from ._core import (
    DomainError,
    Ideal,
    ParseError,
    apply_op,
    determinantal,
    drift_table,
    insertion_tableau,
    rsk,
    rsk_inverse,
    schubert_determinantal,
    verify_basic_lead_terms,
    width,
)

__all__ = [
    "DomainError",
    "Ideal",
    "ParseError",
    "apply_op",
    "determinantal",
    "drift_table",
    "insertion_tableau",
    "rsk",
    "rsk_inverse",
    "schubert_determinantal",
    "verify_basic_lead_terms",
    "width",
]
