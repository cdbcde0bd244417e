"""Triangle-free Cayley-graph storage codes over F_2^n."""

from _storagecode import (
    annihilator_dim,
    canonical_polynomial,
    family,
    ideal_dim,
    is_triangle_free,
    rate_report,
    sparsity_check,
    verify_section3,
)

__all__ = [
    "annihilator_dim",
    "canonical_polynomial",
    "family",
    "ideal_dim",
    "is_triangle_free",
    "rate_report",
    "sparsity_check",
    "verify_section3",
]
