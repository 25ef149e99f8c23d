"""Query-complexity measures, exact where cheap and certified otherwise."""

from ..report import MeasureReport, Provenance
from .combinatorial import (
    SensitiveBlockSet,
    block_sensitivity,
    certificate_complexity,
    dtree_complexity,
    find_certificate,
    fractional_block_sensitivity,
    is_certificate,
    minimal_sensitive_blocks,
    sensitivity,
)
from .polynomial import approx_degree, exact_degree
from .spectral import adv, gen_adv, qd_bounds

__all__ = [
    "MeasureReport",
    "Provenance",
    "SensitiveBlockSet",
    "adv",
    "approx_degree",
    "block_sensitivity",
    "certificate_complexity",
    "dtree_complexity",
    "exact_degree",
    "find_certificate",
    "fractional_block_sensitivity",
    "gen_adv",
    "is_certificate",
    "minimal_sensitive_blocks",
    "qd_bounds",
    "sensitivity",
]
