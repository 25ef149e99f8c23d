"""Numeric kernels: exact rational LP, Hermitian eigensolver, certified adversary SDP."""

from .bisect import bisect_feasibility
from .linalg import eig_hermitian, spectral_norm
from .lp import EQ, GE, LE, LPResult, LPStatus, RationalLP, lp_solve
from .sdp import NONNEGATIVE, UNRESTRICTED, SdpAdversaryInstance, adversary_sdp

__all__ = [
    "EQ",
    "GE",
    "LE",
    "LPResult",
    "LPStatus",
    "NONNEGATIVE",
    "RationalLP",
    "SdpAdversaryInstance",
    "UNRESTRICTED",
    "adversary_sdp",
    "bisect_feasibility",
    "eig_hermitian",
    "lp_solve",
    "spectral_norm",
]
