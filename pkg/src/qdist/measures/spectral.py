"""Adversary bounds and the distinguishing-complexity bracket built from them."""

from __future__ import annotations

from ..boolfn import PartialFunction, subfunction_fx
from ..errors import AlphabetUnsupported
from ..numopt.sdp import DEFAULT_TOL, NONNEGATIVE, UNRESTRICTED, SdpAdversaryInstance, adversary_sdp
from ..report import MeasureReport, Provenance


def adversary_instance(f: PartialFunction, mode: str = NONNEGATIVE) -> SdpAdversaryInstance:
    if f.q != 2:
        raise AlphabetUnsupported("adversary masks compare binary letters")
    return SdpAdversaryInstance.from_strings(f.inputs_with_value(0), f.inputs_with_value(1), mode)


def adv(f: PartialFunction, tol: float = DEFAULT_TOL) -> MeasureReport:
    """Positive-weights adversary bound."""
    return adversary_sdp(adversary_instance(f, NONNEGATIVE), tol)


def gen_adv(f: PartialFunction, tol: float = DEFAULT_TOL) -> MeasureReport:
    """Negative-weights adversary bound, the Θ-stand-in for Q(f)."""
    r = adversary_sdp(adversary_instance(f, UNRESTRICTED), tol)
    return MeasureReport(
        "gen_adv", r.value, r.lower, r.upper, r.tolerance, Provenance.PROXY, "Θ of Q", r.details
    )


def qd_bounds(f: PartialFunction, tol: float = DEFAULT_TOL) -> tuple[MeasureReport, MeasureReport]:
    """Bracket for quantum distinguishing complexity, up to constant factors.

    Lower side: ``QD = Ω(Adv)`` and ``QD = Ω(QC)`` with ``QC`` approximated by
    ``max_x adv(f^x)``. Upper side: ``QD <= Q = Θ(gen_adv)``.
    """
    if f.is_constant():
        zero_lo = MeasureReport("QD_lower", 0.0, 0.0, 0.0, tol, Provenance.PROXY, "constant function")
        zero_hi = MeasureReport("QD_upper", 0.0, 0.0, 0.0, tol, Provenance.PROXY, "constant function")
        return zero_lo, zero_hi
    base = adv(f, tol)
    best, source = base, "adv(f)"
    for x in f.table:
        r = adv(subfunction_fx(f, x), tol)
        if r.value > best.value:
            best, source = r, f"adv(f^x) at x={''.join(map(str, x))}"
    lower = MeasureReport(
        "QD_lower", best.value, best.lower, best.upper, tol, Provenance.PROXY, f"Ω relation; max from {source}"
    )
    g = gen_adv(f, tol)
    upper = MeasureReport("QD_upper", g.value, g.lower, g.upper, tol, Provenance.PROXY, "QD <= Q = Θ(gen_adv)")
    return lower, upper
