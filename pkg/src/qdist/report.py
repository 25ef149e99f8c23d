from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction


class Provenance(str, enum.Enum):
    EXACT_ENUMERATION = "exact-enumeration"
    EXACT_LP = "exact-LP"
    SDP_CERTIFIED = "SDP-certified"
    PROXY = "proxy"


EXACT = (Provenance.EXACT_ENUMERATION, Provenance.EXACT_LP)


@dataclass(frozen=True)
class MeasureReport:
    """One measure value with certified bounds.

    Exact provenances carry ``lower == value == upper``. ``note`` explains a
    proxy (e.g. which Theta-relation ties it to the measure it stands for).
    """

    name: str
    value: Fraction | int | float
    lower: Fraction | int | float
    upper: Fraction | int | float
    tolerance: float = 0.0
    provenance: Provenance = Provenance.EXACT_ENUMERATION
    note: str = ""
    details: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not (self.lower <= self.value <= self.upper):
            raise ValueError(f"{self.name}: bounds {self.lower} <= {self.value} <= {self.upper} violated")
        if self.provenance in EXACT and self.lower != self.upper:
            raise ValueError(f"{self.name}: exact provenance needs lower == upper")

    @classmethod
    def exact(cls, name: str, value, provenance=Provenance.EXACT_ENUMERATION, note: str = "", **details):
        return cls(name, value, value, value, 0.0, provenance, note, details)

    @property
    def is_exact(self) -> bool:
        return self.provenance in EXACT

    @property
    def gap(self) -> float:
        return float(self.upper - self.lower) if math.isfinite(float(self.upper)) else math.inf
