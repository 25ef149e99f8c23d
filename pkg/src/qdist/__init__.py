"""Query-complexity workbench for small partial Boolean functions.

Subpackages: ``boolfn`` (functions and gadgets), ``numopt`` (exact LP, SDP,
Hermitian linear algebra), ``measures``, ``qsim`` (query-algorithm
simulation), ``constructions`` (executable reductions), plus the
``catalog``/``experiments``/``cli`` plumbing.
"""

__version__ = "0.1.0"

from .boolfn import PartialAssignment, PartialFunction
from .report import MeasureReport, Provenance

__all__ = ["MeasureReport", "PartialAssignment", "PartialFunction", "Provenance", "__version__"]
