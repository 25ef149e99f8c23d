"""State-vector simulation of query algorithms in the standard oracle model."""

from .algorithm import OutputSpec, QueryAlgorithm, builtin_unitary, compose_builtins, from_builtins
from .hybrid import HybridResult, hybrid_check, hybrid_steps
from .simulate import RunTrace, apply_oracle, final_state, run, run_traced, sample_query_position
from .states import as_density, dephase, is_density, partial_trace, trace_distance, trace_distance_pure

__all__ = [
    "HybridResult",
    "OutputSpec",
    "QueryAlgorithm",
    "RunTrace",
    "apply_oracle",
    "as_density",
    "builtin_unitary",
    "compose_builtins",
    "dephase",
    "final_state",
    "from_builtins",
    "hybrid_check",
    "hybrid_steps",
    "is_density",
    "partial_trace",
    "run",
    "run_traced",
    "sample_query_position",
    "trace_distance",
    "trace_distance_pure",
]
