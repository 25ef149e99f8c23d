"""Executable reductions: distinguishers, QSZK pairs, certificate finding, RD/RS."""

from .certfind import (
    REPETITION_CONSTANT,
    FinderResult,
    WrapperResult,
    certificate_finder_P,
    repetitions,
    zero_error_wrapper,
)
from .classical import (
    DecisionTree,
    Leaf,
    Node,
    RandomizedAlgorithm,
    RSFromRD,
    cost,
    min_cross_tv,
    output_distribution,
    rd_to_rs_transform,
    read_all_tree,
    rs_to_rd_transform,
    run_randomized,
    run_tree,
    scan_tree,
    tree_from_text,
    tree_to_text,
    tv_distance,
    uniform_scan,
)
from .quantum import (
    DistinguisherOutput,
    QszkPair,
    Verification,
    check_qszk_clauses,
    collision_distinguisher,
    complement_diagnostics,
    diagonal_grid_min,
    q_to_qd,
    q_to_qszk,
    qszk_complement,
    qszk_to_qd,
    triangle_step,
    verify_distinguisher,
)

__all__ = [
    "REPETITION_CONSTANT",
    "DecisionTree",
    "DistinguisherOutput",
    "FinderResult",
    "Leaf",
    "Node",
    "QszkPair",
    "RSFromRD",
    "RandomizedAlgorithm",
    "Verification",
    "WrapperResult",
    "certificate_finder_P",
    "check_qszk_clauses",
    "collision_distinguisher",
    "complement_diagnostics",
    "cost",
    "diagonal_grid_min",
    "min_cross_tv",
    "output_distribution",
    "q_to_qd",
    "q_to_qszk",
    "qszk_complement",
    "qszk_to_qd",
    "rd_to_rs_transform",
    "read_all_tree",
    "repetitions",
    "rs_to_rd_transform",
    "run_randomized",
    "run_tree",
    "scan_tree",
    "triangle_step",
    "tree_from_text",
    "tree_to_text",
    "tv_distance",
    "uniform_scan",
    "verify_distinguisher",
    "zero_error_wrapper",
]
