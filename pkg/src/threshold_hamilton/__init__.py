"""Exact toolkit for threshold graphs and their Hamilton cycles."""

from .core import (
    CreationSymbol,
    DegreePartition,
    Graph,
    ThresholdGraph,
    WeightRealization,
    adjacency,
    as_threshold,
    check_degree_recurrence,
    degree_partition,
    from_creation_sequence,
    from_degree_sequence,
    graph_size,
    realize_weights,
    recognize,
    same_graph,
)
from .errors import CapacityError, FormatError, InvariantViolation, NotThresholdError, UsageError
from .extremal import (
    ExtremalReport,
    build_gn,
    enumerate_threshold_graphs,
    gn_formula_count,
    min_size_formula,
    verify_forced_path,
    verify_recurrence_claim,
    verify_theorem6,
    verify_theorem7,
)
from .hamilton import (
    brute_force_hamiltonian,
    count_hamilton_cycles,
    count_hamilton_cycles_through_edge,
    find_hamilton_cycle,
    hamiltonicity_verdict,
    is_hamiltonian,
)
from .key_edges import DeletionCase, DeletionOutcome, KeyEdge, delete_key_edge, key_edges

__version__ = "0.1.0"
