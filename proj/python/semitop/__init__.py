"""Finite semitopologies: opens, intertwined points, regularity and value propagation."""

from ._core import (
    Classification,
    ClassificationRow,
    OpenFamily,
    Propagation,
    SemiTopology,
    SemitopError,
    TheoremResult,
    build_splitting_assignment,
    check,
    classify,
    closure,
    dump,
    fixture_names,
    gallery,
    interior,
    intertwined,
    intertwined_of,
    is_continuous,
    is_topen,
    is_transitive,
    load,
    loads,
    minimal_closed_neighbourhoods,
    oracle_diff,
    partition,
    propagate,
    random_semitopology,
    run_cli,
    to_dot,
)

__all__ = [name for name in dir() if not name.startswith("_")]
