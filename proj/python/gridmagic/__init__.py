"""Q_d-magic and Q_d-supermagic labelings of d-dimensional grid graphs."""

from ._core import (
    Error,
    GridSpec,
    LabelingDocument,
    MagicReport,
    PredictedSums,
    SearchResult,
    base_edge_labeling,
    base_vertex_labeling,
    build_labelings,
    canonicalize,
    check_h_covering,
    closed_form_sums,
    combine_supermagic,
    confirm_construction,
    enumerate_cubes,
    enumerate_edges,
    exhaustive_search,
    generate_document,
    load,
    render,
    run_cli,
    save,
    verify_document,
    verify_edge_magic,
    verify_supermagic,
    verify_vertex_magic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
