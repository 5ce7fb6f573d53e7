"""Multiparameter persistence fingerprints of graphs.

Pipeline: filter a graph along one direction into nested slices, run a second
filtration inside each slice, vectorize the per-slice persistence diagrams,
and stack the vectors into a fixed-size feature matrix.
"""

__version__ = "0.1.0"

from .complexes import FilteredComplex, clique_complex, edge_graded_complex, snap_to_thresholds
from .datasets import GraphDataset, load_tudataset, save_tudataset
from .errors import ComplexError, ConfigError, DataError, EmpError, FilterError
from .export import ExportConfig, compute_features, export_features, read_features
from .filtration import (
    GraphSlice,
    SlicedFiltration,
    ThresholdGrid,
    edge_weight_slices,
    full_slice,
    pad_thresholds,
    power_filtration,
    restrict_slice,
    select_thresholds,
    slice_distances,
    sublevel_slices,
)
from .graphs import (
    EDGE_FILTER_KINDS,
    EdgeFilterValues,
    Graph,
    NODE_FILTER_KINDS,
    NodeFilterValues,
    compute_edge_filter,
    compute_node_filter,
)
from .metrics import (
    DistanceReport,
    emp_distance,
    induced_matching_distance,
    per_slice_wasserstein,
    stability_check,
    wasserstein,
    write_stability_report,
)
from .persistence import (
    PersistenceDiagram,
    betti_at,
    compute_persistence,
    compute_persistence_reduction,
    format_diagrams,
)
from .summaries import (
    CONVENTIONS,
    EmpSummary,
    FilterSpec,
    emp_betti,
    emp_summary,
    emp_summary_3d,
    filter_values,
    positive_length_shift,
    slice_diagrams,
)
from .vectorize import (
    METHODS,
    VectorizedDiagram,
    betti_curve,
    entropy_curve,
    landscape,
    persistence_image,
    sample_grid,
    silhouette,
    vector_length,
    vectorize,
)

__all__ = [name for name in dir() if not name.startswith("_")]
