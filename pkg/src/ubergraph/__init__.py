"""Ubergraphs: recursive hypergraphs whose edges may contain other edges."""

from .core import Mode, NodeKind, Ubergraph, build, is_simplicial_complex
from .errors import UbergraphError
from .isomorphism import IsoWitness, is_isomorphic, is_isomorphic_direct, is_levi_isomorphic
from .levi import (
    Digraph,
    EdgeOrder,
    LeviDigraph,
    dag_to_ubergraph,
    edge_inclusion_order,
    is_dag,
    to_dot,
    uber_levi,
)
from .matrices import (
    LabeledMatrix,
    adjacency_matrix,
    degree_vector,
    incidence_matrix,
    incident_from_matrix,
    laplacian,
)
from .spectral import SpectralReport, entropy, symmetric_eigenvalues
from .traversal import (
    Path,
    adjacent,
    closure,
    components,
    degree,
    find_path,
    has_berge_cycle,
    incident,
    induced_sububergraph,
    is_connected,
    sububergraph,
    v0,
)
from .ugt import dump, load, parse, serialize

__version__ = "0.1.0"
