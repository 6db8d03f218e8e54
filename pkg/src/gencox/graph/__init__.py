from .core import (
    INF,
    FullyColouredGraph,
    Residue,
    Violation,
    bfs_distances,
    distance,
    induced_subgraph,
    is_connected,
    residue,
    validate_graph,
)
from .io import dumps_graph, graph_from_dict, graph_to_dict, loads_graph, to_dot
from .sequences import (
    RealisabilityVerdict,
    StructureSequence,
    canonical_cyclic,
    check_realisable_233,
    enumerate_valid_hexagons,
    n_value,
    structure_sequences,
)
from .structure import is_irreducible, isomorphic, product
