"""bipower: bipartite graph powers and the graph classes closed under them.

Construct odd bipartite powers, carry interval representations and monotone
consecutive arrangements through them, recognize chordal-bipartite and
k-chordal graphs, lift chordless cycles between power levels, and fuzz all
of it with seeded, reproducible campaigns.
"""

from .core import (
    BipartiteGraph,
    CycleCertificate,
    DistanceTable,
    Side,
    VertexId,
    bfs_distance,
    bipartite_power,
    build_graph,
    diameter,
    find_chordless_cycle,
    graph_from_json,
    graph_to_json,
    is_connected,
    verify_chordless,
    x_vertex,
    y_vertex,
)
from .errors import BipowerError, CapacityError, InputError, TheoremCounterexample
from .intervals import (
    Interval,
    IntervalRepresentation,
    RawEndpoint,
    canonicalize,
    intervals_to_graph,
    power_representation,
    random_interval_representation,
    raw_right_endpoint,
    verify_representation,
)
from .mca import (
    ArrangedMatrix,
    BoundaryMaps,
    McaCertificate,
    boundary_maps,
    find_mca,
    graph_to_matrix,
    greedy_distance,
    label_zeros,
    matrix_power,
    matrix_to_graph,
    row_intervals,
    verify_mca,
)
from .chordal_power import (
    CycleClassification,
    EdgeClass,
    LiftMethod,
    LiftResult,
    StrongClosureReport,
    classify_cycle_edges,
    is_chordal_bipartite,
    is_k_chordal,
    lift_chordless_cycle,
    strongly_closed_check,
)
from .harness import (
    Bounds,
    Campaign,
    FuzzReport,
    Theorem,
    enumerate_bipartite,
    gen_random_bipartite,
    gen_staircase_matrix,
    gen_subdivided_cycle,
    run_campaign,
)

__version__ = "0.1.0"
