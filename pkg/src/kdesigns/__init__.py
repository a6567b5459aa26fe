"""Block designs built from complete graphs.

The edges of K_n serve as varieties; the edge sets of all paths with a
fixed number of edges (for n = 2*khat - 1), or of all cycles on a fixed
number of vertices (for n = 2*khat - 3), form the blocks of balanced
incomplete block designs.  This package constructs those designs, the
special 30-block 3-design on K_5, and exploded designs; computes all
parameters in exact integer arithmetic; and verifies every claimed
property by streaming brute-force enumeration.
"""

from .constructions import (
    CapacityError,
    ImbalanceWitness,
    build_k5_special,
    build_kc,
    build_kp,
    imbalance_witness,
    kc_parameters,
    kp_parameters,
)
from .design import (
    BalanceReport,
    Design,
    DesignParams,
    MalformedDesignError,
    TParams,
    Witness,
    binom,
    check_admissibility,
    complete_parameters,
    is_symmetric,
    perm,
    verify_bibd,
    verify_t_design,
)
from .designfile import DesignFileError, format_design, parse_design, read_design, write_design
from .exploded import check_kp_equals_exploded_kc, explode_design, exploded_parameters
from .fixtures import fixture_names, load_fixture
from .graph import edge_count, edge_endpoints, edge_index
from .subgraphs import (
    canonical_cycle,
    canonical_path,
    cycle_to_block,
    enumerate_cycles,
    enumerate_k5_special,
    enumerate_paths,
    path_to_block,
)

__version__ = "0.1.0"
