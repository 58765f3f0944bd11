"""orbitatlas: exact cohomogeneity computations for adjoint orbits.

The package computes, in exact rational arithmetic (no floating point
anywhere), the cohomogeneity of adjoint orbits of complex semi-simple Lie
algebras under their compact real forms; catalogs nilpotent orbits, their
dimensions and closure order; decomposes algebras under sl2-triples; and
assembles the resulting classification tables.  The `atlas` command line
exposes the same drivers.
"""

from .branching import branch_adjoint, restriction_matrix, weight_multiplicities
from .chevalley import (
    AlgebraElement,
    ChevalleyAlgebra,
    ad_matrix,
    build_algebra,
    centralizer_dim,
    compact_form_basis,
)
from .classify import (
    assemble_tables_2_3,
    mixed_orbit_cohom,
    product_orbit_cohom,
    reproduce_table1,
    reproduce_thm_ss_c2,
)
from .cohom import (
    CohomReport,
    SampleConfig,
    check_monotonicity,
    cohom_adjoint,
    cohom_linear_rep,
    real_orbit_dim,
    sample_orbit_point,
)
from .flags import (
    PaintedDiagram,
    classify_ss_low_cohom,
    flag_cohom,
    isotropy_roots,
    kostant_summands,
    painted,
)
from .linalg import RationalMatrix, kernel_basis, rank_rational, solve_linear
from .orbits import (
    OrbitLabel,
    Partition,
    WeightedDynkinDiagram,
    dominates,
    hasse_diagram,
    minimal_orbit,
    next_to_minimal,
    orbit_dimension,
    representative,
    valid_partitions,
    weighted_diagram,
)
from .roots import (
    CartanElement,
    CartanType,
    RootSystem,
    build_root_system,
    coweight_element,
    parse_cartan_type,
    root_centralizer_subsystem,
)
from .sl2 import (
    Sl2Triple,
    commutant_dim,
    complete_triple,
    isotypic_decomposition,
    triple_centralizer,
)

__version__ = "0.1.0"
