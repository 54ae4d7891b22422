"""Integer cohomology of weighted projective spaces and their smooth Fano hypersurfaces."""

__version__ = "0.1.0"

from .arith import LevelInvariants, Weights, l_level, l_level_reference, l_profile, l_subset, pairwise_coprime
from .cohomology import CohomologyClass, WeightedProjectiveSpace, cup
from .enumerate import EnumerationRow, audit_against_table, enumerate_smooth_fano, load_table
from .errors import (
    InvariantViolation,
    OutsideTheoremRange,
    PreconditionError,
    WeightedFanoError,
    WeightsError,
)
from .hodge import HodgeDiamond, hodge_diamond, jacobian_series, middle_primitive_hodge
from .hypersurface import (
    UNDETERMINED,
    DiagramMultipliers,
    SmoothnessReport,
    WeightedHypersurface,
    check_generic_smooth,
    cohomology_rank_x,
    diagram_solve,
    fano_index,
    intersection_form_multiple,
    is_fano,
    is_trivial_cone,
    pullback_multiplier,
)
from .toric import build_rays, cone_multiplicity, lattice_basis, singular_locus_dimension
