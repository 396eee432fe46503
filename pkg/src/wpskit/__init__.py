"""Exact computations on weighted projective spaces P(Q).

Fans and polytopes from weights, recognition of weights, fans and
polarizations from toric data, equivalence with explicit switching
transforms, lattice points of simplices, and cohomology dimensions.
"""

from .cohomology import Indeterminate, Reason, Value, h_line_bundle, h_omega, weighted_monomial_count
from .equivalence import (
    FanSwitchData,
    PolytopeSwitchData,
    are_equivalent_fans,
    are_equivalent_polytopes,
    fan_switch_matrices,
    polytope_switch_data,
)
from .errors import (
    EnumerationBudgetExceeded,
    InternalConsistencyError,
    InvalidWeights,
    NegativeLevel,
    NotAdmissible,
    NotAWpsFan,
    NotEquivalent,
    SingularMatrixError,
    WpsError,
)
from .fan import (
    Fan,
    canonical_fan,
    fan_from_weights,
    fan_matrix,
    fan_weights,
    is_fan_of,
    is_wps_fan,
    matrix_fan,
    reduced_fan,
)
from .lattice import (
    FaceDim,
    Outside,
    bounding_box,
    contains,
    contains_strictly,
    count_lattice_points,
    enumerate_interior_points,
    enumerate_lattice_points,
    face_dimension,
    face_dimension_counts,
    reduced_polytope,
)
from .polytope import (
    SimplexPolytope,
    WppDecomposition,
    is_admissible_matrix,
    is_admissible_polytope,
    matrix_polytope,
    polytope_fan,
    polytope_from_fan,
    polytope_from_weights,
    polytope_matrix,
    polytope_polarization,
    polytope_weights,
    qpol_mat,
    weighted_transverse,
    wpp_decompose,
)
from .weights import (
    WeightsVector,
    gorenstein_index,
    is_fano,
    is_gorenstein,
    q_delta,
    q_sum,
    reduced_weights,
)

__version__ = "0.1.0"
