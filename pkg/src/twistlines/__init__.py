"""Exact splitting-type calculus on the projective line.

The package builds flags of subbundles of a trivial bundle over an exact
field, computes the splitting types of all their subquotients, and
certifies ampleness / degree conditions for the families of pointed lines
they parametrize on classical and isotropic Grassmannians.
"""

from .fields import QQ, PrimeField, RationalField
from .forms import BinaryForm, eval_at, form_gcd, form_mul
from .frames import (
    DegreePiece,
    GradedMatrix,
    RankProfile,
    degree_piece,
    frame_degree,
    frame_rank,
    pullback_power,
    rank_everywhere,
    transpose_dual,
    trivial_frame,
)
from .sheaves import (
    Column,
    Pairing,
    Positivity,
    SplittingType,
    Subbundle,
    cokernel_type,
    dual_type,
    is_isotropic,
    kernel_free,
    lift_through,
    perp,
    positivity,
    quotient_type,
    same_subsheaf,
    sub_lift,
    tensor_type,
    wedge2_type,
)
from .families import (
    EXCEPTIONAL_CASES,
    ExceptionalCaseError,
    FlagFamily,
    HypothesisError,
    OrbitDatum,
    build_classical,
    build_classical_orbit,
    build_E2a2b,
    build_isotropic,
    build_phi_psi,
    is_exceptional,
)
from .verify import (
    Certificate,
    SesReport,
    SweepRow,
    certify,
    check_classical,
    check_skew,
    check_symmetric_2k,
    check_symmetric_big,
    run_sweep,
    sweep_consistent,
    sweep_points,
    verify_claim_ses,
)

__version__ = "0.1.0"
