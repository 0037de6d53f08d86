"""Reducibility of polynomials with a prescribed support, via Newton polytopes."""
from .classify import (
    GOOD_ALL,
    GOOD_IN_CHARS,
    NEVER_GOOD,
    Classification,
    CondI,
    CondII,
    CondIII,
    classify,
)
from .errors import FactorizationError, Inconclusive
from .factor import factor_by_certificate, factor_cond_i, factor_cond_ii, factor_cond_iii, pth_root
from .field import FieldCtx, FieldElement, FieldError, embed, frobenius_inverse, make_field, parse_field
from .kernels import BACKEND
from .oracle import ZStatus, is_absolutely_reducible, ostrowski_check, z_status
from .polytope import (
    Decomposition,
    LatticePolytope,
    enumerate_decompositions,
    hull,
    lambda_of,
    min_face,
    reconstruct,
    split_maps,
)
from .support import Polynomial, Support, inf_point, minkowski_sum, normalize, poly_mul, support_of, total_degree
from .witness import (
    CharacteristicWitness,
    WitnessTriple,
    build_characteristic_witness,
    check_B,
    lemma43_lift,
    lemma44_sets,
    lemma44_witness_pair,
    lemma48_lift,
    mixed_radix_flatten,
    transport_triple,
    verify_witness,
)

__version__ = "0.1.0"
