"""Explicit Serre weights for two-dimensional mod-l representations, and adequacy checks for finite linear groups."""

from __future__ import annotations

from .chars import (
    CrysCharData,
    FieldParams,
    InertialChar,
    char_from_exponents,
    conjugate_c,
    crystalline_reduction,
    digits,
    digits_alt,
    frobenius_twist,
    fundamental,
    inflate,
    inv,
    mul,
    pow_,
    trivial,
)
from .errors import *  # noqa: F401,F403
from .weights import (
    HodgeTypeLift,
    LocalModRep,
    SerreWeight,
    WeightClass,
    WeightSet,
    WitnessJD,
    bdj_set,
    det_char,
    det_weight_set,
    enumerate_weight_classes,
    explicit_set,
    find_witness,
    ghs_inertial_set,
    global_weight_set,
    ht_data_niveau1,
    ht_data_niveau2,
    is_e_regular,
    is_regular,
    lifts_of,
    schein_set,
    solve_niveau1_big_e,
    solve_niveau2_big_e,
    verify_witness,
    weight_class,
    weights_equivalent,
)

__version__ = "0.1.0"
